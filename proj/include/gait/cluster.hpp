#pragma once

#include "gait/matrix.hpp"

#include <cstdint>
#include <vector>

namespace gait::cluster {

struct KMeansResult {
    std::vector<std::size_t> assignment; // per row, cluster id in [0, k)
    Matrix centroids;                    // k x d
    double inertia = 0.0;                // sum of squared distances to assigned centroid
};

/// Seeded k-means: k-means++ initialization, Lloyd iterations, `restarts`
/// independent starts, best inertia kept (ties: earliest restart). Empty
/// clusters are refilled with the point farthest from its centroid.
KMeansResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                    std::size_t restarts = 20);

/// Mean silhouette coefficient over all points. Points in singleton
/// clusters contribute 0. Requires at least two distinct labels.
double silhouette(const Matrix& points, const std::vector<std::size_t>& labels);

/// Adjusted Rand index between two partitions of the same points.
/// Trivially identical partitions (degenerate denominator) score 1.
double adjusted_rand_index(const std::vector<std::size_t>& a,
                           const std::vector<std::size_t>& b);

} // namespace gait::cluster
