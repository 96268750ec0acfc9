#pragma once

#include "gait/matrix.hpp"

#include <cstddef>
#include <vector>

namespace gait::umap {

/// Exact k-nearest-neighbor graph. Row i holds the k nearest other rows,
/// sorted by ascending distance; ties broken by lower index.
struct NeighborGraph {
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> indices;  // N x k
    std::vector<std::vector<double>> distances;     // N x k, ascending
};

/// Brute-force Euclidean kNN. Exact by design: the data sits at desk scale
/// and determinism matters more than speed. Throws KTooLargeError unless
/// 1 <= k <= N−1.
NeighborGraph knn_graph(const Matrix& points, std::size_t k);

} // namespace gait::umap
