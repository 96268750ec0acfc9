#pragma once

#include "gait/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gait {

/// Descriptive spread statistics of one state-space trajectory.
struct DispersionStats {
    double mean_pairwise_dist = 0.0; // mean Euclidean distance over unordered pairs
    double rms_centroid_dist = 0.0;  // RMS distance to the trajectory centroid
    double path_length = 0.0;        // sum of consecutive-point distances
    std::size_t n_points = 0;
};

/// Rows of `points` are trajectory samples in acquisition order.
/// Requires at least 2 points; throws TooFewPointsError.
DispersionStats trajectory_dispersion(const Matrix& points);

/// Dispersion per (condition, session) cell present in the matrix.
/// Cells with fewer than 2 rows cannot form a trajectory and are skipped.
struct CellDispersion {
    Condition condition = Condition::ONL;
    Session session = Session::M1;
    DispersionStats stats;
};
std::vector<CellDispersion> dispersion_by_cell(const FeatureMatrix& m);

enum class CompactnessKey { MeanPairwise, RmsCentroid };

/// Conditions sorted ascending by the chosen dispersion statistic (most
/// compact first); ties broken by condition label, lexicographically.
std::vector<Condition> rank_compactness(
    const std::vector<std::pair<Condition, DispersionStats>>& stats, CompactnessKey key);

} // namespace gait
