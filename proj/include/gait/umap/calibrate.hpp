#pragma once

#include "gait/umap/knn.hpp"

#include <vector>

namespace gait::umap {

/// Per-row bandwidth calibration: rho is the nearest-neighbor distance,
/// sigma the smooth-kNN bandwidth.
struct CalibratedRow {
    double rho = 0.0;
    double sigma = 1.0;
};

/// Solve sum_j exp(−max(0, d_j − rho)/sigma) = log2(k) for sigma by
/// bisection. `dists` must be ascending and nonempty. When the target is
/// unreachable (all distances equal, or k = 1) sigma clamps to
/// 10⁻³ × mean neighbor distance (10⁻⁸ if that is zero).
CalibratedRow smooth_knn_calibrate(const std::vector<double>& dists, double tol = 1e-6);

std::vector<CalibratedRow> calibrate_all(const NeighborGraph& graph, double tol = 1e-6);

} // namespace gait::umap
