#include "gait/umap/calibrate.hpp"

#include "gait/errors.hpp"

#include <cmath>
#include <limits>

namespace gait::umap {

namespace {

double weight_sum(const std::vector<double>& dists, double rho, double sigma) {
    double sum = 0.0;
    for (double d : dists) {
        const double gap = d - rho;
        sum += gap > 0.0 ? std::exp(-gap / sigma) : 1.0;
    }
    return sum;
}

} // namespace

CalibratedRow smooth_knn_calibrate(const std::vector<double>& dists, double tol) {
    if (dists.empty()) throw EmptyColumnError("neighbor distances");
    const std::size_t k = dists.size();

    CalibratedRow row;
    row.rho = dists.front();

    double mean_dist = 0.0;
    for (double d : dists) mean_dist += d;
    mean_dist /= static_cast<double>(k);
    const double sigma_min = mean_dist > 0.0 ? 1e-3 * mean_dist : 1e-8;

    const double target = std::log2(static_cast<double>(k));

    // weight_sum is monotone increasing in sigma, from the count of
    // rho-distance neighbors up to k; bisect on sigma.
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    double mid = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
        const double sum = weight_sum(dists, row.rho, mid);
        if (std::fabs(sum - target) < tol) break;
        if (sum > target) {
            hi = mid;
            mid = (lo + hi) / 2.0;
        } else {
            lo = mid;
            mid = std::isinf(hi) ? mid * 2.0 : (lo + hi) / 2.0;
        }
    }
    row.sigma = mid < sigma_min ? sigma_min : mid;
    return row;
}

std::vector<CalibratedRow> calibrate_all(const NeighborGraph& graph, double tol) {
    std::vector<CalibratedRow> out;
    out.reserve(graph.distances.size());
    for (const auto& dists : graph.distances) {
        out.push_back(smooth_knn_calibrate(dists, tol));
    }
    return out;
}

} // namespace gait::umap
