#include "gait/level2.hpp"

#include "gait/errors.hpp"
#include "gait/stats.hpp"

#include <algorithm>
#include <cmath>

namespace gait {

DispersionStats trajectory_dispersion(const Matrix& points) {
    const std::size_t n = points.rows();
    if (n < 2) throw TooFewPointsError(n, 2);
    const std::size_t d = points.cols();

    DispersionStats out;
    out.n_points = n;

    double pair_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pair_sum += stats::euclidean(points.row_ptr(i), points.row_ptr(j), d);
        }
    }
    out.mean_pairwise_dist = pair_sum / (static_cast<double>(n) * (n - 1) / 2.0);

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) centroid[k] += points(i, k);
    }
    for (double& c : centroid) c /= static_cast<double>(n);
    double sq_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sq_sum += stats::squared_euclidean(points.row_ptr(i), centroid.data(), d);
    }
    out.rms_centroid_dist = std::sqrt(sq_sum / static_cast<double>(n));

    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.path_length += stats::euclidean(points.row_ptr(i), points.row_ptr(i + 1), d);
    }
    return out;
}

std::vector<CellDispersion> dispersion_by_cell(const FeatureMatrix& m) {
    std::vector<CellDispersion> out;
    for (Condition c : kAllConditions) {
        for (Session s : kAllSessions) {
            const auto rows = rows_for(m, c, s);
            if (rows.size() < 2) continue;
            Matrix cell(rows.size(), m.values.cols());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t k = 0; k < m.values.cols(); ++k) {
                    cell(i, k) = m.values(rows[i], k);
                }
            }
            out.push_back({c, s, trajectory_dispersion(cell)});
        }
    }
    return out;
}

std::vector<Condition> rank_compactness(
    const std::vector<std::pair<Condition, DispersionStats>>& stats, CompactnessKey key) {
    std::vector<std::pair<Condition, double>> keyed;
    keyed.reserve(stats.size());
    for (const auto& [cond, disp] : stats) {
        keyed.emplace_back(cond, key == CompactnessKey::MeanPairwise ? disp.mean_pairwise_dist
                                                                     : disp.rms_centroid_dist);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return to_string(a.first) < to_string(b.first);
    });
    std::vector<Condition> out;
    out.reserve(keyed.size());
    for (const auto& [cond, unused] : keyed) out.push_back(cond);
    return out;
}

} // namespace gait
