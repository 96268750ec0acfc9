#include "gait/cluster.hpp"

#include "gait/errors.hpp"
#include "gait/rng.hpp"
#include "gait/stats.hpp"

#include <algorithm>
#include <limits>

namespace gait::cluster {

namespace {

Matrix init_plus_plus(const Matrix& points, std::size_t k, Rng& rng) {
    const std::size_t n = points.rows();
    const std::size_t d = points.cols();
    Matrix centers(k, d);
    std::vector<double> best_sq(n, std::numeric_limits<double>::infinity());

    std::size_t first = static_cast<std::size_t>(rng.bounded(n));
    for (std::size_t j = 0; j < d; ++j) centers(0, j) = points(first, j);

    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double sq =
                stats::squared_euclidean(points.row_ptr(i), centers.row_ptr(c - 1), d);
            if (sq < best_sq[i]) best_sq[i] = sq;
            total += best_sq[i];
        }
        std::size_t pick = 0;
        if (total <= 0.0) {
            pick = static_cast<std::size_t>(rng.bounded(n));
        } else {
            const double target = rng.uniform() * total;
            double cum = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                cum += best_sq[i];
                if (cum >= target) {
                    pick = i;
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < d; ++j) centers(c, j) = points(pick, j);
    }
    return centers;
}

KMeansResult lloyd(const Matrix& points, std::size_t k, Rng& rng) {
    const std::size_t n = points.rows();
    const std::size_t d = points.cols();
    KMeansResult res;
    res.centroids = init_plus_plus(points, k, rng);
    res.assignment.assign(n, 0);

    constexpr std::size_t kMaxIters = 100;
    for (std::size_t iter = 0; iter < kMaxIters; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_sq = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < k; ++c) {
                const double sq =
                    stats::squared_euclidean(points.row_ptr(i), res.centroids.row_ptr(c), d);
                if (sq < best_sq) {
                    best_sq = sq;
                    best = c;
                }
            }
            if (res.assignment[i] != best) {
                res.assignment[i] = best;
                changed = true;
            }
        }

        // Refill empty clusters with the globally worst-fitting point.
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) ++counts[res.assignment[i]];
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            std::size_t worst = 0;
            double worst_sq = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[res.assignment[i]] <= 1) continue;
                const double sq = stats::squared_euclidean(
                    points.row_ptr(i), res.centroids.row_ptr(res.assignment[i]), d);
                if (sq > worst_sq) {
                    worst_sq = sq;
                    worst = i;
                }
            }
            if (worst_sq < 0.0) continue; // no donor cluster with spare points
            --counts[res.assignment[worst]];
            res.assignment[worst] = c;
            ++counts[c];
            changed = true;
        }

        Matrix next(k, d, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d; ++j) next(res.assignment[i], j) += points(i, j);
        }
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t j = 0; j < d; ++j) next(c, j) /= static_cast<double>(counts[c]);
        }
        res.centroids = std::move(next);
        if (!changed) break;
    }

    res.inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        res.inertia += stats::squared_euclidean(points.row_ptr(i),
                                                res.centroids.row_ptr(res.assignment[i]), d);
    }
    return res;
}

double comb2(double m) { return m * (m - 1.0) / 2.0; }

} // namespace

KMeansResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                    std::size_t restarts) {
    const std::size_t n = points.rows();
    if (k == 0 || k > n) throw KTooLargeError(k, n);

    KMeansResult best;
    bool have_best = false;
    for (std::size_t r = 0; r < restarts; ++r) {
        Rng rng = Rng::child(seed, r);
        KMeansResult candidate = lloyd(points, k, rng);
        if (!have_best || candidate.inertia < best.inertia) {
            best = std::move(candidate);
            have_best = true;
        }
    }
    return best;
}

double silhouette(const Matrix& points, const std::vector<std::size_t>& labels) {
    const std::size_t n = points.rows();
    if (labels.size() != n) throw ShapeMismatchError("silhouette labels vs points");
    const std::size_t k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t label : labels) ++counts[label];
    std::size_t nonempty = 0;
    for (std::size_t c : counts) nonempty += (c > 0);
    if (nonempty < 2) throw ShapeMismatchError("silhouette needs at least two clusters");

    const std::size_t d = points.cols();
    double total = 0.0;
    std::vector<double> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            sums[labels[j]] += stats::euclidean(points.row_ptr(i), points.row_ptr(j), d);
        }
        const std::size_t own = labels[i];
        if (counts[own] <= 1) continue; // singleton contributes 0
        const double a = sums[own] / static_cast<double>(counts[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c == own || counts[c] == 0) continue;
            b = std::min(b, sums[c] / static_cast<double>(counts[c]));
        }
        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(n);
}

double adjusted_rand_index(const std::vector<std::size_t>& a,
                           const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) throw ShapeMismatchError("partitions differ in length");
    const std::size_t n = a.size();
    if (n == 0) throw ShapeMismatchError("empty partitions");
    if (n == 1) return 1.0; // single point: any two partitions agree

    const std::size_t ka = *std::max_element(a.begin(), a.end()) + 1;
    const std::size_t kb = *std::max_element(b.begin(), b.end()) + 1;
    std::vector<double> contingency(ka * kb, 0.0);
    std::vector<double> row_sums(ka, 0.0);
    std::vector<double> col_sums(kb, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        contingency[a[i] * kb + b[i]] += 1.0;
        row_sums[a[i]] += 1.0;
        col_sums[b[i]] += 1.0;
    }

    double sum_cells = 0.0;
    for (double c : contingency) sum_cells += comb2(c);
    double sum_rows = 0.0;
    for (double r : row_sums) sum_rows += comb2(r);
    double sum_cols = 0.0;
    for (double c : col_sums) sum_cols += comb2(c);

    const double expected = sum_rows * sum_cols / comb2(static_cast<double>(n));
    const double max_index = 0.5 * (sum_rows + sum_cols);
    const double denom = max_index - expected;
    if (denom == 0.0) return 1.0; // both partitions trivial and identical in structure
    return (sum_cells - expected) / denom;
}

} // namespace gait::cluster
