#include "gait/dissociation.hpp"

#include "gait/cluster.hpp"
#include "gait/errors.hpp"
#include "gait/stats.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace gait {

namespace {

std::vector<double> centroid_of(const Matrix& z, const std::vector<std::size_t>& rows) {
    std::vector<double> c(z.cols(), 0.0);
    for (std::size_t r : rows) {
        for (std::size_t k = 0; k < z.cols(); ++k) c[k] += z(r, k);
    }
    for (double& v : c) v /= static_cast<double>(rows.size());
    return c;
}

SeparationStats separation_between(const Matrix& z, const std::vector<std::size_t>& rows_i,
                                   const std::vector<std::size_t>& rows_j) {
    const std::size_t d = z.cols();
    SeparationStats out;

    const auto ci = centroid_of(z, rows_i);
    const auto cj = centroid_of(z, rows_j);
    out.centroid_dist = stats::euclidean(ci.data(), cj.data(), d);

    double sq_sum = 0.0;
    for (std::size_t r : rows_i) sq_sum += stats::squared_euclidean(z.row_ptr(r), ci.data(), d);
    for (std::size_t r : rows_j) sq_sum += stats::squared_euclidean(z.row_ptr(r), cj.data(), d);
    const double n_total = static_cast<double>(rows_i.size() + rows_j.size());
    out.pooled_spread = std::sqrt(sq_sum / n_total);

    if (out.pooled_spread > 0.0) {
        out.standardized_sep = out.centroid_dist / out.pooled_spread;
    } else {
        out.standardized_sep =
            out.centroid_dist > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }

    Matrix points(rows_i.size() + rows_j.size(), d);
    std::vector<std::size_t> labels(points.rows());
    std::size_t row = 0;
    for (std::size_t r : rows_i) {
        for (std::size_t k = 0; k < d; ++k) points(row, k) = z(r, k);
        labels[row++] = 0;
    }
    for (std::size_t r : rows_j) {
        for (std::size_t k = 0; k < d; ++k) points(row, k) = z(r, k);
        labels[row++] = 1;
    }
    out.silhouette = cluster::silhouette(points, labels);
    return out;
}

double pooled_sd(const ScoreSummary& a, const ScoreSummary& b) {
    const double na = static_cast<double>(a.n);
    const double nb = static_cast<double>(b.n);
    if (na + nb < 3.0) return 0.0;
    return std::sqrt(((na - 1.0) * a.sd * a.sd + (nb - 1.0) * b.sd * b.sd) / (na + nb - 2.0));
}

} // namespace

DissociationReport detect_dissociation(const std::vector<ScoreSummary>& summaries,
                                       const umap::EmbeddingResult& emb,
                                       const DissociationThresholds& thresholds) {
    if (emb.labels.empty()) throw ShapeMismatchError("empty embedding");
    const Session session = emb.labels.front().session;
    for (const auto& label : emb.labels) {
        if (label.session != session) {
            throw SessionMismatchError("embedding mixes sessions; dissociation is per session");
        }
    }

    // Conditions present in the embedding, with their row sets.
    std::map<std::size_t, std::vector<std::size_t>> rows_by_condition;
    for (std::size_t r = 0; r < emb.labels.size(); ++r) {
        rows_by_condition[static_cast<std::size_t>(emb.labels[r].condition)].push_back(r);
    }

    std::map<std::size_t, const ScoreSummary*> summary_by_condition;
    for (const auto& s : summaries) {
        if (s.session != session) continue;
        summary_by_condition[static_cast<std::size_t>(s.condition)] = &s;
    }
    for (const auto& [cond, unused] : rows_by_condition) {
        if (!summary_by_condition.count(cond)) {
            throw MissingConditionError(to_string(static_cast<Condition>(cond)));
        }
    }
    for (const auto& [cond, unused] : summary_by_condition) {
        if (!rows_by_condition.count(cond)) {
            throw MissingConditionError(to_string(static_cast<Condition>(cond)));
        }
    }

    DissociationReport report;
    report.session = session;
    report.thresholds = thresholds;

    for (auto it = rows_by_condition.begin(); it != rows_by_condition.end(); ++it) {
        for (auto jt = std::next(it); jt != rows_by_condition.end(); ++jt) {
            const auto& sum_i = *summary_by_condition.at(it->first);
            const auto& sum_j = *summary_by_condition.at(jt->first);

            PairEvidence ev;
            ev.cond_i = static_cast<Condition>(it->first);
            ev.cond_j = static_cast<Condition>(jt->first);
            ev.gpps_gap = std::fabs(sum_i.mean - sum_j.mean);
            ev.tau_score = thresholds.score_sd_fraction * pooled_sd(sum_i, sum_j);
            ev.iqr_overlap = sum_i.q1 <= sum_j.q3 && sum_j.q1 <= sum_i.q3;
            ev.score_similar = ev.gpps_gap <= ev.tau_score && ev.iqr_overlap;

            ev.separation = separation_between(emb.z, it->second, jt->second);
            ev.latent_separated =
                ev.separation.standardized_sep >= thresholds.min_standardized_sep &&
                ev.separation.silhouette >= thresholds.min_silhouette;

            ev.flagged = ev.score_similar && ev.latent_separated;
            report.pairs.push_back(ev);
        }
    }
    return report;
}

double procrustes_disparity(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatchError("procrustes inputs differ in shape");
    }
    const std::size_t n = a.rows();
    const std::size_t d = a.cols();
    if (n == 0) throw ShapeMismatchError("procrustes of empty sets");

    Eigen::MatrixXd ea(n, d);
    Eigen::MatrixXd eb(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            ea(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
            eb(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = b(i, j);
        }
    }
    ea.rowwise() -= ea.colwise().mean();
    eb.rowwise() -= eb.colwise().mean();

    const double norm_a = ea.norm();
    const double norm_b = eb.norm();
    if (norm_a == 0.0 && norm_b == 0.0) return 0.0; // two point masses: same shape
    if (norm_a == 0.0 || norm_b == 0.0) return 1.0; // point mass vs extended shape

    // Optimal rotation/reflection + scale leave residual
    // 1 − (sum of singular values)² / (|A|²|B|²); symmetric by construction.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(eb.transpose() * ea);
    const double trace_sigma = svd.singularValues().sum();
    const double disparity = 1.0 - (trace_sigma * trace_sigma) / (norm_a * norm_a * norm_b * norm_b);
    return std::max(disparity, 0.0);
}

double trustworthiness(const Matrix& high, const Matrix& low, std::size_t k) {
    const std::size_t n = high.rows();
    if (low.rows() != n) throw ShapeMismatchError("trustworthiness row counts differ");
    if (n < 2 || k < 1 || 2 * k >= n) throw KTooLargeError(k, n / 2);

    double penalty = 0.0;
    std::vector<std::pair<double, std::size_t>> order;
    std::vector<std::size_t> rank_high(n);
    order.reserve(n - 1);

    for (std::size_t i = 0; i < n; ++i) {
        order.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            order.emplace_back(
                stats::squared_euclidean(high.row_ptr(i), high.row_ptr(j), high.cols()), j);
        }
        std::sort(order.begin(), order.end());
        for (std::size_t r = 0; r < order.size(); ++r) rank_high[order[r].second] = r + 1;

        order.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            order.emplace_back(
                stats::squared_euclidean(low.row_ptr(i), low.row_ptr(j), low.cols()), j);
        }
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                          order.end());
        for (std::size_t m = 0; m < k; ++m) {
            const std::size_t r = rank_high[order[m].second];
            if (r > k) penalty += static_cast<double>(r - k);
        }
    }

    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    return 1.0 - 2.0 / (nn * kk * (2.0 * nn - 3.0 * kk - 1.0)) * penalty;
}

StabilityReport stability_assess(const FeatureMatrix& m, const umap::EmbedParams& params,
                                 const std::vector<std::uint64_t>& seeds) {
    if (seeds.size() < 2) throw ConfigError("stability assessment needs at least 2 seeds");

    const auto conditions = conditions_present(m);
    const std::size_t k = conditions.size();
    if (k == 0) throw ShapeMismatchError("no conditions in matrix");

    StabilityReport report;
    report.seeds = seeds;

    std::vector<umap::EmbeddingResult> runs;
    std::vector<std::vector<std::size_t>> partitions;
    runs.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
        runs.push_back(umap::embed(m, params, seed));
        partitions.push_back(cluster::kmeans(runs.back().z, k, seed).assignment);
    }

    double ari_sum = 0.0;
    double disp_sum = 0.0;
    for (std::size_t a = 0; a < runs.size(); ++a) {
        for (std::size_t b = a + 1; b < runs.size(); ++b) {
            RunPairStability pair;
            pair.seed_a = seeds[a];
            pair.seed_b = seeds[b];
            pair.ari = cluster::adjusted_rand_index(partitions[a], partitions[b]);
            pair.disparity = procrustes_disparity(runs[a].z, runs[b].z);
            ari_sum += pair.ari;
            disp_sum += pair.disparity;
            report.pairs.push_back(pair);
        }
    }
    const double n_pairs = static_cast<double>(report.pairs.size());
    report.mean_ari = ari_sum / n_pairs;
    report.mean_disparity = disp_sum / n_pairs;

    // Per-condition grouping consistency: how concentrated each condition's
    // rows are in a single cluster, averaged across runs.
    for (Condition c : conditions) {
        const auto rows = rows_for(m, c);
        double sum_fraction = 0.0;
        for (const auto& partition : partitions) {
            std::vector<std::size_t> counts(k, 0);
            for (std::size_t r : rows) ++counts[partition[r]];
            const std::size_t modal = *std::max_element(counts.begin(), counts.end());
            sum_fraction += static_cast<double>(modal) / static_cast<double>(rows.size());
        }
        report.per_condition.push_back({c, sum_fraction / static_cast<double>(runs.size())});
    }
    return report;
}

} // namespace gait
