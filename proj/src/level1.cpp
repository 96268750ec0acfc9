#include "gait/level1.hpp"

#include "gait/errors.hpp"
#include "gait/stats.hpp"

#include <algorithm>
#include <map>

namespace gait {

double s_meca_row(const double* f) {
    double score = 0.0;
    for (std::size_t i = 0; i < 7; ++i) score += kGppsWeights[i] * f[i];
    return score;
}

double gpps_row(const double* f) {
    return s_meca_row(f) + kGppsWeights[kCop] * f[kCop] + kGppsWeights[kCapa] * f[kCapa];
}

double s_meca(const GaitObservation& x) {
    const double f[7] = {x.v, x.c, x.D, x.A, x.A_P, x.A_L, x.L};
    return s_meca_row(f);
}

double gpps(const GaitObservation& x) {
    return s_meca(x) + kGppsWeights[kCop] * x.CoP + kGppsWeights[kCapa] * x.CAPA;
}

std::vector<ScoreRecord> compute_scores(const FeatureMatrix& m) {
    std::vector<ScoreRecord> out;
    out.reserve(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        const double* f = m.values.row_ptr(r);
        out.push_back({m.labels[r].obs_id, m.labels[r].session, m.labels[r].condition,
                       s_meca_row(f), gpps_row(f)});
    }
    return out;
}

std::vector<ScoreRecord> compute_scores(const GaitDataset& ds) {
    std::vector<ScoreRecord> out;
    out.reserve(ds.size());
    for (const auto& obs : ds.observations) {
        out.push_back({obs.obs_id, obs.session, obs.condition, s_meca(obs), gpps(obs)});
    }
    return out;
}

std::vector<ScoreSummary> summarize_scores(const std::vector<ScoreRecord>& scores) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> cells;
    for (const auto& rec : scores) {
        cells[{static_cast<std::size_t>(rec.condition), static_cast<std::size_t>(rec.session)}]
            .push_back(rec.gpps);
    }

    std::vector<ScoreSummary> out;
    for (auto& [key, values] : cells) {
        ScoreSummary s;
        s.condition = static_cast<Condition>(key.first);
        s.session = static_cast<Session>(key.second);
        s.n = values.size();
        s.mean = stats::mean(values);
        s.sd = stats::sample_sd(values);
        const auto q = stats::quartiles(values);
        s.q1 = q.q1;
        s.median = q.median;
        s.q3 = q.q3;
        out.push_back(s);
    }
    return out;
}

double delta_percent(double m1_mean, double m2_mean) {
    if (m1_mean == 0.0) throw DivisionByZeroError("delta_percent with zero baseline mean");
    return (m2_mean - m1_mean) / m1_mean * 100.0;
}

std::vector<DeltaRecord> compute_deltas(const std::vector<ScoreSummary>& summaries) {
    std::map<std::size_t, std::pair<const ScoreSummary*, const ScoreSummary*>> by_condition;
    for (const auto& s : summaries) {
        auto& slot = by_condition[static_cast<std::size_t>(s.condition)];
        (s.session == Session::M1 ? slot.first : slot.second) = &s;
    }

    std::vector<DeltaRecord> out;
    for (const auto& [cond, pair] : by_condition) {
        if (!pair.first || !pair.second) continue; // need both sessions
        DeltaRecord d;
        d.condition = static_cast<Condition>(cond);
        d.gpps_m1_mean = pair.first->mean;
        d.gpps_m2_mean = pair.second->mean;
        d.delta_percent = delta_percent(d.gpps_m1_mean, d.gpps_m2_mean);
        out.push_back(d);
    }
    return out;
}

} // namespace gait
