#pragma once

#include "gait/matrix.hpp"

#include <array>
#include <vector>

namespace gait {

/// Fixed composite-score weights over the canonical feature columns
/// (v, c, D, A, A_P, A_L, L, CoP, CAPA). The capacitive index enters
/// unweighted. These are score definitions, not tuning knobs.
inline constexpr std::array<double, kFeatureCount> kGppsWeights = {
    0.15, 0.15, -0.10, -0.10, -0.10, -0.05, 0.10, 0.15, 1.0};

/// Mechanical sub-score over the seven spatiotemporal features:
/// 0.15v + 0.15c − 0.10D − 0.10A − 0.10A_P − 0.05A_L + 0.10L.
double s_meca(const GaitObservation& x);
double s_meca_row(const double* features);

/// Global score: s_meca + 0.15·CoP + CAPA.
double gpps(const GaitObservation& x);
double gpps_row(const double* features);

struct ScoreRecord {
    long long obs_id = 0;
    Session session = Session::M1;
    Condition condition = Condition::ONL;
    double s_meca = 0.0;
    double gpps = 0.0;
};

/// Scores per row of a (typically preprocessed) feature matrix.
std::vector<ScoreRecord> compute_scores(const FeatureMatrix& m);

/// Scores straight from raw observations (sensitivity-analysis mode).
std::vector<ScoreRecord> compute_scores(const GaitDataset& ds);

struct ScoreSummary {
    Condition condition = Condition::ONL;
    Session session = Session::M1;
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0; // sample, n − 1
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
};

/// One summary per (condition, session) cell present in the records, in
/// canonical condition order then session order. Cells absent from the
/// data are simply absent from the result.
std::vector<ScoreSummary> summarize_scores(const std::vector<ScoreRecord>& scores);

/// Relative between-session change in percent:
/// (m2_mean − m1_mean) / m1_mean × 100. Throws DivisionByZeroError.
double delta_percent(double m1_mean, double m2_mean);

struct DeltaRecord {
    Condition condition = Condition::ONL;
    double gpps_m1_mean = 0.0;
    double gpps_m2_mean = 0.0;
    double delta_percent = 0.0;
};

/// Per-condition session change, for conditions present in both sessions.
std::vector<DeltaRecord> compute_deltas(const std::vector<ScoreSummary>& summaries);

} // namespace gait
