#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gait/errors.hpp"
#include "gait/level1.hpp"
#include "gait/rng.hpp"

#include <cmath>

using namespace gait;

namespace {

GaitObservation obs_with(double v, double c, double D, double A, double A_P, double A_L,
                         double L, double CoP = 0.0, double CAPA = 0.0) {
    GaitObservation x;
    x.v = v;
    x.c = c;
    x.D = D;
    x.A = A;
    x.A_P = A_P;
    x.A_L = A_L;
    x.L = L;
    x.CoP = CoP;
    x.CAPA = CAPA;
    return x;
}

ScoreRecord record(Condition c, Session s, double gpps_value) {
    ScoreRecord r;
    r.condition = c;
    r.session = s;
    r.gpps = gpps_value;
    return r;
}

} // namespace

TEST_CASE("mechanical score on a hand computation") {
    // 0.15*0.8 + 0.15*0.6 - 0.10*0.5 - 0.10*0.2 - 0.10*0.1 - 0.05*0.3 + 0.10*0.7
    // = 0.12 + 0.09 - 0.05 - 0.02 - 0.01 - 0.015 + 0.07
    const auto x = obs_with(0.8, 0.6, 0.5, 0.2, 0.1, 0.3, 0.7);
    CHECK(s_meca(x) == doctest::Approx(0.185).epsilon(1e-12));
}

TEST_CASE("global score adds the pressure term and the unweighted capacitive index") {
    // an observation whose mechanical score is exactly 0.195
    auto x = obs_with(1.3, 0, 0, 0, 0, 0, 0, 0.5, 0.2);
    REQUIRE(s_meca(x) == doctest::Approx(0.195).epsilon(1e-12));
    CHECK(gpps(x) == doctest::Approx(0.47).epsilon(1e-12)); // 0.195 + 0.15*0.5 + 0.2

    // CAPA enters with weight exactly 1
    auto y = x;
    y.CAPA += 1.25;
    CHECK(gpps(y) - gpps(x) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("all-zero observation scores zero") {
    const auto x = obs_with(0, 0, 0, 0, 0, 0, 0);
    CHECK(s_meca(x) == 0.0);
    CHECK(gpps(x) == 0.0);
}

TEST_CASE("each weight matches the definition via unit vectors") {
    const double expected[kFeatureCount] = {0.15, 0.15, -0.10, -0.10, -0.10,
                                            -0.05, 0.10, 0.15, 1.0};
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        GaitObservation x;
        x.set_feature(f, 1.0);
        CHECK(gpps(x) == doctest::Approx(expected[f]).epsilon(1e-15));
        CHECK(kGppsWeights[f] == expected[f]);
    }
}

TEST_CASE("scores are linear in the features") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        GaitObservation x, y, sum;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            x.set_feature(f, rng.normal());
            y.set_feature(f, rng.normal());
            sum.set_feature(f, x.feature(f) + y.feature(f));
        }
        CHECK(gpps(sum) == doctest::Approx(gpps(x) + gpps(y)).epsilon(1e-12));
        CHECK(s_meca(sum) == doctest::Approx(s_meca(x) + s_meca(y)).epsilon(1e-12));
    }
}

TEST_CASE("relative change in percent on published score pairs") {
    // mean GPPS per condition, sessions M1 -> M2
    CHECK(delta_percent(8.3, 8.5) == doctest::Approx(2.41).epsilon(0.002));
    CHECK(delta_percent(7.9, 7.9) == 0.0);
    CHECK(delta_percent(6.2, 6.5) == doctest::Approx(4.84).epsilon(0.002));
    CHECK(delta_percent(9.1, 9.4) == doctest::Approx(3.30).epsilon(0.002));
    CHECK(delta_percent(8.8, 9.1) == doctest::Approx(3.41).epsilon(0.002));
    CHECK(delta_percent(7.5, 7.8) == doctest::Approx(4.00).epsilon(0.002));
}

TEST_CASE("relative change is zero for equal means and fails on a zero baseline") {
    CHECK(delta_percent(3.7, 3.7) == 0.0);
    CHECK_THROWS_AS(delta_percent(0.0, 1.0), DivisionByZeroError);
}

TEST_CASE("summaries group by condition and session in canonical order") {
    std::vector<ScoreRecord> scores;
    scores.push_back(record(Condition::OC3, Session::M2, 10.0));
    scores.push_back(record(Condition::ONL, Session::M1, 8.0));
    scores.push_back(record(Condition::ONL, Session::M1, 10.0));
    scores.push_back(record(Condition::OC3, Session::M1, 5.0));

    const auto sums = summarize_scores(scores);
    REQUIRE(sums.size() == 3);
    CHECK(sums[0].condition == Condition::ONL);
    CHECK(sums[0].session == Session::M1);
    CHECK(sums[0].n == 2);
    CHECK(sums[0].mean == 9.0);
    CHECK(sums[0].sd == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sums[0].median == 9.0);
    CHECK(sums[0].q1 == 8.5);
    CHECK(sums[0].q3 == 9.5);

    CHECK(sums[1].condition == Condition::OC3);
    CHECK(sums[1].session == Session::M1);
    CHECK(sums[1].n == 1);
    CHECK(sums[1].sd == 0.0);
    CHECK(sums[1].median == 5.0);

    CHECK(sums[2].session == Session::M2);
}

TEST_CASE("quartile ordering holds on every summary") {
    Rng rng(77);
    std::vector<ScoreRecord> scores;
    for (int i = 0; i < 400; ++i) {
        scores.push_back(record(kAllConditions[rng.bounded(6)],
                                rng.bounded(2) ? Session::M1 : Session::M2,
                                rng.normal(8.0, 1.5)));
    }
    for (const auto& s : summarize_scores(scores)) {
        CHECK(s.q1 <= s.median);
        CHECK(s.median <= s.q3);
        CHECK(s.sd >= 0.0);
        CHECK(s.n >= 1);
    }
}

TEST_CASE("between-session deltas only appear for conditions in both sessions") {
    std::vector<ScoreRecord> scores;
    scores.push_back(record(Condition::ONL, Session::M1, 8.3));
    scores.push_back(record(Condition::ONL, Session::M2, 8.5));
    scores.push_back(record(Condition::OBL, Session::M1, 6.2)); // no M2 data

    const auto deltas = compute_deltas(summarize_scores(scores));
    REQUIRE(deltas.size() == 1);
    CHECK(deltas[0].condition == Condition::ONL);
    CHECK(deltas[0].gpps_m1_mean == 8.3);
    CHECK(deltas[0].gpps_m2_mean == 8.5);
    CHECK(deltas[0].delta_percent == doctest::Approx(100.0 * 0.2 / 8.3).epsilon(1e-12));
}

TEST_CASE("matrix and observation scoring agree") {
    Rng rng(9);
    GaitDataset ds;
    for (int i = 0; i < 30; ++i) {
        GaitObservation x;
        x.obs_id = i + 1;
        x.session = rng.bounded(2) ? Session::M1 : Session::M2;
        x.condition = kAllConditions[rng.bounded(6)];
        for (std::size_t f = 0; f < kFeatureCount; ++f) x.set_feature(f, rng.normal());
        ds.observations.push_back(x);
    }
    const auto direct = compute_scores(ds);
    const auto via_matrix = compute_scores(to_feature_matrix(ds));
    REQUIRE(direct.size() == via_matrix.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(direct[i].obs_id == via_matrix[i].obs_id);
        CHECK(direct[i].gpps == via_matrix[i].gpps);
        CHECK(direct[i].s_meca == via_matrix[i].s_meca);
    }
}
