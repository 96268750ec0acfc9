#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gait/errors.hpp"
#include "gait/ingest.hpp"
#include "gait/level1.hpp"
#include "gait/rng.hpp"
#include "gait/stats.hpp"
#include "gait/synth.hpp"

#include <cmath>

using namespace gait;

namespace {

CellSpec basic_cell(Condition c, Session s, std::size_t n, double target_mean,
                    double target_sd) {
    CellSpec cell;
    cell.condition = c;
    cell.session = s;
    cell.n = n;
    cell.feature_mean = {1.15, 108.0, 0.55, 0.08, 0.07, 0.06, 0.65, 5.0, -9.0};
    cell.feature_sd = {0.10, 4.0, 0.05, 0.03, 0.03, 0.03, 0.05, 1.0, 0.8};
    cell.target_gpps_mean = target_mean;
    cell.target_gpps_sd = target_sd;
    return cell;
}

std::vector<double> cell_gpps(const GaitDataset& ds, Condition c, Session s) {
    std::vector<double> out;
    for (const auto& obs : ds.observations) {
        if (obs.condition == c && obs.session == s) out.push_back(gpps(obs));
    }
    return out;
}

} // namespace

TEST_CASE("the same spec and seed generate identical datasets") {
    GeneratorSpec spec;
    spec.seed = 12;
    spec.cells = {basic_cell(Condition::ONL, Session::M1, 80, 8.3, 1.5),
                  basic_cell(Condition::OBL, Session::M2, 60, 6.5, 1.5)};
    const auto a = generate_calibrated(spec);
    const auto b = generate_calibrated(spec);
    CHECK(serialize_dataset_string(a) == serialize_dataset_string(b));

    spec.seed = 13;
    const auto c = generate_calibrated(spec);
    CHECK(serialize_dataset_string(a) != serialize_dataset_string(c));
}

TEST_CASE("invalid cell specs are rejected") {
    GeneratorSpec spec;
    spec.cells = {basic_cell(Condition::ONL, Session::M1, 50, 8.0, 1.0)};

    SUBCASE("negative feature sd") {
        spec.cells[0].feature_sd[3] = -0.01;
        CHECK_THROWS_AS(generate_calibrated(spec), InvalidSpecError);
    }
    SUBCASE("negative target sd") {
        spec.cells[0].target_gpps_sd = -1.0;
        CHECK_THROWS_AS(generate_calibrated(spec), InvalidSpecError);
    }
    SUBCASE("empty cell") {
        spec.cells[0].n = 0;
        CHECK_THROWS_AS(generate_calibrated(spec), InvalidSpecError);
    }
    SUBCASE("covariance with the wrong shape") {
        spec.cells[0].covariance = Matrix(4, 4);
        CHECK_THROWS_AS(generate_calibrated(spec), InvalidSpecError);
    }
    SUBCASE("non-PSD covariance") {
        Matrix cov(kFeatureCount, kFeatureCount);
        for (std::size_t i = 0; i < kFeatureCount; ++i) cov(i, i) = 1.0;
        cov(0, 1) = cov(1, 0) = 2.0; // 2x2 block has a negative eigenvalue
        spec.cells[0].covariance = cov;
        CHECK_THROWS_AS(generate_calibrated(spec), InvalidSpecError);
    }
    SUBCASE("zero feature variance with a positive score sd target") {
        spec.cells[0].feature_sd = {};
        spec.cells[0].target_gpps_sd = 1.0;
        CHECK_THROWS_AS(generate_calibrated(spec), InvalidSpecError);
    }
}

TEST_CASE("score-neutral offsets leave the score unchanged") {
    // trading step time against temporal asymmetry is score-neutral: both
    // carry weight -0.10, so <w, delta> is exactly zero even in floats
    std::array<double, kFeatureCount> delta = {};
    delta[kStepTime] = 0.25;
    delta[kAsymTemporal] = -0.25;

    double dot = 0.0;
    for (std::size_t f = 0; f < kFeatureCount; ++f) dot += kGppsWeights[f] * delta[f];
    CHECK(dot == 0.0); // exact

    Rng rng(66);
    for (int trial = 0; trial < 100; ++trial) {
        GaitObservation x, shifted;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            x.set_feature(f, rng.normal(0.0, 3.0));
            shifted.set_feature(f, x.feature(f) + delta[f]);
        }
        CHECK(gpps(shifted) == doctest::Approx(gpps(x)).epsilon(1e-12));
    }
}

TEST_CASE("each generated cell hits its score targets") {
    GeneratorSpec spec;
    spec.seed = 31;
    spec.cells = {basic_cell(Condition::ONL, Session::M1, 200, 8.3, 1.5),
                  basic_cell(Condition::OC3, Session::M1, 150, 8.8, 1.3),
                  basic_cell(Condition::OC3, Session::M2, 150, 9.1, 1.2)};
    const auto ds = generate_calibrated(spec);
    REQUIRE(ds.size() == 500);

    for (const auto& cell : spec.cells) {
        const auto scores = cell_gpps(ds, cell.condition, cell.session);
        REQUIRE(scores.size() == cell.n);
        CHECK(stats::mean(scores) ==
              doctest::Approx(cell.target_gpps_mean).epsilon(1e-9));
        CHECK(stats::sample_sd(scores) ==
              doctest::Approx(cell.target_gpps_sd).epsilon(1e-9));
    }
}

TEST_CASE("a zero score-sd target collapses the score exactly") {
    GeneratorSpec spec;
    spec.seed = 3;
    spec.cells = {basic_cell(Condition::OSL, Session::M1, 40, 7.9, 0.0)};
    const auto ds = generate_calibrated(spec);
    const auto scores = cell_gpps(ds, Condition::OSL, Session::M1);
    for (double s : scores) CHECK(s == doctest::Approx(7.9).epsilon(1e-9));
}

TEST_CASE("generated datasets survive the ingest round-trip unchanged") {
    const auto ds = generate_calibrated(
        {{basic_cell(Condition::ONL, Session::M1, 50, 8.3, 1.5)}, 77});
    const auto back = parse_dataset_string(serialize_dataset_string(ds));
    REQUIRE(back.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(back.observations[i].obs_id == ds.observations[i].obs_id);
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            CHECK(back.observations[i].feature(f) == ds.observations[i].feature(f));
        }
    }
}

TEST_CASE("the reference spec covers all twelve cells") {
    const auto ds = generate_calibrated(reference_spec(20, 5));
    REQUIRE(ds.size() == 12 * 20);
    for (Condition c : kAllConditions) {
        CHECK(cell_gpps(ds, c, Session::M1).size() == 20);
        CHECK(cell_gpps(ds, c, Session::M2).size() == 20);
    }
    // every row is a linear-phase observation with a unique id
    CHECK(filter_linear_phases(ds).size() == ds.size());
}

TEST_CASE("the dissociation scenario scores its pair equal and its control apart") {
    const auto ds = dissociation_scenario(7);
    const auto design = dissociation_scenario_design();

    const auto a = cell_gpps(ds, design.pair_a, Session::M1);
    const auto b = cell_gpps(ds, design.pair_b, Session::M1);
    const auto control = cell_gpps(ds, design.control, Session::M1);
    REQUIRE(a.size() == 300);
    REQUIRE(b.size() == 300);
    REQUIRE(control.size() == 300);

    CHECK(std::fabs(stats::mean(a) - stats::mean(b)) < 0.1);
    CHECK(stats::mean(control) < stats::mean(a) - 1.0); // clearly lower

    // the pair is nonetheless disjoint along the trade-off direction
    double min_a_step_time = 1e300, max_b_step_time = -1e300;
    for (const auto& obs : ds.observations) {
        if (obs.condition == design.pair_a) {
            min_a_step_time = std::min(min_a_step_time, obs.D);
        }
        if (obs.condition == design.pair_b) {
            max_b_step_time = std::max(max_b_step_time, obs.D);
        }
    }
    CHECK(min_a_step_time > max_b_step_time); // supports do not touch
}

TEST_CASE("scenario datasets are deterministic per seed and pass ingest") {
    const auto a = dissociation_scenario(7, 50);
    const auto b = dissociation_scenario(7, 50);
    CHECK(serialize_dataset_string(a) == serialize_dataset_string(b));
    CHECK_NOTHROW(parse_dataset_string(serialize_dataset_string(a)));
}
