#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gait/dissociation.hpp"
#include "gait/errors.hpp"
#include "gait/rng.hpp"

#include <cmath>

using namespace gait;

namespace {

ScoreSummary summary(Condition c, Session s, double mean, double sd, double q1, double q3,
                     std::size_t n = 50) {
    ScoreSummary out;
    out.condition = c;
    out.session = s;
    out.n = n;
    out.mean = mean;
    out.sd = sd;
    out.median = (q1 + q3) / 2.0;
    out.q1 = q1;
    out.q3 = q3;
    return out;
}

/// Two 4-point groups on the x axis: group centers c0 and c1, points at
/// center ± 0.5. Within-group RMS deviation is 0.5 for both.
umap::EmbeddingResult two_groups(Condition cond0, Condition cond1, double c0, double c1,
                                 Session session = Session::M1) {
    umap::EmbeddingResult emb;
    emb.z = Matrix(8, 2);
    const double centers[2] = {c0, c1};
    const Condition conds[2] = {cond0, cond1};
    for (std::size_t g = 0; g < 2; ++g) {
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t r = g * 4 + i;
            emb.z(r, 0) = centers[g] + (i % 2 == 0 ? -0.5 : 0.5);
            emb.z(r, 1) = (i < 2 ? -0.1 : 0.1);
            emb.labels.push_back({static_cast<long long>(r + 1), session, conds[g]});
        }
    }
    return emb;
}

const auto kSimilarA = summary(Condition::ONL, Session::M1, 8.0, 1.0, 7.3, 8.7);
const auto kSimilarB = summary(Condition::OSL, Session::M1, 8.2, 1.0, 7.5, 8.9);
const auto kDifferentB = summary(Condition::OSL, Session::M1, 12.0, 1.0, 11.3, 12.7);

} // namespace

TEST_CASE("similar scores and separated clouds flag the pair") {
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 10.0);
    const auto report = detect_dissociation({kSimilarA, kSimilarB}, emb);

    REQUIRE(report.pairs.size() == 1);
    const auto& p = report.pairs[0];
    CHECK(p.cond_i == Condition::ONL);
    CHECK(p.cond_j == Condition::OSL);
    CHECK(p.gpps_gap == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(p.tau_score == doctest::Approx(0.5).epsilon(1e-12)); // 0.5 * pooled sd 1.0
    CHECK(p.iqr_overlap);
    CHECK(p.score_similar);
    CHECK(p.separation.centroid_dist == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(p.separation.standardized_sep > 2.0);
    CHECK(p.separation.silhouette > 0.25);
    CHECK(p.latent_separated);
    CHECK(p.flagged);
    REQUIRE(report.flagged().size() == 1);
}

TEST_CASE("similar scores but mixed clouds do not flag") {
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 0.2);
    const auto report = detect_dissociation({kSimilarA, kSimilarB}, emb);
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].score_similar);
    CHECK_FALSE(report.pairs[0].latent_separated);
    CHECK_FALSE(report.pairs[0].flagged);
}

TEST_CASE("different scores with separated clouds do not flag") {
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 10.0);
    const auto report = detect_dissociation({kSimilarA, kDifferentB}, emb);
    REQUIRE(report.pairs.size() == 1);
    CHECK_FALSE(report.pairs[0].score_similar);
    CHECK_FALSE(report.pairs[0].iqr_overlap);
    CHECK(report.pairs[0].latent_separated);
    CHECK_FALSE(report.pairs[0].flagged);
}

TEST_CASE("different scores and mixed clouds do not flag") {
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 0.2);
    const auto report = detect_dissociation({kSimilarA, kDifferentB}, emb);
    REQUIRE(report.pairs.size() == 1);
    CHECK_FALSE(report.pairs[0].flagged);
}

TEST_CASE("summaries from the other session are ignored") {
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 10.0);
    const auto extra = summary(Condition::OC3, Session::M2, 5.0, 1.0, 4.3, 5.7);
    const auto report = detect_dissociation({kSimilarA, kSimilarB, extra}, emb);
    CHECK(report.pairs.size() == 1); // OC3/M2 plays no role
    CHECK(report.session == Session::M1);
}

TEST_CASE("condition sets must agree between scores and embedding") {
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 10.0);
    // embedding has OSL, summaries do not
    CHECK_THROWS_AS(detect_dissociation({kSimilarA}, emb), MissingConditionError);
    // summaries have OC3/M1, embedding does not
    const auto extra = summary(Condition::OC3, Session::M1, 5.0, 1.0, 4.3, 5.7);
    CHECK_THROWS_AS(detect_dissociation({kSimilarA, kSimilarB, extra}, emb),
                    MissingConditionError);
}

TEST_CASE("mixed-session embeddings are rejected") {
    auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 10.0);
    emb.labels[3].session = Session::M2;
    CHECK_THROWS_AS(detect_dissociation({kSimilarA, kSimilarB}, emb),
                    SessionMismatchError);
}

TEST_CASE("three conditions produce all three unordered pairs") {
    umap::EmbeddingResult emb;
    emb.z = Matrix(12, 2);
    const Condition conds[3] = {Condition::ONL, Condition::OSL, Condition::OC3};
    Rng rng(3);
    for (std::size_t g = 0; g < 3; ++g) {
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t r = g * 4 + i;
            emb.z(r, 0) = 20.0 * static_cast<double>(g) + rng.normal(0.0, 0.3);
            emb.z(r, 1) = rng.normal(0.0, 0.3);
            emb.labels.push_back({static_cast<long long>(r + 1), Session::M1, conds[g]});
        }
    }
    const auto third = summary(Condition::OC3, Session::M1, 8.1, 1.0, 7.4, 8.8);
    const auto report = detect_dissociation({kSimilarA, kSimilarB, third}, emb);
    CHECK(report.pairs.size() == 3);
    // all three pairs are score-similar and separated here
    for (const auto& p : report.pairs) CHECK(p.flagged);
}

TEST_CASE("touching interquartile ranges count as overlap") {
    const auto a = summary(Condition::ONL, Session::M1, 8.0, 1.0, 7.0, 8.0);
    const auto b = summary(Condition::OSL, Session::M1, 8.2, 1.0, 8.0, 9.0);
    const auto emb = two_groups(Condition::ONL, Condition::OSL, 0.0, 10.0);
    const auto report = detect_dissociation({a, b}, emb);
    CHECK(report.pairs[0].iqr_overlap);
}

// ---------------------------------------------------------------- procrustes

TEST_CASE("a cloud has zero disparity with itself") {
    Rng rng(5);
    Matrix a(30, 2);
    for (auto& v : a.data()) v = rng.normal();
    CHECK(procrustes_disparity(a, a) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("rotation, scaling, translation, and reflection cost nothing") {
    Rng rng(6);
    Matrix a(40, 2);
    for (auto& v : a.data()) v = rng.normal();

    const double theta = 0.83, scale = 2.7, tx = 11.0, ty = -4.0;
    Matrix rotated(40, 2);
    Matrix reflected(40, 2);
    for (std::size_t i = 0; i < 40; ++i) {
        const double x = a(i, 0), y = a(i, 1);
        rotated(i, 0) = scale * (std::cos(theta) * x - std::sin(theta) * y) + tx;
        rotated(i, 1) = scale * (std::sin(theta) * x + std::cos(theta) * y) + ty;
        reflected(i, 0) = -x;
        reflected(i, 1) = y;
    }
    CHECK(procrustes_disparity(a, rotated) < 1e-10);
    CHECK(procrustes_disparity(a, reflected) < 1e-10);
}

TEST_CASE("disparity is symmetric and in range for random clouds") {
    Rng rng(7);
    Matrix a(50, 2), b(50, 2);
    for (auto& v : a.data()) v = rng.normal();
    for (auto& v : b.data()) v = rng.normal();
    const double ab = procrustes_disparity(a, b);
    CHECK(ab == doctest::Approx(procrustes_disparity(b, a)).epsilon(1e-12));
    CHECK(ab > 0.5); // independent clouds share no shape
    CHECK(ab <= 1.0);
}

TEST_CASE("degenerate clouds follow the documented conventions") {
    Matrix zero(5, 2); // all points coincide after centering
    Matrix live(5, 2);
    Rng rng(8);
    for (auto& v : live.data()) v = rng.normal();
    CHECK(procrustes_disparity(zero, zero) == 0.0);
    CHECK(procrustes_disparity(zero, live) == 1.0);
    CHECK(procrustes_disparity(live, zero) == 1.0);

    Matrix other(6, 2);
    CHECK_THROWS_AS(procrustes_disparity(live, other), ShapeMismatchError);
}

// ----------------------------------------------------------- trustworthiness

TEST_CASE("an identical embedding is perfectly trustworthy") {
    Rng rng(9);
    Matrix high(60, 5);
    for (auto& v : high.data()) v = rng.normal();
    CHECK(trustworthiness(high, high, 10) == 1.0);
}

TEST_CASE("scrambling the embedding destroys trustworthiness") {
    Rng rng(10);
    Matrix high(100, 2);
    for (auto& v : high.data()) v = rng.normal();

    Matrix low = high;
    std::vector<std::size_t> perm(100);
    for (std::size_t i = 0; i < 100; ++i) perm[i] = i;
    // seeded permutation of rows
    for (std::size_t i = 99; i > 0; --i) {
        const std::size_t j = rng.bounded(i + 1);
        std::swap(perm[i], perm[j]);
    }
    for (std::size_t i = 0; i < 100; ++i) {
        low(i, 0) = high(perm[i], 0);
        low(i, 1) = high(perm[i], 1);
    }

    const double t_same = trustworthiness(high, high, 15);
    const double t_scrambled = trustworthiness(high, low, 15);
    CHECK(t_same == 1.0);
    CHECK(t_scrambled < 0.85);
    CHECK(t_scrambled >= 0.0);
}

TEST_CASE("neighborhood size must leave room for ranking") {
    Matrix m(10, 2);
    CHECK_THROWS_AS(trustworthiness(m, m, 5), KTooLargeError); // needs 2k < N
    CHECK_THROWS_AS(trustworthiness(m, m, 0), KTooLargeError);
}

// ----------------------------------------------------------------- stability

namespace {

FeatureMatrix stability_fixture() {
    FeatureMatrix m;
    const std::size_t per = 25;
    m.values = Matrix(3 * per, 4);
    Rng rng(40);
    const Condition conds[3] = {Condition::ONL, Condition::OBL, Condition::OC3};
    for (std::size_t g = 0; g < 3; ++g) {
        for (std::size_t i = 0; i < per; ++i) {
            const std::size_t r = g * per + i;
            for (std::size_t d = 0; d < 4; ++d) {
                m.values(r, d) = (d == 0 ? 25.0 * static_cast<double>(g) : 0.0) + rng.normal();
            }
            m.labels.push_back({static_cast<long long>(r + 1), Session::M1, conds[g]});
        }
    }
    return m;
}

} // namespace

TEST_CASE("repeating one seed gives perfect agreement") {
    const auto m = stability_fixture();
    umap::EmbedParams params;
    params.epochs = 60;
    const auto report = stability_assess(m, params, {42, 42});
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].ari == 1.0);
    CHECK(report.pairs[0].disparity < 1e-10);
    CHECK(report.mean_ari == 1.0);
    CHECK(report.mean_disparity < 1e-10);
}

TEST_CASE("different seeds on clean clusters still agree on membership") {
    const auto m = stability_fixture();
    umap::EmbedParams params;
    params.epochs = 150;
    const auto report = stability_assess(m, params, {1, 2, 3});
    REQUIRE(report.pairs.size() == 3);
    CHECK(report.mean_ari > 0.8);
    for (const auto& p : report.pairs) {
        CHECK(p.ari >= -1.0);
        CHECK(p.ari <= 1.0);
        CHECK(p.disparity >= 0.0);
        CHECK(p.disparity <= 1.0);
    }
    REQUIRE(report.per_condition.size() == 3);
    for (const auto& c : report.per_condition) {
        CHECK(c.consistency >= 0.0);
        CHECK(c.consistency <= 1.0);
    }
    CHECK(report.seeds == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("stability needs at least two seeds") {
    const auto m = stability_fixture();
    umap::EmbedParams params;
    CHECK_THROWS_AS(stability_assess(m, params, {7}), ConfigError);
    CHECK_THROWS_AS(stability_assess(m, params, {}), ConfigError);
}
