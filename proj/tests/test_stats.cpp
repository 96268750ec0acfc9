#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gait/errors.hpp"
#include "gait/rng.hpp"
#include "gait/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace gait;
using namespace gait::stats;

TEST_CASE("mean and sample sd on hand-checked values") {
    const std::vector<double> xs = {8.0, 10.0};
    CHECK(mean(xs) == 9.0);
    CHECK(sample_sd(xs) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    CHECK(sample_sd({5.0}) == 0.0);
    CHECK(sample_sd({3.0, 3.0, 3.0}) == 0.0);
    CHECK_THROWS_AS(mean({}), EmptyColumnError);
}

TEST_CASE("quantiles interpolate linearly on sorted position q*(n-1)") {
    const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0, 100.0};
    // positions: q1 -> 1.0, median -> 2.0, q3 -> 3.0
    const auto q = quartiles(xs);
    CHECK(q.q1 == 2.0);
    CHECK(q.median == 3.0);
    CHECK(q.q3 == 4.0);

    // even length: median halfway between the middle pair
    CHECK(median({1.0, 2.0, 3.0, 4.0}) == 2.5);
    CHECK(quantile({1.0, 2.0, 3.0, 4.0}, 0.25) == 1.75);

    // single element: every quantile is that element
    CHECK(quantile({7.0}, 0.0) == 7.0);
    CHECK(quantile({7.0}, 0.5) == 7.0);
    CHECK(quantile({7.0}, 1.0) == 7.0);
}

TEST_CASE("quantile endpoints are the minimum and maximum") {
    Rng rng(5);
    std::vector<double> xs;
    for (int i = 0; i < 101; ++i) xs.push_back(rng.normal());
    CHECK(quantile(xs, 0.0) == *std::min_element(xs.begin(), xs.end()));
    CHECK(quantile(xs, 1.0) == *std::max_element(xs.begin(), xs.end()));
}

TEST_CASE("quantile is monotone in q and order-insensitive") {
    Rng rng(17);
    std::vector<double> xs;
    for (int i = 0; i < 57; ++i) xs.push_back(rng.uniform(-3.0, 9.0));

    double prev = quantile(xs, 0.0);
    for (double q = 0.05; q <= 1.0 + 1e-12; q += 0.05) {
        const double cur = quantile(xs, std::min(q, 1.0));
        CHECK(cur >= prev);
        prev = cur;
    }

    std::vector<double> shuffled = xs;
    rng.shuffle(shuffled);
    CHECK(quantile(shuffled, 0.37) == quantile(xs, 0.37));
}

TEST_CASE("euclidean distance matches the explicit formula") {
    const double a[3] = {0.0, 0.0, 0.0};
    const double b[3] = {3.0, 4.0, 0.0};
    CHECK(euclidean(a, b, 3) == 5.0);
    CHECK(squared_euclidean(a, b, 3) == 25.0);
    CHECK(euclidean(a, a, 3) == 0.0);
}
