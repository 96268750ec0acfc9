#pragma once

#include <cstddef>
#include <vector>

namespace gait::stats {

double mean(const std::vector<double>& values);

/// Sample standard deviation (n − 1 denominator); 0 for fewer than 2 values.
double sample_sd(const std::vector<double>& values);

/// Quantile at sorted position q·(n−1), linear interpolation between
/// neighbors. `sorted` must be ascending and nonempty.
double quantile_sorted(const std::vector<double>& sorted, double q);

/// Convenience overloads that sort a copy first. Throw EmptyColumnError.
double quantile(std::vector<double> values, double q);
double median(std::vector<double> values);

struct Quartiles {
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
};
Quartiles quartiles(std::vector<double> values);

double euclidean(const double* a, const double* b, std::size_t dim);
double squared_euclidean(const double* a, const double* b, std::size_t dim);

} // namespace gait::stats
