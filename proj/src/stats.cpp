#include "gait/stats.hpp"

#include "gait/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gait::stats {

double mean(const std::vector<double>& values) {
    if (values.empty()) throw EmptyColumnError("mean of nothing");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_sd(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(n - 1));
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw EmptyColumnError("quantile of nothing");
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = q * static_cast<double>(n - 1);
    const double lo_pos = std::floor(pos);
    std::size_t lo = static_cast<std::size_t>(lo_pos);
    if (lo >= n - 1) return sorted[n - 1];
    const double frac = pos - lo_pos;
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double quantile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, q);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

Quartiles quartiles(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    Quartiles out;
    out.q1 = quantile_sorted(values, 0.25);
    out.median = quantile_sorted(values, 0.5);
    out.q3 = quantile_sorted(values, 0.75);
    return out;
}

double squared_euclidean(const double* a, const double* b, std::size_t dim) {
    double ss = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d = a[i] - b[i];
        ss += d * d;
    }
    return ss;
}

double euclidean(const double* a, const double* b, std::size_t dim) {
    return std::sqrt(squared_euclidean(a, b, dim));
}

} // namespace gait::stats
