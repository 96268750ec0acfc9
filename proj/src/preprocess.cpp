#include "gait/preprocess.hpp"

#include "gait/errors.hpp"
#include "gait/stats.hpp"

#include <algorithm>

namespace gait {

std::pair<std::vector<double>, std::size_t> iqr_replace_column(const std::vector<double>& col,
                                                               double factor) {
    if (col.empty()) throw EmptyColumnError("iqr_replace_column");
    const auto q = stats::quartiles(col);
    const double iqr = q.q3 - q.q1;
    const double lo = q.q1 - factor * iqr;
    const double hi = q.q3 + factor * iqr;

    std::vector<double> out(col);
    std::size_t replaced = 0;
    for (double& v : out) {
        if (v < lo || v > hi) {
            v = q.median;
            ++replaced;
        }
    }
    return {std::move(out), replaced};
}

std::pair<Matrix, ScalerParams> minmax_normalize(const Matrix& m) {
    ScalerParams params;
    params.columns.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double lo = m(0, c);
        double hi = m(0, c);
        for (std::size_t r = 1; r < m.rows(); ++r) {
            lo = std::min(lo, m(r, c));
            hi = std::max(hi, m(r, c));
        }
        params.columns[c] = {lo, hi};
    }
    return {apply_scaler(m, params), params};
}

Matrix apply_scaler(const Matrix& m, const ScalerParams& params) {
    if (params.columns.size() != m.cols()) {
        throw ShapeMismatchError("scaler has " + std::to_string(params.columns.size()) +
                                 " columns, matrix has " + std::to_string(m.cols()));
    }
    Matrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto [lo, hi] = params.columns[c];
        const double span = hi - lo;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out(r, c) = span > 0.0 ? (m(r, c) - lo) / span : 0.0;
        }
    }
    return out;
}

PreprocessResult preprocess_pipeline(const GaitDataset& ds, double iqr_factor) {
    FeatureMatrix fm = to_feature_matrix(ds);
    PreprocessResult res;
    res.audit.iqr_factor = iqr_factor;
    res.audit.replaced.resize(fm.values.cols());

    for (std::size_t c = 0; c < fm.values.cols(); ++c) {
        auto [cleaned, count] = iqr_replace_column(fm.values.column(c), iqr_factor);
        fm.values.set_column(c, cleaned);
        res.audit.replaced[c] = count;
    }

    auto [normalized, params] = minmax_normalize(fm.values);
    res.matrix.values = std::move(normalized);
    res.matrix.labels = std::move(fm.labels);
    res.scaler = std::move(params);
    return res;
}

} // namespace gait
