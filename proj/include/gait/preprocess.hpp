#pragma once

#include "gait/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gait {

/// Per-column min/max recorded during normalization so the identical affine
/// map can be re-applied later.
struct ScalerParams {
    struct Column {
        double min = 0.0;
        double max = 0.0;
    };
    std::vector<Column> columns;
    std::string scope = "global";
};

/// Replacement counts per column, in canonical column order.
struct PreprocessAudit {
    double iqr_factor = 1.5;
    std::vector<std::size_t> replaced;

    std::size_t total_replaced() const {
        std::size_t sum = 0;
        for (std::size_t r : replaced) sum += r;
        return sum;
    }
};

/// Replace values outside [Q1 − factor·IQR, Q3 + factor·IQR] by the column
/// median. Quartiles and median come from the ORIGINAL column. Returns the
/// cleaned column and the replacement count. Throws EmptyColumnError.
std::pair<std::vector<double>, std::size_t> iqr_replace_column(const std::vector<double>& col,
                                                               double factor);

/// Column-wise (x − min)/(max − min) into [0,1]; constant columns map to
/// all zeros. Pure: returns the mapped matrix and the scaler used.
std::pair<Matrix, ScalerParams> minmax_normalize(const Matrix& m);

/// Re-apply a stored scaler. Applying the scaler returned by
/// minmax_normalize to its own input reproduces the output exactly.
Matrix apply_scaler(const Matrix& m, const ScalerParams& params);

struct PreprocessResult {
    FeatureMatrix matrix;
    ScalerParams scaler;
    PreprocessAudit audit;
};

/// Full cleaning pipeline on a (linear-phase) dataset: per-column IQR
/// replacement first, then global min–max normalization.
PreprocessResult preprocess_pipeline(const GaitDataset& ds, double iqr_factor = 1.5);

} // namespace gait
