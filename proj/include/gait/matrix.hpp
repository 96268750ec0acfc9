#pragma once

#include "gait/dataset.hpp"

#include <cstddef>
#include <vector>

namespace gait {

/// Dense row-major matrix of doubles. Deliberately minimal: the library
/// needs storage and row access, not linear algebra.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
        return out;
    }
    void set_column(std::size_t c, const std::vector<double>& values) {
        for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = values[r];
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Identity of one feature-matrix row.
struct RowLabel {
    long long obs_id = 0;
    Session session = Session::M1;
    Condition condition = Condition::ONL;
};

/// N x 9 numeric view of a dataset in canonical column order, with the
/// labels needed to slice by condition and session later.
struct FeatureMatrix {
    Matrix values; // N x kFeatureCount
    std::vector<RowLabel> labels;

    std::size_t size() const { return labels.size(); }
};

/// Extract the numeric block of a dataset, keeping row order.
FeatureMatrix to_feature_matrix(const GaitDataset& ds);

/// Row indices whose label matches the given condition (and session).
std::vector<std::size_t> rows_for(const FeatureMatrix& m, Condition c);
std::vector<std::size_t> rows_for(const FeatureMatrix& m, Condition c, Session s);

/// Conditions present in the matrix, in canonical label order.
std::vector<Condition> conditions_present(const FeatureMatrix& m);

} // namespace gait
