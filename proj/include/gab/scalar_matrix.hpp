#pragma once

#include <optional>
#include <vector>

#include "gab/scalar.hpp"

namespace gab {

/// Dense matrix over the scalar fraction field; all arithmetic exact.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols);
    static ScalarMatrix identity(int n);
    /// Row-major initializer from scalar strings, e.g. {{"0","1"},{"-q","0"}}.
    static ScalarMatrix from_strings(const std::vector<std::vector<std::string>>& rows,
                                     BaseField field = BaseField::GaussianRationals);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& m);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    ScalarMatrix transpose() const;
    ScalarMatrix conj() const;
    Scalar trace() const;
    /// Exact inverse (Gauss-Jordan); throws singular_matrix.
    ScalarMatrix inverse() const;
    bool is_invertible() const;

    bool is_zero() const;
    /// If the matrix equals lambda*I, returns lambda.
    std::optional<Scalar> as_scalar_multiple_of_identity() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

} // namespace gab
