#include "gab/scalar_matrix.hpp"

namespace gab {

ScalarMatrix::ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_mismatch("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Scalar(0));
}

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ScalarMatrix ScalarMatrix::from_strings(const std::vector<std::vector<std::string>>& rows,
                                        BaseField field) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ScalarMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw shape_mismatch("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = parse_scalar(rows[i][j], field);
    }
    return m;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("matrix add");
    ScalarMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("matrix sub");
    ScalarMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw shape_mismatch("matrix mul");
    ScalarMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& m) {
    ScalarMatrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = c * m.data_[i];
    return r;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ScalarMatrix ScalarMatrix::conj() const {
    ScalarMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].conj();
    return r;
}

Scalar ScalarMatrix::trace() const {
    if (!is_square()) throw shape_mismatch("trace of non-square matrix");
    Scalar t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (!is_square()) throw shape_mismatch("inverse of non-square matrix");
    int n = rows_;
    ScalarMatrix a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw singular_matrix();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar d = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool ScalarMatrix::is_invertible() const {
    if (!is_square()) return false;
    try {
        inverse();
        return true;
    } catch (const singular_matrix&) {
        return false;
    }
}

bool ScalarMatrix::is_zero() const {
    for (auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<Scalar> ScalarMatrix::as_scalar_multiple_of_identity() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    Scalar lambda = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != lambda : !at(i, j).is_zero()) return std::nullopt;
        }
    return lambda;
}

} // namespace gab
