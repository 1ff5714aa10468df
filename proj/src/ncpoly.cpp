#include "gab/ncpoly.hpp"

#include <algorithm>

namespace gab {

NCPoly::NCPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Word::one(), c);
}

NCPoly NCPoly::word(const Word& w, const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
}

const Word& NCPoly::leading_word() const { return terms_.rbegin()->first; }
const Scalar& NCPoly::leading_coeff() const { return terms_.rbegin()->second; }

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    r += b;
    return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    r -= b;
    return r;
}

NCPoly operator-(const NCPoly& a) {
    NCPoly r;
    for (auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, k] : p.terms()) r.terms_.emplace(w, c * k);
    return r;
}

NCPoly NCPoly::reversed() const {
    NCPoly r;
    for (auto& [w, c] : terms_) {
        Word rw = w;
        std::reverse(rw.letters.begin(), rw.letters.end());
        r.add_term(rw, c);
    }
    return r;
}

NCPoly NCPoly::with_slot(std::uint8_t slot) const {
    NCPoly r;
    for (auto& [w, c] : terms_) {
        Word tw = w;
        for (auto& g : tw.letters) g = Gen::with_slot(g, slot);
        r.add_term(tw, c);
    }
    return r;
}

NCPoly NCPoly::map_generators(const std::function<NCPoly(std::uint32_t)>& image,
                              bool reverse_products, bool conjugate_coeffs) const {
    NCPoly r;
    for (auto& [w, c] : terms_) {
        NCPoly prod = NCPoly::one();
        if (!reverse_products) {
            for (auto g : w.letters) prod = prod * image(g);
        } else {
            for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
                prod = prod * image(*it);
        }
        r += (conjugate_coeffs ? c.conj() : c) * prod;
    }
    return r;
}

std::string NCPoly::str(bool tag_slots) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.str();
        if (!first) {
            if (cs.size() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        first = false;
        bool atomic = cs.find_first_of("+- ") == std::string::npos;
        std::string coeff = atomic ? cs : "(" + cs + ")";
        if (it->first.empty()) {
            s += coeff;
        } else if (it->second.is_one()) {
            s += it->first.str(tag_slots);
        } else {
            s += coeff + "*" + it->first.str(tag_slots);
        }
    }
    return s;
}

NCMatrix::NCMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    data_.assign(static_cast<std::size_t>(rows) * cols, NCPoly());
}

NCMatrix NCMatrix::identity(int n) {
    NCMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = NCPoly::one();
    return m;
}

NCMatrix NCMatrix::from_scalar(const ScalarMatrix& s) {
    NCMatrix m(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) m.at(i, j) = NCPoly(s.at(i, j));
    return m;
}

NCMatrix NCMatrix::generators(int rows, int cols, std::uint8_t slot) {
    NCMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = NCPoly::gen(Gen::x(i + 1, j + 1, slot));
    return m;
}

NCMatrix NCMatrix::gen_diag(int n, std::uint32_t g) {
    NCMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = NCPoly::gen(g);
    return m;
}

NCMatrix operator+(const NCMatrix& a, const NCMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("ncmatrix add");
    NCMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("ncmatrix sub");
    NCMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
    if (a.cols_ != b.rows_) throw shape_mismatch("ncmatrix mul");
    NCMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const NCPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

NCMatrix operator*(const ScalarMatrix& a, const NCMatrix& b) { return NCMatrix::from_scalar(a) * b; }
NCMatrix operator*(const NCMatrix& a, const ScalarMatrix& b) { return a * NCMatrix::from_scalar(b); }

NCMatrix operator*(const Scalar& c, const NCMatrix& m) {
    NCMatrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = c * m.data_[i];
    return r;
}

bool operator==(const NCMatrix& a, const NCMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

NCMatrix NCMatrix::transpose() const {
    NCMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool NCMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const NCPoly& p) { return p.is_zero(); });
}

std::vector<NCPoly> matrix_relation_expand(const NCMatrix& lhs, const NCMatrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw shape_mismatch("relation expand: lhs and rhs shapes differ");
    std::vector<NCPoly> rels;
    rels.reserve(static_cast<std::size_t>(lhs.rows()) * lhs.cols());
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j) rels.push_back(lhs.at(i, j) - rhs.at(i, j));
    return rels;
}

} // namespace gab
