#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gab/scalar.hpp"
#include "gab/scalar_matrix.hpp"
#include "gab/word.hpp"

namespace gab {

/// Noncommutative polynomial: finite Word -> Scalar map, no zero coefficients.
/// Multiplication is the bilinear extension of concatenation. Leading term is
/// the maximal word under the degree-lex order (constant-time via map rbegin).
class NCPoly {
public:
    using Terms = std::map<Word, Scalar, WordLess>;

    NCPoly() = default;
    explicit NCPoly(const Scalar& c);
    static NCPoly word(const Word& w, const Scalar& c = Scalar(1));
    static NCPoly gen(std::uint32_t g) { return word(Word::of(g)); }
    static NCPoly one() { return NCPoly(Scalar(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Word& leading_word() const;    // requires !is_zero()
    const Scalar& leading_coeff() const; // requires !is_zero()
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a);
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Scalar& c, const NCPoly& p);
    NCPoly& operator+=(const NCPoly& b) { for (auto& [w, c] : b.terms_) add_term(w, c); return *this; }
    NCPoly& operator-=(const NCPoly& b) { for (auto& [w, c] : b.terms_) add_term(w, -c); return *this; }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Reverse every word (evaluation in the opposite algebra).
    NCPoly reversed() const;
    /// Retag all letters with a tensor slot.
    NCPoly with_slot(std::uint8_t slot) const;
    /// Apply a ring map defined on generators. When `reverse_products`, words
    /// are evaluated right-to-left (algebra map into the opposite algebra);
    /// when `conjugate_coeffs`, coefficients map through Scalar::conj
    /// (antilinear maps, e.g. the *-structure).
    NCPoly map_generators(const std::function<NCPoly(std::uint32_t)>& image,
                          bool reverse_products = false,
                          bool conjugate_coeffs = false) const;

    std::string str(bool tag_slots = false) const;

private:
    Terms terms_;
};

/// Matrix with NCPoly entries; the generator matrix x and the structural-map
/// formulas (A^{-1} d^{-1} x^t C etc.) live here.
class NCMatrix {
public:
    NCMatrix() = default;
    NCMatrix(int rows, int cols);
    static NCMatrix identity(int n);
    /// Embeds a scalar matrix.
    static NCMatrix from_scalar(const ScalarMatrix& m);
    /// The generator matrix (x_{ij}) of size rows x cols.
    static NCMatrix generators(int rows, int cols, std::uint8_t slot = 0);
    /// Diagonal matrix g*I with a single generator (d or d^{-1}).
    static NCMatrix gen_diag(int n, std::uint32_t g);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    NCPoly& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const NCPoly& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend NCMatrix operator+(const NCMatrix& a, const NCMatrix& b);
    friend NCMatrix operator-(const NCMatrix& a, const NCMatrix& b);
    friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b);
    friend NCMatrix operator*(const ScalarMatrix& a, const NCMatrix& b);
    friend NCMatrix operator*(const NCMatrix& a, const ScalarMatrix& b);
    friend NCMatrix operator*(const Scalar& c, const NCMatrix& m);
    friend bool operator==(const NCMatrix& a, const NCMatrix& b);

    NCMatrix transpose() const;
    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<NCPoly> data_;
};

/// Entrywise differences lhs_{ij} - rhs_{ij}, row-major; the defining
/// relations x^tAx - Cd etc. expand through this.
std::vector<NCPoly> matrix_relation_expand(const NCMatrix& lhs, const NCMatrix& rhs);

} // namespace gab
