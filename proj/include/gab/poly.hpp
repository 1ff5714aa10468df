#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gab/rational.hpp"

namespace gab {

/// Global interning table for parameter names (q, p1, h, ...). Ids are stable
/// for the lifetime of the process.
int param_id(const std::string& name);
const std::string& param_name(int id);

/// Monomial in the parameters: sorted (var id, exponent > 0) pairs.
/// Ordered graded-lex: total degree first, then lexicographically with the
/// smallest variable id most significant.
struct Mono {
    std::vector<std::pair<int, int>> powers;

    bool is_one() const { return powers.empty(); }
    long total_degree() const;
    int degree_in(int var) const;

    friend Mono operator*(const Mono& a, const Mono& b);
    /// Exact quotient; second component false when b does not divide a.
    static std::pair<Mono, bool> divide(const Mono& a, const Mono& b);
    friend bool operator==(const Mono& a, const Mono& b) { return a.powers == b.powers; }
};

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial over Q(i) in the interned parameters.
/// Invariant: no zero coefficients are stored.
class Poly {
public:
    using Terms = std::map<Mono, GRat, MonoLess>;

    Poly() = default;
    explicit Poly(const GRat& c);
    explicit Poly(long c) : Poly(GRat(c)) {}
    static Poly var(int id, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    GRat constant_value() const;   // requires is_constant()
    const Terms& terms() const { return terms_; }
    long total_degree() const;
    int max_var() const;           // -1 when constant

    const Mono& leading_mono() const;   // requires !is_zero()
    const GRat& leading_coeff() const;  // requires !is_zero()

    void add_term(const Mono& m, const GRat& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly conj() const;
    Poly scaled(const GRat& c) const;
    /// Divide all coefficients by the leading coefficient.
    Poly monic() const;

    std::string str() const;

private:
    Terms terms_;
};

/// Exact division; throws gab::error if b does not divide a.
Poly divexact(const Poly& a, const Poly& b);

/// Monic gcd in Q(i)[params] (recursive primitive PRS). gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace gab
