#pragma once

#include <map>
#include <optional>
#include <string>

#include "gab/poly.hpp"

namespace gab {

enum class BaseField { Rationals, GaussianRationals };

/// Element of the fraction field Q(i)(params), kept in canonical form:
/// gcd(num, den) removed and the denominator's leading coefficient (graded-lex
/// on the parameters) equal to 1, so equality is representational equality.
class Scalar {
public:
    Scalar() : num_(), den_(GRat(1)) {}
    Scalar(long v) : num_(GRat(v)), den_(GRat(1)) {}
    explicit Scalar(const GRat& c) : num_(c), den_(GRat(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar parameter(const std::string& name) { return Scalar(Poly::var(param_id(name)), Poly(GRat(1))); }
    static Scalar rational(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(GRat(q));
    }
    static Scalar imaginary_unit() { return Scalar(GRat::imaginary_unit()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    /// Parameter-free (numerator and denominator constants).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Constant and i-free.
    bool is_rational_constant() const;
    /// Value of a constant scalar in Q(i); requires is_constant().
    GRat constant_value() const;
    /// Parameter-free, i-free and > 0.
    bool is_positive_rational() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }

    Scalar inverse() const;
    Scalar conj() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.str() < b.str(); }

    /// Substitute parameters by scalars (simultaneous).
    Scalar substitute(const std::map<int, Scalar>& subs) const;

    std::string str() const;

private:
    void canonicalize();
    Poly num_, den_;
};

/// Parse the scalar text grammar: integers, `i`, parameter identifiers,
/// + - * / ^ and parentheses, e.g. "(1+i)*q/(q^2-1)". Parameters must be
/// declared unless allow_new_params; `i` requires the Gaussian base field.
Scalar parse_scalar(const std::string& text, BaseField field = BaseField::GaussianRationals);

} // namespace gab
