#pragma once

#include <gmpxx.h>
#include <string>

#include "gab/errors.hpp"

namespace gab {

/// Element of Q(i): re + im*i with exact rational parts. Plain rationals are
/// the im == 0 slice; conjugation fixes them pointwise.
struct GRat {
    mpq_class re{0};
    mpq_class im{0};

    GRat() = default;
    GRat(long v) : re(v) {}
    GRat(const mpq_class& r) : re(r) {}
    GRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GRat imaginary_unit() { return GRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }
    /// re^2 + im^2, a nonnegative rational.
    mpq_class norm() const { return re * re + im * im; }

    friend GRat operator+(const GRat& a, const GRat& b) { return GRat(a.re + b.re, a.im + b.im); }
    friend GRat operator-(const GRat& a, const GRat& b) { return GRat(a.re - b.re, a.im - b.im); }
    friend GRat operator-(const GRat& a) { return GRat(-a.re, -a.im); }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GRat operator/(const GRat& a, const GRat& b) {
        if (b.is_zero()) throw division_by_zero();
        mpq_class n = b.norm();
        GRat c = a * b.conj();
        return GRat(c.re / n, c.im / n);
    }
    GRat& operator+=(const GRat& b) { re += b.re; im += b.im; return *this; }
    GRat& operator-=(const GRat& b) { re -= b.re; im -= b.im; return *this; }
    GRat& operator*=(const GRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    std::string str() const;
};

std::string rat_str(const mpq_class& q);

} // namespace gab
