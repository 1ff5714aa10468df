#include "gab/scalar.hpp"

#include <cctype>

namespace gab {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void Scalar::canonicalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = Poly(GRat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
    GRat lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GRat inv = GRat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool Scalar::is_rational_constant() const {
    return is_constant() && constant_value().is_real();
}

GRat Scalar::constant_value() const {
    if (!is_constant()) throw error("scalar is not constant: " + str());
    return num_.constant_value() / den_.constant_value();
}

bool Scalar::is_positive_rational() const {
    if (!is_constant()) return false;
    GRat v = constant_value();
    return v.is_real() && v.re > 0;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Scalar operator-(const Scalar& a) {
    Scalar r = a;
    r.num_ = -r.num_;
    return r;
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw division_by_zero();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    return Scalar(den_, num_);
}

Scalar Scalar::conj() const {
    return Scalar(num_.conj(), den_.conj());
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

namespace {
Scalar eval_poly(const Poly& p, const std::map<int, Scalar>& subs) {
    Scalar acc(0);
    for (auto& [m, c] : p.terms()) {
        Scalar t{c};
        for (auto& [v, e] : m.powers) {
            auto it = subs.find(v);
            Scalar base = (it != subs.end()) ? it->second : Scalar(Poly::var(v), Poly(GRat(1)));
            t *= base.pow(e);
        }
        acc += t;
    }
    return acc;
}
} // namespace

Scalar Scalar::substitute(const std::map<int, Scalar>& subs) const {
    return eval_poly(num_, subs) / eval_poly(den_, subs);
}

std::string Scalar::str() const {
    if (den_ == Poly(GRat(1))) {
        // Integral case: single term prints bare, sums get no parens either.
        return num_.str();
    }
    std::string n = num_.str(), d = den_.str();
    auto atomic = [](const std::string& s) {
        return s.find_first_of("+- ") == std::string::npos || (s[0] == '-' && s.find_first_of("+- ", 1) == std::string::npos);
    };
    std::string r = atomic(n) ? n : "(" + n + ")";
    r += "/";
    r += (atomic(d) && d.find('*') == std::string::npos) ? d : "(" + d + ")";
    return r;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    BaseField field;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Scalar parse_expr() {
        Scalar r = parse_term();
        for (;;) {
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else return r;
        }
    }
    Scalar parse_term() {
        Scalar r = parse_factor();
        for (;;) {
            if (eat('*')) r *= parse_factor();
            else if (eat('/')) {
                Scalar d = parse_factor();
                if (d.is_zero()) throw division_by_zero();
                r = r / d;
            } else
                return r;
        }
    }
    Scalar parse_factor() {
        Scalar base = parse_base();
        if (eat('^')) {
            bool neg = eat('-');
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                throw parse_error("expected integer exponent", pos);
            long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                e = e * 10 + (s[pos++] - '0');
            return base.pow(neg ? -e : e);
        }
        return base;
    }
    Scalar parse_base() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar r = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            return r;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return Scalar(GRat(mpq_class(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ident += s[pos++];
            if (ident == "i") {
                if (field != BaseField::GaussianRationals)
                    throw parse_error("'i' requires the Gaussian base field", pos);
                return Scalar::imaginary_unit();
            }
            return Scalar::parameter(ident);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }
};

} // namespace

Scalar parse_scalar(const std::string& text, BaseField field) {
    Parser p{text, 0, field};
    Scalar r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    return r;
}

} // namespace gab
