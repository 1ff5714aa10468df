#include "gab/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gab {

std::string SimpleLabel::str(const FusionCase& fc) const {
    std::ostringstream os;
    if (!fc.root) {
        os << "U(" << m << "," << e << ")";
        return os.str();
    }
    bool printed = false;
    if (n) { os << "V(" << n << ")"; printed = true; }
    if (m) { os << (printed ? "*" : "") << "U(" << m << ",0)"; printed = true; }
    if (e) { os << (printed ? "*" : "") << "D^" << e; printed = true; }
    if (!printed) os << "1";
    return os.str();
}

void SemiringElement::add(const SimpleLabel& l, long mult) {
    if (!mult) return;
    long& v = terms[l];
    v += mult;
    if (!v) terms.erase(l);
}

long SemiringElement::dim() const {
    long d = 0;
    for (auto& [l, mult] : terms) d += l.dim() * mult;
    return d;
}

SemiringElement operator+(const SemiringElement& a, const SemiringElement& b) {
    SemiringElement r = a;
    for (auto& [l, mult] : b.terms) r.add(l, mult);
    return r;
}

std::string SemiringElement::str(const FusionCase& fc) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest label first: U(2,0) + U(0,1).
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second != 1) os << it->second << "*";
        os << it->first.str(fc);
    }
    return os.str();
}

SemiringElement tensor_generic(const SimpleLabel& a, const SimpleLabel& b) {
    if (a.n || b.n) throw precondition_failed("generic labels carry no V part");
    SemiringElement r;
    long lo = std::min(a.m, b.m);
    for (long i = 0; i <= lo; ++i) r.add(SimpleLabel::U(a.m + b.m - 2 * i, a.e + b.e + i));
    return r;
}

SemiringElement semiring_product(const SemiringElement& x, const SemiringElement& y) {
    SemiringElement r;
    for (auto& [la, ma] : x.terms)
        for (auto& [lb, mb] : y.terms) {
            SemiringElement t = tensor_generic(la, lb);
            for (auto& [l, mult] : t.terms) r.add(l, mult * ma * mb);
        }
    return r;
}

SemiringElement relabel_automorphism(int s, const SemiringElement& x) {
    if (s != 1 && s != -1) throw precondition_failed("relabeling sign must be ±1");
    if (s == 1) return x;
    SemiringElement r;
    for (auto& [l, mult] : x.terms) r.add(SimpleLabel::U(l.m, -l.m - l.e), mult);
    return r;
}

namespace {

bool is_V1(const SimpleLabel& l) { return l.n == 1 && l.m == 0 && l.e == 0; }
bool is_U1(const SimpleLabel& l) { return l.n == 0 && l.m == 1 && l.e == 0; }
bool is_Dpow(const SimpleLabel& l) { return l.n == 0 && l.m == 0; }

RootTensorResult tensor_by_V1(const SimpleLabel& a, const FusionCase& fc) {
    // V_n (x) V_1 = V_{n+1} + V_{n-1} D^{N0}; the U,D parts ride along since
    // V_n U_m D^e stays simple.
    SemiringElement r;
    if (a.n == 0) {
        r.add({1, a.m, a.e});
        return r;
    }
    r.add({a.n + 1, a.m, a.e});
    r.add({a.n - 1, a.m, a.e + fc.N0});
    return r;
}

RootTensorResult tensor_by_U1(const SimpleLabel& a, const FusionCase& fc) {
    if (a.m == fc.N0 - 1) {
        if (a.n != 0) return Undetermined{}; // filtration only stated for U_{N0-1} itself
        NotSemisimple ns;
        ns.composition_factors = {SimpleLabel{0, fc.N0 - 2, a.e + 1},
                                  SimpleLabel{1, 0, a.e},
                                  SimpleLabel{0, fc.N0 - 2, a.e + 1}};
        return ns;
    }
    SemiringElement r;
    if (a.m == 0) {
        r.add({a.n, 1, a.e});
        return r;
    }
    r.add({a.n, a.m + 1, a.e});
    r.add({a.n, a.m - 1, a.e + 1});
    return r;
}

} // namespace

RootTensorResult tensor_root_partial(const SimpleLabel& a, const SimpleLabel& b,
                                     const FusionCase& fc) {
    if (!fc.root) throw precondition_failed("root-of-unity case required");
    if (a.m >= fc.N0 || b.m >= fc.N0) throw precondition_failed("U index out of range");
    // D^e twists are always defined.
    if (is_Dpow(b)) {
        SemiringElement r;
        r.add({a.n, a.m, a.e + b.e});
        return r;
    }
    if (is_Dpow(a)) return tensor_root_partial(b, a, fc);
    if (is_V1(b)) return tensor_by_V1(a, fc);
    if (is_V1(a)) return tensor_by_V1(b, fc);
    if (is_U1(b)) return tensor_by_U1(a, fc);
    if (is_U1(a)) return tensor_by_U1(b, fc);
    return Undetermined{};
}

namespace {

struct LabelParser {
    const std::string& s;
    std::size_t pos = 0;

    void ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    long integer() {
        ws();
        bool neg = pos < s.size() && s[pos] == '-';
        if (neg) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected integer", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }
    void expect(char c) {
        ws();
        if (pos >= s.size() || s[pos] != c) throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    SimpleLabel factor() {
        ws();
        if (pos >= s.size()) throw parse_error("expected label", pos);
        char c = s[pos];
        if (c == 'U') {
            ++pos; expect('(');
            long n = integer();
            long e = 0;
            ws();
            if (pos < s.size() && s[pos] == ',') { ++pos; e = integer(); }
            expect(')');
            return SimpleLabel::U(n, e);
        }
        if (c == 'V') {
            ++pos; expect('(');
            long n = integer();
            expect(')');
            return SimpleLabel::V(n);
        }
        if (c == 'D') {
            ++pos;
            long e = 1;
            ws();
            if (pos < s.size() && s[pos] == '^') { ++pos; e = integer(); }
            return SimpleLabel::Dpow(e);
        }
        if (c == '1') { ++pos; return SimpleLabel{}; }
        throw parse_error("expected U(, V(, D or 1", pos);
    }
};

} // namespace

SimpleLabel parse_label(const std::string& text, const FusionCase& fc) {
    LabelParser p{text, 0};
    SimpleLabel acc{};
    for (;;) {
        SimpleLabel f = p.factor();
        // Combine product of disjoint parts V(n)*U(m,?)*D^e; repeated parts
        // would need fusion, refuse them here.
        if (f.n) {
            if (acc.n) throw parse_error("repeated V factor", p.pos);
            acc.n = f.n;
        }
        if (f.m) {
            if (acc.m) throw parse_error("repeated U factor", p.pos);
            acc.m = f.m;
        }
        acc.e += f.e;
        p.ws();
        if (p.pos < text.size() && text[p.pos] == '*') { ++p.pos; continue; }
        break;
    }
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    if (!fc.root && acc.n) throw parse_error("V labels need a root-of-unity case", 0);
    if (fc.root && acc.m >= fc.N0) throw parse_error("U index out of range for this N", 0);
    return acc;
}

} // namespace gab
