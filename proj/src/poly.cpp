#include "gab/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace gab {

std::string rat_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string GRat::str() const {
    // Forms: "0", "3/2", "i", "-2*i", "1+i", "1-2/3*i"
    if (is_zero()) return "0";
    std::ostringstream os;
    if (re != 0) os << re;
    if (im != 0) {
        if (im == 1) os << (re != 0 ? "+i" : "i");
        else if (im == -1) os << "-i";
        else {
            if (re != 0 && im > 0) os << "+";
            os << im << "*i";
        }
    }
    return os.str();
}

namespace {
struct ParamTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::mutex mu;
};
ParamTable& table() {
    static ParamTable t;
    return t;
}
} // namespace

int param_id(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

const std::string& param_name(int id) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(static_cast<std::size_t>(id));
}

long Mono::total_degree() const {
    long d = 0;
    for (auto& [v, e] : powers) d += e;
    return d;
}

int Mono::degree_in(int var) const {
    for (auto& [v, e] : powers)
        if (v == var) return e;
    return 0;
}

Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    auto ia = a.powers.begin(), ib = b.powers.begin();
    while (ia != a.powers.end() || ib != b.powers.end()) {
        if (ib == b.powers.end() || (ia != a.powers.end() && ia->first < ib->first))
            r.powers.push_back(*ia++);
        else if (ia == a.powers.end() || ib->first < ia->first)
            r.powers.push_back(*ib++);
        else {
            r.powers.emplace_back(ia->first, ia->second + ib->second);
            ++ia; ++ib;
        }
    }
    return r;
}

std::pair<Mono, bool> Mono::divide(const Mono& a, const Mono& b) {
    Mono r;
    auto ia = a.powers.begin();
    for (auto& [v, e] : b.powers) {
        while (ia != a.powers.end() && ia->first < v) r.powers.push_back(*ia++);
        if (ia == a.powers.end() || ia->first != v || ia->second < e) return {Mono{}, false};
        if (ia->second > e) r.powers.emplace_back(v, ia->second - e);
        ++ia;
    }
    while (ia != a.powers.end()) r.powers.push_back(*ia++);
    return {r, true};
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: lex with smaller var id more significant, bigger exponent first.
    auto ia = a.powers.begin(), ib = b.powers.begin();
    while (ia != a.powers.end() && ib != b.powers.end()) {
        if (ia->first != ib->first) return ia->first > ib->first; // a misses a small var => a smaller
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia; ++ib;
    }
    return false; // identical (degrees matched, all powers matched)
}

Poly::Poly(const GRat& c) {
    if (!c.is_zero()) terms_.emplace(Mono{}, c);
}

Poly Poly::var(int id, int exp) {
    Poly p;
    if (exp == 0) return Poly(GRat(1));
    Mono m;
    m.powers.emplace_back(id, exp);
    p.terms_.emplace(std::move(m), GRat(1));
    return p;
}

GRat Poly::constant_value() const {
    if (terms_.empty()) return GRat(0);
    return terms_.begin()->second;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

int Poly::max_var() const {
    int mv = -1;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.powers) mv = std::max(mv, v);
    return mv;
}

const Mono& Poly::leading_mono() const { return terms_.rbegin()->first; }
const GRat& Poly::leading_coeff() const { return terms_.rbegin()->second; }

void Poly::add_term(const Mono& m, const GRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator-(const Poly& a) {
    Poly r;
    for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::conj() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
}

Poly Poly::scaled(const GRat& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(GRat(1) / leading_coeff());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const GRat& c = it->second;
        std::string cs = c.str();
        bool compound = !c.is_real() && c.re != 0; // needs parens when multiplying
        if (!first) {
            if (!compound && cs[0] == '-') { os << " - "; cs = cs.substr(1); }
            else os << " + ";
        }
        first = false;
        if (it->first.is_one()) {
            os << (compound ? "(" + cs + ")" : cs);
            continue;
        }
        if (!(c.is_one())) {
            os << (compound ? "(" + cs + ")" : cs) << "*";
        }
        bool fv = true;
        for (auto& [v, e] : it->first.powers) {
            if (!fv) os << "*";
            fv = false;
            os << param_name(v);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Univariate view in the main variable: exponent -> coefficient polynomial
// in the remaining variables.
using UniView = std::map<int, Poly>;

UniView uni_view(const Poly& p, int var) {
    UniView v;
    for (auto& [m, c] : p.terms()) {
        int e = m.degree_in(var);
        Mono rest;
        for (auto& [vv, ee] : m.powers)
            if (vv != var) rest.powers.emplace_back(vv, ee);
        v[e].add_term(rest, c);
    }
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    return v;
}

Poly from_uni(const UniView& v, int var) {
    Poly r;
    for (auto& [e, coeff] : v) {
        Poly xe = Poly::var(var, e);
        r += coeff * xe;
    }
    return r;
}

int uni_deg(const UniView& v) { return v.empty() ? -1 : v.rbegin()->first; }

// Pseudo-remainder of a by b in the main variable (b nonzero, deg a >= deg b).
Poly pseudo_rem(Poly a, const Poly& b, int var) {
    UniView vb = uni_view(b, var);
    int db = uni_deg(vb);
    const Poly& lb = vb.rbegin()->second;
    for (;;) {
        UniView va = uni_view(a, var);
        int da = uni_deg(va);
        if (da < db || a.is_zero()) return a;
        const Poly& la = va.rbegin()->second;
        // a <- lb*a - la*x^(da-db)*b
        a = lb * a - la * Poly::var(var, da - db) * b;
    }
}

Poly content_in(const Poly& p, int var) {
    UniView v = uni_view(p, var);
    Poly g;
    for (auto& [e, c] : v) g = poly_gcd(g, c);
    return g;
}

} // namespace

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return a;
    Poly rem = a, q;
    while (!rem.is_zero()) {
        auto [m, ok] = Mono::divide(rem.leading_mono(), b.leading_mono());
        if (!ok) throw error("divexact: not divisible");
        GRat c = rem.leading_coeff() / b.leading_coeff();
        Poly t;
        t.add_term(m, c);
        q += t;
        rem -= t * b;
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(GRat(1));

    int var = std::max(a.max_var(), b.max_var());
    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly c = poly_gcd(ca, cb);
    Poly A = divexact(a, ca), B = divexact(b, cb);

    if (uni_deg(uni_view(A, var)) < uni_deg(uni_view(B, var))) std::swap(A, B);
    for (;;) {
        Poly r = pseudo_rem(A, B, var);
        if (r.is_zero()) break;
        if (uni_deg(uni_view(r, var)) == 0) return c.monic();
        A = B;
        B = divexact(r, content_in(r, var));
    }
    Poly g = divexact(B, content_in(B, var));
    return (c * g).monic();
}

} // namespace gab
