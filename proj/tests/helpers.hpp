#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "gab/scalar_matrix.hpp"

namespace gabtest {

using namespace gab;

/// Fixed default seed; override with GAB_SEED for reproduction runs.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("GAB_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240817u;
}

inline std::mt19937_64 rng() { return std::mt19937_64(seed()); }

inline mpq_class random_rational(std::mt19937_64& g, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
    mpq_class q(num(g), den(g));
    q.canonicalize();
    return q;
}

inline mpq_class random_nonzero_rational(std::mt19937_64& g, int lo = -6, int hi = 6) {
    for (;;) {
        mpq_class q = random_rational(g, lo, hi);
        if (q != 0) return q;
    }
}

inline Scalar random_scalar(std::mt19937_64& g) { return Scalar(GRat(random_rational(g))); }

inline ScalarMatrix random_invertible(int n, std::mt19937_64& g) {
    for (;;) {
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(GRat(random_rational(g)));
        if (m.is_invertible()) return m;
    }
}

/// A_q = [[0,1],[-q,0]].
inline ScalarMatrix aq(const Scalar& q) {
    ScalarMatrix m(2, 2);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = -q;
    return m;
}

inline ScalarMatrix aq_param(const std::string& name) { return aq(Scalar::parameter(name)); }

/// Jordanian pair A = [[0,1],[-1,h]], B = [[-h',1],[-1,0]].
inline ScalarMatrix jordan_a(const Scalar& h) {
    ScalarMatrix m(2, 2);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(-1);
    m.at(1, 1) = h;
    return m;
}

inline ScalarMatrix jordan_b(const Scalar& hp) {
    ScalarMatrix m(2, 2);
    m.at(0, 0) = -hp;
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(-1);
    return m;
}

} // namespace gabtest
