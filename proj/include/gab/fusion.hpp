#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gab/errors.hpp"

namespace gab {

/// Generic parameter vs root of unity of order N >= 3; N0 bounds the
/// U-family in the root case (N odd: N, N even: N/2).
struct FusionCase {
    bool root = false;
    int N = 0, N0 = 0;

    static FusionCase generic() { return {}; }
    static FusionCase root_of_unity(int N) {
        if (N < 3) throw precondition_failed("root-of-unity order must be >= 3");
        return {true, N, N % 2 ? N : N / 2};
    }
};

/// Simple comodule label. Generic case: U_{(n,e)} = U_n (x) D^{(x)e} with
/// m = 0. Root case: V_n (x) U_m (x) D^{(x)e}, 0 <= m <= N0-1.
struct SimpleLabel {
    long n = 0, m = 0, e = 0;

    static SimpleLabel U(long n, long e) { return {0, n, e}; }  // generic-notation U_{(n,e)}
    static SimpleLabel V(long n) { return {n, 0, 0}; }
    static SimpleLabel Dpow(long e) { return {0, 0, e}; }

    long dim() const { return (n + 1) * (m + 1); }

    friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) {
        return a.n == b.n && a.m == b.m && a.e == b.e;
    }
    friend bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.m != b.m) return a.m < b.m;
        return a.e < b.e;
    }

    std::string str(const FusionCase& fc = FusionCase::generic()) const;
};

/// Nonnegative-integer combination of simple labels; canonical by the label
/// order. Addition is multiset union; dimension is additive.
struct SemiringElement {
    std::map<SimpleLabel, long> terms;

    static SemiringElement simple(const SimpleLabel& l) {
        SemiringElement s;
        s.terms[l] = 1;
        return s;
    }
    void add(const SimpleLabel& l, long mult = 1);
    long dim() const;

    friend SemiringElement operator+(const SemiringElement& a, const SemiringElement& b);
    friend bool operator==(const SemiringElement& a, const SemiringElement& b) {
        return a.terms == b.terms;
    }

    std::string str(const FusionCase& fc = FusionCase::generic()) const;
};

/// Generic fusion: U_{(n,e)} (x) U_{(m,f)} = sum_{i=0}^{min(n,m)}
/// U_{(n+m-2i, e+f+i)}. Commutative; dimension multiplicative.
SemiringElement tensor_generic(const SimpleLabel& a, const SimpleLabel& b);

/// Bilinear extension of tensor_generic.
SemiringElement semiring_product(const SemiringElement& x, const SemiringElement& y);

/// The relabeling semiring automorphism: s=+1 identity, s=-1 sends
/// U_{(n,e)} to U_{(n,-n-e)}.
SemiringElement relabel_automorphism(int s, const SemiringElement& x);

struct NotSemisimple {
    std::vector<SimpleLabel> composition_factors; // with multiplicity
};
struct Undetermined {};
using RootTensorResult = std::variant<SemiringElement, NotSemisimple, Undetermined>;

/// Root-of-unity partial fusion: products the recursions determine, i.e.
/// b in {V_1, U_1, D^{±1}} (or symmetric). U_{N0-1} (x) U_1 is not semisimple
/// and returns its filtration factors [U_{(N0-2,1)}, V_1, U_{(N0-2,1)}].
/// Anything else: Undetermined, never guessed.
RootTensorResult tensor_root_partial(const SimpleLabel& a, const SimpleLabel& b,
                                     const FusionCase& fc);

/// Label syntax: U(n,e), V(n), D^e and products like V(2)*U(1,0)*D^-1.
SimpleLabel parse_label(const std::string& text, const FusionCase& fc);

} // namespace gab
