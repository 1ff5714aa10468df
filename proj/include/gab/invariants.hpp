#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gab/scalar_matrix.hpp"

namespace gab {

struct Genericity {
    enum Kind { Generic, RootOfUnity, UndecidedParametric } kind = Generic;
    std::vector<int> orders; // root-of-unity orders when kind == RootOfUnity

    std::string str() const;
};

/// (lambda, mu, kappa) classification data of a pair (A,B):
/// B^tA^tBA = lambda I when condition_ok, mu = tr(AB^t), kappa = mu^2/lambda.
struct InvariantReport {
    std::optional<Scalar> lambda;
    Scalar mu;
    std::optional<Scalar> kappa;
    bool condition_ok = false;
    Genericity genericity;
};

InvariantReport invariant_report(const ScalarMatrix& A, const ScalarMatrix& B);

/// Whether q with (q + q^{-1})^2 = kappa can be a root of unity of order >= 3
/// (q = ±1 counts as generic). Over Q this happens exactly for
/// kappa in {0,1,2,3}, of orders {4}, {3,6}, {8}, {12}.
Genericity genericity_of_kappa(const Scalar& kappa);

struct MonoidalVerdict {
    bool equivalent = false;
    InvariantReport first, second;
};

/// kappa(A,B) == kappa(C,D), exactly. Throws precondition_failed when either
/// pair fails the Schur condition.
MonoidalVerdict monoidal_equivalent(const ScalarMatrix& A, const ScalarMatrix& B,
                                    const ScalarMatrix& C, const ScalarMatrix& D);

enum class WitnessOrientation { Direct, Inverse };

struct WitnessVerdict {
    bool pass = false;
    Scalar alpha, beta;            // absorbed scalars when pass
    std::string failure;           // first failing entry, empty on pass
};

/// Direct: (C,D) = (alpha P^tAP, beta P^{-1}BP^{-1t});
/// Inverse: (C,D) = (alpha P^tB^{-1}P, beta P^{-1}A^{-1}P^{-1t}).
WitnessVerdict verify_iso_witness(const ScalarMatrix& A, const ScalarMatrix& B,
                                  const ScalarMatrix& C, const ScalarMatrix& D,
                                  const ScalarMatrix& P, WitnessOrientation orientation);

struct GaloisPairVerdict {
    bool pass = false;
    std::optional<Scalar> lambda_ab, lambda_cd;
    Scalar trace_ab, trace_cd;
    std::string failure;
};

/// Galois-object conditions: D^tC^tDC = lambda I with the SAME lambda as
/// (A,B), and tr(AB^t) = tr(CD^t).
GaloisPairVerdict verify_galois_pair(const ScalarMatrix& A, const ScalarMatrix& B,
                                     const ScalarMatrix& C, const ScalarMatrix& D);

/// Galois isomorphism witness: (C2,D2) = (M^{-1t} C1 M^{-1}, M D1 M^t), exact.
WitnessVerdict verify_galois_iso_witness(const ScalarMatrix& C1, const ScalarMatrix& D1,
                                         const ScalarMatrix& C2, const ScalarMatrix& D2,
                                         const ScalarMatrix& M);

struct IsotropicFound {
    ScalarMatrix P; // invertible with (P^tMP)_{nn} = 0
};
struct IsotropicNotFound {};
using IsotropicResult = std::variant<IsotropicFound, IsotropicNotFound>;

/// Search for a congruence P with (P^tMP)_{nn} = 0 over the base field:
/// standard basis vectors, then pairs e_i + t e_j with rational t solving the
/// quadratic. Over non-closed Q an isotropic vector may not exist (M = I).
IsotropicResult isotropic_normalize(const ScalarMatrix& M);

enum class Positivity { PositiveRational, ConditionallyPositive, NotPositive };

/// PositiveRational: parameter-free, i-free, > 0. ConditionallyPositive:
/// a positive rational multiple of an even-exponent parameter monomial
/// (positive for all nonzero real parameter values).
Positivity classify_positive(const Scalar& s);

struct CqgVerdict {
    bool pass = false;
    Scalar lambda;
    bool conditionally_positive = false;
    std::string failure;
};

/// CQG condition: conj(E)^t E^t conj(E) E = lambda I with lambda in R*_+.
CqgVerdict cqg_condition(const ScalarMatrix& E);

} // namespace gab
