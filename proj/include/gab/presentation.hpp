#pragma once

#include <vector>

#include "gab/ncpoly.hpp"
#include "gab/rewrite.hpp"

namespace gab {

/// Presented algebra G(A,B|C,D) = < d, d^{-1}, x_ij | x^tAx = Cd, xDx^t = Bd,
/// dd^{-1} = 1 = d^{-1}d >, with x of size n_rows x n_cols (A,B n x n and
/// C,D m x m); the Hopf algebra G(A,B) is the square case C=A, D=B. Tensor
/// products of presentations are presentations with slot-tagged generators.
struct Presentation {
    int n_rows = 0, n_cols = 0;
    ScalarMatrix A, B, C, D;
    std::vector<std::uint32_t> alphabet;
    std::vector<NCPoly> relations;
    bool includes_d_inv = false;
    bool is_tensor = false;

    /// Raw relations plus certified derived commutation relations (see
    /// enrich_relations); what verification reduces against.
    std::vector<NCPoly> reduction_relations;

    NCMatrix generator_matrix(std::uint8_t slot = 0) const {
        return NCMatrix::generators(n_rows, n_cols, slot);
    }
    bool is_square() const { return n_rows == n_cols; }
};

/// G(A,B|C,D); A,B in GL_n, C,D in GL_m, x rectangular n x m.
/// G(A,B|A,B) reproduces G(A,B). Throws singular_matrix.
Presentation build_gabcd(const ScalarMatrix& A, const ScalarMatrix& B, const ScalarMatrix& C,
                         const ScalarMatrix& D, bool with_d_inv);

/// Square Hopf case G(A,B) with d^{-1} present.
Presentation build_hopf(const ScalarMatrix& A, const ScalarMatrix& B);

/// Oriented presentation M(A_q, A_q | C, D) of the normalized left object:
/// rules (1)-(6) including the d-commutation rules. Preconditions (throws
/// precondition_failed naming the offender): D_mm = 0; the lex-maximal (m,v)
/// with D_mv != 0 has v < m; tr(C D^t) = 1 + q^2; D^t C^t D C = q^2 I.
ReductionSystem build_oriented_system(const Scalar& q, const ScalarMatrix& C,
                                      const ScalarMatrix& D);

/// Localization at {d^n}: adds d^{-1} with d d^{-1} -> 1, d^{-1} d -> 1 and
/// the inverse commutation rules, then re-certifies confluence. Throws
/// not_confluent when the extension produces an unresolvable ambiguity.
ReductionSystem extend_with_localization(const ReductionSystem& sys, const Scalar& q,
                                         const ScalarMatrix& C, const ScalarMatrix& D);

/// Tensor-product presentation: disjoint slot-tagged generators, both
/// relation sets, and cross commutations (slot1 g)(slot0 h) -> (slot0 h)(slot1 g).
Presentation tensor_presentation(const Presentation& P, const Presentation& Q);

/// Derived commutation relations of G(A,B|C,D), certified at construction:
///   x_il d   - sum_kj (BA)_ik ((DC)^{-1})_jl d x_kj       (exact free-algebra
///     identity against (xDx^t - Bd) A x - x D (x^tAx - Cd) times (DC)^{-1})
///   x_il d^{-1} - sum_kj ((BA)^{-1})_ik (DC)_jl d^{-1} x_kj  (d (...) d sandwich
///     certified by descending reduction, then t = d^{-1}(d t d)d^{-1} -
///     (d^{-1}d - 1)t - d^{-1}d t (dd^{-1} - 1) places t in the ideal)
/// Returns raw relations + the certified ones. Already stored on the
/// presentation as reduction_relations by the builders.
std::vector<NCPoly> enrich_relations(const Presentation& P);

} // namespace gab
