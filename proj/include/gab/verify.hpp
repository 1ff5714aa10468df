#pragma once

#include <map>
#include <optional>
#include <string>

#include "gab/presentation.hpp"

namespace gab {

/// Per-relation verification outcome. `verified` means a sound certificate
/// (rewritten to zero by two-sided relation multiples) was found; otherwise
/// the unreduced residue is attached.
struct RelationCheck {
    std::string label;
    bool verified = false;
    NCPoly residue;
    std::vector<MembershipStep> trace;
};

struct Certificate {
    std::string title;
    std::vector<RelationCheck> checks;
    bool pass = true;

    void add(std::string label, const MembershipResult& r);
    void add_syntactic(std::string label, const NCPoly& lhs, const NCPoly& rhs);
};

/// Algebra map given by generator images over the target's alphabet.
/// Antipode-style maps land in the opposite algebra: words are evaluated in
/// reverse. Star-style maps additionally conjugate coefficients.
///
/// A map may carry a second, congruent expression of its images (the antipode
/// has both A^{-1}d^{-1}x^tC and Bx^tD^{-1}d^{-1}); verification may evaluate a
/// relation through either form once the two are certified congruent, since
/// congruent factors give congruent products modulo a two-sided ideal.
struct StructuralMap {
    enum Kind { Comultiplication, Counit, Antipode, Star } kind = Comultiplication;
    std::map<std::uint32_t, NCPoly> images;
    std::map<std::uint32_t, NCPoly> alt_images; // empty when unused
    bool reverse_products = false;
    bool conjugate_coeffs = false;
    /// Set by the map builder after exhibiting images - alt_images as an
    /// explicit combination of target-relation multiples (exact free-algebra
    /// identity, no search).
    bool congruence_witnessed = false;

    NCPoly apply(const NCPoly& p) const;
    NCPoly apply_alt(const NCPoly& p) const;
};

struct MapWithTarget {
    StructuralMap map;
    Presentation target;
};

/// Delta of the cogroupoid through the middle object (X,Y):
/// x_ij -> sum_k x_ik (x) x_kj, d^{±} -> d^{±} (x) d^{±}, landing in
/// G(A,B|X,Y) (x) G(X,Y|C,D).
MapWithTarget comultiplication_map(const Presentation& P, const ScalarMatrix& X,
                                   const ScalarMatrix& Y);

/// Counit x_ij -> delta_ij, d^{±} -> 1; target is the trivial presentation.
MapWithTarget counit_map(const Presentation& P);

/// Antipode S(x) = A^{-1} d^{-1} x^t C, S(d^{±}) = d^{∓}, into G(C,D|A,B)^op.
MapWithTarget antipode_map(const Presentation& P);

/// For each source relation, applies the map and certifies the image lies in
/// the target's ideal. Counit images must vanish identically.
Certificate verify_structural_map(const StructuralMap& map, const Presentation& source,
                                  const Presentation& target, int bound = 8);

/// Coassociativity and counit laws on generators (free-level, syntactic) and
/// both antipode identities (sum_k x_ik S(x_kj) = delta_ij = sum_k S(x_ik) x_kj,
/// same for d) certified by reduction. Requires a square presentation.
Certificate verify_hopf_identities(const Presentation& P, int bound = 8);

struct MorphismSpec {
    std::string name;
    Presentation source, target;
    std::map<std::uint32_t, NCPoly> forward;            // over target alphabet
    std::optional<std::map<std::uint32_t, NCPoly>> inverse; // over source alphabet
};

/// Images of all source relations VerifiedZero in the target; when an inverse
/// is supplied, f(f^{-1}(g)) = g and f^{-1}(f(g)) = g after reduction.
Certificate verify_morphism(const MorphismSpec& spec, int bound = 8);

// The congruence and inverse-pair isomorphism families, as ready-made specs
// (all with inverses).
MorphismSpec hopf_congruence_morphism(const ScalarMatrix& A, const ScalarMatrix& B,
                                     const ScalarMatrix& P);
MorphismSpec hopf_inverse_pair_morphism(const ScalarMatrix& A, const ScalarMatrix& B,
                                 const ScalarMatrix& Q);
MorphismSpec congruence_morphism(const ScalarMatrix& A, const ScalarMatrix& B,
                                    const ScalarMatrix& C, const ScalarMatrix& D,
                                    const ScalarMatrix& P, const ScalarMatrix& Q);
MorphismSpec inverse_pair_morphism(const ScalarMatrix& A, const ScalarMatrix& B,
                                 const ScalarMatrix& C, const ScalarMatrix& D);

struct StarReport {
    Certificate certificate;
    Scalar lambda;
    bool conditionally_positive = false; // lambda positive only under declared-real parameters
};

/// *-structure of G(E, conj(E)): d* = d^{-1}, star(x)_ij = (E^t d^{-1} x E^{-t})_ij.
/// Precondition: conj(E)^t E^t conj(E) E = lambda I with lambda positive
/// rational, or a positive multiple of an even parameter monomial
/// (conditionally positive). Certifies involutivity and x* x = I = x x*.
StarReport verify_star_structure(const ScalarMatrix& E, int bound = 8);

} // namespace gab
