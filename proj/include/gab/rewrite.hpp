#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gab/ncpoly.hpp"

namespace gab {

/// Oriented rule W_sigma -> f_sigma. Invariant (checked by ReductionSystem):
/// every word of rhs is strictly smaller than lhs, so rewriting always
/// decreases the word multiset and terminates.
struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

struct ReductionStep {
    int rule;
    int position; // offset of the lhs occurrence inside the rewritten word
};

struct NormalFormResult {
    NCPoly nf;
    std::vector<ReductionStep> trace;
};

struct Ambiguity {
    enum Kind { Overlap, Inclusion } kind;
    int rule_a = 0, rule_b = 0;
    Word witness;       // minimal word admitting both reductions
    int position_b = 0; // where rule_b's lhs sits inside the witness (rule_a at 0)

    std::string kind_name() const { return kind == Overlap ? "overlap" : "inclusion"; }
};

struct ResolutionCertificate {
    Ambiguity ambiguity;
    NCPoly left_normal_form;  // rule_a applied first, then normal form
    NCPoly right_normal_form; // rule_b applied first, then normal form
    bool resolvable = false;  // iff the two normal forms coincide
    std::vector<ReductionStep> left_trace, right_trace;
};

struct ConfluenceReport {
    std::vector<ResolutionCertificate> certificates;
    bool confluent = false;
    std::size_t resolved_count() const;
};

class ReductionSystem {
public:
    ReductionSystem() = default;
    /// Validates: no duplicate lhs, every rule order-decreasing.
    ReductionSystem(std::vector<RewriteRule> rules, std::vector<std::uint32_t> alphabet);

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<std::uint32_t>& alphabet() const { return alphabet_; }

    /// One elementary reduction of word `w` (present in p) at `pos` by `rule`.
    /// Exposed so tests can drive randomized strategies.
    static NCPoly apply_rule_at(const NCPoly& p, const RewriteRule& rule, const Word& w, std::size_t pos);

    /// Deterministic strategy: largest reducible word, leftmost occurrence,
    /// lowest rule index. For confluent systems the result is
    /// strategy-independent. Throws fuel_exhausted past `fuel` steps.
    NormalFormResult normal_form(const NCPoly& p, std::size_t fuel = default_fuel) const;

    /// Locates the next reduction under the deterministic strategy, if any.
    struct Redex {
        std::size_t rule;
        std::size_t position;
        Word word;
    };
    std::optional<Redex> find_redex(const NCPoly& p) const;

    /// Replays a recorded trace. The first step may be any valid reduction of
    /// the (single-word) start polynomial; later steps must coincide with the
    /// deterministic strategy. Throws gab::error when the trace does not
    /// replay bit-for-bit.
    NCPoly replay_trace(const NCPoly& start, const std::vector<ReductionStep>& trace) const;

    bool is_irreducible_word(const Word& w) const;

    static constexpr std::size_t default_fuel = 1'000'000;

private:
    std::vector<RewriteRule> rules_;
    std::vector<std::uint32_t> alphabet_;
};

/// Complete enumeration of overlap and inclusion ambiguities, in
/// deterministic (rule_a, rule_b, position) order.
std::vector<Ambiguity> find_ambiguities(const ReductionSystem& sys);

/// Reduce the witness both ways (rule_a first / rule_b first) to normal form.
ResolutionCertificate resolve_ambiguity(const Ambiguity& amb, const ReductionSystem& sys,
                                        std::size_t fuel = ReductionSystem::default_fuel);

/// Diamond lemma check: confluent iff every ambiguity is resolvable; then
/// irreducible words form a basis of the quotient.
ConfluenceReport check_diamond(const ReductionSystem& sys);

/// All irreducible words of length <= max_len, in degree-lex order.
std::vector<Word> irreducible_words(const ReductionSystem& sys, int max_len);

/// Sound ideal-membership certificate: p rewritten to 0 by two-sided multiples
/// of the relations. Unknown is not a disproof.
struct MembershipStep {
    int relation;
    int position;
    Word word; // the word the relation's leading word was matched in
};
struct VerifiedZero {
    std::vector<MembershipStep> trace;
};
struct MembershipUnknown {
    NCPoly residue;
};
using MembershipResult = std::variant<VerifiedZero, MembershipUnknown>;

bool is_verified_zero(const MembershipResult& r);

/// Deterministic leading-word reduction by the relations (free; strictly
/// descending, hence terminating), then breadth-first search over alternative
/// single two-sided applications with memoized canonical forms, up to `bound`
/// levels.
MembershipResult ideal_membership_search(const NCPoly& p, const std::vector<NCPoly>& relations,
                                         int bound = 8);

} // namespace gab
