#include "gab/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace gab {

std::size_t ConfluenceReport::resolved_count() const {
    std::size_t n = 0;
    for (auto& c : certificates) n += c.resolvable ? 1 : 0;
    return n;
}

ReductionSystem::ReductionSystem(std::vector<RewriteRule> rules, std::vector<std::uint32_t> alphabet)
    : rules_(std::move(rules)), alphabet_(std::move(alphabet)) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (r.lhs.empty()) throw error("rule " + std::to_string(i) + " has empty lhs");
        for (auto& [w, c] : r.rhs.terms()) {
            if (word_compare(w, r.lhs) != Cmp::LT)
                throw error("rule " + std::to_string(i) + " is not order-decreasing: " +
                            w.str() + " !< " + r.lhs.str());
        }
        for (std::size_t j = 0; j < i; ++j)
            if (rules_[j].lhs == r.lhs)
                throw error("rules " + std::to_string(j) + " and " + std::to_string(i) +
                            " share the lhs " + r.lhs.str());
    }
}

NCPoly ReductionSystem::apply_rule_at(const NCPoly& p, const RewriteRule& rule, const Word& w,
                                      std::size_t pos) {
    Scalar c = p.coeff(w);
    if (c.is_zero()) throw error("apply_rule_at: word not present in polynomial");
    if (w.find(rule.lhs, pos) != pos) throw error("apply_rule_at: lhs does not match at position");
    Word u = w.prefix(pos);
    Word v = w.suffix(w.size() - pos - rule.lhs.size());
    NCPoly r = p;
    r.add_term(w, -c);
    r += c * (NCPoly::word(u) * rule.rhs * NCPoly::word(v));
    return r;
}

std::optional<ReductionSystem::Redex> ReductionSystem::find_redex(const NCPoly& p) const {
    // Largest word first (map order is ascending, walk backwards).
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Word& w = it->first;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
                const Word& lhs = rules_[ri].lhs;
                if (pos + lhs.size() <= w.size() && w.find(lhs, pos) == pos)
                    return Redex{ri, pos, w};
            }
        }
    }
    return std::nullopt;
}

NormalFormResult ReductionSystem::normal_form(const NCPoly& p, std::size_t fuel) const {
    NormalFormResult res;
    res.nf = p;
    std::size_t steps = 0;
    while (auto rdx = find_redex(res.nf)) {
        if (++steps > fuel) throw fuel_exhausted();
        res.nf = apply_rule_at(res.nf, rules_[rdx->rule], rdx->word, rdx->position);
        res.trace.push_back({static_cast<int>(rdx->rule), static_cast<int>(rdx->position)});
    }
    return res;
}

NCPoly ReductionSystem::replay_trace(const NCPoly& start,
                                     const std::vector<ReductionStep>& trace) const {
    NCPoly p = start;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const auto& step = trace[k];
        if (step.rule < 0 || static_cast<std::size_t>(step.rule) >= rules_.size())
            throw error("replay: rule index out of range");
        Word w;
        if (k == 0) {
            if (p.term_count() != 1) throw error("replay: start must be a single word");
            w = p.terms().begin()->first;
        } else {
            auto rdx = find_redex(p);
            if (!rdx) throw error("replay: polynomial already irreducible");
            if (static_cast<int>(rdx->rule) != step.rule ||
                static_cast<int>(rdx->position) != step.position)
                throw error("replay: step " + std::to_string(k) +
                            " deviates from the deterministic strategy");
            w = rdx->word;
        }
        p = apply_rule_at(p, rules_[static_cast<std::size_t>(step.rule)], w,
                          static_cast<std::size_t>(step.position));
    }
    return p;
}

bool ReductionSystem::is_irreducible_word(const Word& w) const {
    for (auto& r : rules_)
        if (w.contains(r.lhs)) return false;
    return true;
}

std::vector<Ambiguity> find_ambiguities(const ReductionSystem& sys) {
    std::vector<Ambiguity> out;
    const auto& rules = sys.rules();
    for (std::size_t a = 0; a < rules.size(); ++a) {
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const Word& la = rules[a].lhs;
            const Word& lb = rules[b].lhs;
            // Overlap: proper suffix of lhs_a = proper prefix of lhs_b.
            for (std::size_t k = 1; k < std::min(la.size(), lb.size()); ++k) {
                if (la.suffix(k) == lb.prefix(k)) {
                    Ambiguity amb;
                    amb.kind = Ambiguity::Overlap;
                    amb.rule_a = static_cast<int>(a);
                    amb.rule_b = static_cast<int>(b);
                    amb.witness = la * lb.suffix(lb.size() - k);
                    amb.position_b = static_cast<int>(la.size() - k);
                    out.push_back(std::move(amb));
                }
            }
            // Inclusion: lhs_b a proper factor of lhs_a.
            if (a != b && lb.size() < la.size()) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
                    if (la.find(lb, pos) == pos) {
                        Ambiguity amb;
                        amb.kind = Ambiguity::Inclusion;
                        amb.rule_a = static_cast<int>(a);
                        amb.rule_b = static_cast<int>(b);
                        amb.witness = la;
                        amb.position_b = static_cast<int>(pos);
                        out.push_back(std::move(amb));
                    }
                }
            }
        }
    }
    return out;
}

ResolutionCertificate resolve_ambiguity(const Ambiguity& amb, const ReductionSystem& sys,
                                        std::size_t fuel) {
    ResolutionCertificate cert;
    cert.ambiguity = amb;
    const auto& rules = sys.rules();
    NCPoly w = NCPoly::word(amb.witness);

    NCPoly left = ReductionSystem::apply_rule_at(w, rules[amb.rule_a], amb.witness, 0);
    NormalFormResult lr = sys.normal_form(left, fuel);
    cert.left_trace.push_back({amb.rule_a, 0});
    cert.left_trace.insert(cert.left_trace.end(), lr.trace.begin(), lr.trace.end());
    cert.left_normal_form = lr.nf;

    NCPoly right = ReductionSystem::apply_rule_at(w, rules[amb.rule_b], amb.witness,
                                                  static_cast<std::size_t>(amb.position_b));
    NormalFormResult rr = sys.normal_form(right, fuel);
    cert.right_trace.push_back({amb.rule_b, amb.position_b});
    cert.right_trace.insert(cert.right_trace.end(), rr.trace.begin(), rr.trace.end());
    cert.right_normal_form = rr.nf;

    cert.resolvable = (cert.left_normal_form == cert.right_normal_form);
    return cert;
}

ConfluenceReport check_diamond(const ReductionSystem& sys) {
    ConfluenceReport rep;
    for (auto& amb : find_ambiguities(sys)) rep.certificates.push_back(resolve_ambiguity(amb, sys));
    rep.confluent = std::all_of(rep.certificates.begin(), rep.certificates.end(),
                                [](const ResolutionCertificate& c) { return c.resolvable; });
    return rep;
}

std::vector<Word> irreducible_words(const ReductionSystem& sys, int max_len) {
    std::vector<Word> out;
    std::vector<Word> level{Word::one()};
    out.push_back(Word::one());
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (auto& w : level) {
            for (auto g : sys.alphabet()) {
                Word ext = w * Word::of(g);
                // The prefix is already irreducible; only suffixes ending at
                // the new letter can match a lhs.
                bool ok = true;
                for (auto& r : sys.rules()) {
                    if (r.lhs.size() <= ext.size() && ext.ends_with(r.lhs)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next.push_back(std::move(ext));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

bool is_verified_zero(const MembershipResult& r) {
    return std::holds_alternative<VerifiedZero>(r);
}

namespace {

struct OrientedRelation {
    Word lead;
    Scalar lead_coeff;
    const NCPoly* poly;
};

// One descending application: eliminate the occurrence of rel.lead inside w.
NCPoly apply_relation(const NCPoly& p, const OrientedRelation& rel, const Word& w, std::size_t pos) {
    Scalar c = p.coeff(w);
    Word u = w.prefix(pos);
    Word v = w.suffix(w.size() - pos - rel.lead.size());
    Scalar factor = c / rel.lead_coeff;
    return p - factor * (NCPoly::word(u) * (*rel.poly) * NCPoly::word(v));
}

struct Candidate {
    std::size_t rel;
    std::size_t pos;
    Word word;
};

std::vector<Candidate> candidates(const NCPoly& p, const std::vector<OrientedRelation>& rels) {
    std::vector<Candidate> cs;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Word& w = it->first;
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            for (std::size_t pos = w.find(rels[ri].lead); pos != Word::npos;
                 pos = w.find(rels[ri].lead, pos + 1))
                cs.push_back({ri, pos, w});
        }
    }
    return cs;
}

// Deterministic full reduction; returns trace when zero is reached.
std::pair<NCPoly, std::vector<MembershipStep>> reduce_fully(NCPoly p,
                                                            const std::vector<OrientedRelation>& rels) {
    std::vector<MembershipStep> trace;
    std::size_t steps = 0;
    for (;;) {
        if (p.is_zero()) break;
        if (++steps > ReductionSystem::default_fuel) throw fuel_exhausted();
        // Largest word, leftmost position, lowest relation index.
        bool found = false;
        for (auto it = p.terms().rbegin(); it != p.terms().rend() && !found; ++it) {
            const Word& w = it->first;
            for (std::size_t pos = 0; pos < w.size() && !found; ++pos) {
                for (std::size_t ri = 0; ri < rels.size(); ++ri) {
                    if (pos + rels[ri].lead.size() <= w.size() && w.find(rels[ri].lead, pos) == pos) {
                        trace.push_back({static_cast<int>(ri), static_cast<int>(pos), w});
                        p = apply_relation(p, rels[ri], w, pos);
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found) break;
    }
    return {std::move(p), std::move(trace)};
}

} // namespace

MembershipResult ideal_membership_search(const NCPoly& p, const std::vector<NCPoly>& relations,
                                         int bound) {
    if (bound < 1) bound = 1;
    std::vector<OrientedRelation> rels;
    for (auto& r : relations) {
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            // A nonzero constant relation makes the quotient zero; everything
            // is in the ideal.
            VerifiedZero vz;
            vz.trace.push_back({static_cast<int>(&r - relations.data()), 0, Word::one()});
            return vz;
        }
        rels.push_back({r.leading_word(), r.leading_coeff(), &r});
    }
    if (p.is_zero()) return VerifiedZero{};
    if (rels.empty()) return MembershipUnknown{p};

    auto [nf, trace] = reduce_fully(p, rels);
    if (nf.is_zero()) return VerifiedZero{std::move(trace)};

    // BFS over alternative single applications from the original polynomial,
    // each followed by a free deterministic pass.
    std::set<std::string> seen;
    struct Node {
        NCPoly poly;
        std::vector<MembershipStep> trace;
        int depth;
    };
    std::deque<Node> queue;
    queue.push_back({p, {}, 0});
    seen.insert(p.str());
    std::size_t expansions = 0;
    const std::size_t max_expansions = 20000;

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (node.depth >= bound) continue;
        for (auto& cand : candidates(node.poly, rels)) {
            if (++expansions > max_expansions) return MembershipUnknown{nf};
            NCPoly next = apply_relation(node.poly, rels[cand.rel], cand.word, cand.pos);
            std::vector<MembershipStep> nt = node.trace;
            nt.push_back({static_cast<int>(cand.rel), static_cast<int>(cand.pos), cand.word});
            if (next.is_zero()) return VerifiedZero{std::move(nt)};
            auto [rnf, rtrace] = reduce_fully(next, rels);
            if (rnf.is_zero()) {
                nt.insert(nt.end(), rtrace.begin(), rtrace.end());
                return VerifiedZero{std::move(nt)};
            }
            if (seen.insert(next.str()).second)
                queue.push_back({std::move(next), std::move(nt), node.depth + 1});
        }
    }
    return MembershipUnknown{nf};
}

} // namespace gab
