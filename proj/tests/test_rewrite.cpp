#include <doctest.h>

#include <algorithm>
#include <map>
#include <thread>

#include "gab/presentation.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gab;
using namespace gabtest;

namespace {

struct AppendixInstance {
    Scalar q, p1, p2;
    ScalarMatrix C, D;
    ReductionSystem sys;
};

/// (C,D) = (A_{p1}, A_{p2}) with p2 = q^2/p1 over Q(q,p1).
AppendixInstance oriented_p1p2() {
    Scalar q = Scalar::parameter("q"), p1 = Scalar::parameter("p1");
    Scalar p2 = q * q / p1;
    ScalarMatrix C = aq(p1), D = aq(p2);
    return {q, p1, p2, C, D, build_oriented_system(q, C, D)};
}

/// GL_q(2): (C,D) = (A_q, A_q).
AppendixInstance oriented_glq2() {
    Scalar q = Scalar::parameter("q");
    ScalarMatrix C = aq(q), D = aq(q);
    return {q, q, q, C, D, build_oriented_system(q, C, D)};
}

NCPoly gen2(int i, int j) { return NCPoly::gen(Gen::x(i, j)); }

/// The x_2i x_1j-solving family (entries of x^tA_qx - Cd) and the (1,2)
/// entry of xDx^t - A_q d.
std::vector<NCPoly> cross_family_relations(const Scalar& q, const ScalarMatrix& C) {
    std::vector<NCPoly> rels;
    Scalar qi = q.inverse();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            rels.push_back(gen2(2, i) * gen2(1, j) -
                           qi * (gen2(1, i) * gen2(2, j) - C.at(i - 1, j - 1) * NCPoly::gen(Gen::d())));
    return rels;
}

NCPoly unit_entry_relation(const ScalarMatrix& D) {
    NCPoly rel;
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) rel += D.at(k - 1, l - 1) * (gen2(1, k) * gen2(2, l));
    return rel - NCPoly::gen(Gen::d());
}

/// Entry (2,1) of xDx^t - A_q d: sum D_kl x_2k x_1l + q d, since (A_q)_21 = -q.
NCPoly redundant_entry_relation(const Scalar& q, const ScalarMatrix& D) {
    NCPoly rel;
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) rel += D.at(k - 1, l - 1) * (gen2(2, k) * gen2(1, l));
    return rel + q * NCPoly::gen(Gen::d());
}

NCPoly random_reduce(const ReductionSystem& sys, NCPoly p, std::mt19937_64& g) {
    for (;;) {
        struct Cand {
            std::size_t rule, pos;
            Word word;
        };
        std::vector<Cand> cands;
        for (auto& [w, c] : p.terms())
            for (std::size_t pos = 0; pos < w.size(); ++pos)
                for (std::size_t ri = 0; ri < sys.rules().size(); ++ri)
                    if (w.find(sys.rules()[ri].lhs, pos) == pos) cands.push_back({ri, pos, w});
        if (cands.empty()) return p;
        std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
        auto& c = cands[pick(g)];
        NCPoly next = ReductionSystem::apply_rule_at(p, sys.rules()[c.rule], c.word, c.pos);
        // Step decrease: every word new in `next` is strictly below the
        // rewritten word.
        for (auto& [w2, c2] : next.terms())
            if (p.coeff(w2) != c2) CHECK(word_compare(w2, c.word) == Cmp::LT);
        p = std::move(next);
    }
}

} // namespace

TEST_CASE("oriented-presentation preconditions hold for (A_p1, A_p2), p1 p2 = q^2") {
    Scalar q = Scalar::parameter("q"), p1 = Scalar::parameter("p1");
    Scalar p2 = q * q / p1;
    ScalarMatrix C = aq(p1), D = aq(p2);
    CHECK((C * D.transpose()).trace() == Scalar(1) + q * q);
    auto schur = (D.transpose() * C.transpose() * D * C).as_scalar_multiple_of_identity();
    REQUIRE(schur.has_value());
    CHECK(*schur == q * q);
    CHECK(D.at(1, 1).is_zero());
    // (CD)_{ij} = q^2 (C^{-1}D^{-1})_{ji}
    ScalarMatrix CD = C * D, CiDi = C.inverse() * D.inverse();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(CD.at(i, j) == q * q * CiDi.at(j, i));

    auto sys = build_oriented_system(q, C, D);
    CHECK(sys.rules().size() == 11); // m^2 + 3 + 2m at m = 2
}

TEST_CASE("oriented-system precondition gates") {
    Scalar q = Scalar::parameter("q");
    // D with D_mm != 0
    ScalarMatrix D = ScalarMatrix::identity(2);
    CHECK_THROWS_AS(build_oriented_system(q, aq(q), D), precondition_failed);
    // trace mismatch: (C,D) = (A_q, A_q) against wrong q
    CHECK_THROWS_AS(build_oriented_system(q + Scalar(1), aq(q), aq(q)), precondition_failed);
}

TEST_CASE("normal form: GL_q(2) single-step examples") {
    auto inst = oriented_glq2();
    Scalar qi = inst.q.inverse();

    // x21*x11 -> q^{-1} x11 x21  (C_11 = 0)
    auto r1 = inst.sys.normal_form(gen2(2, 1) * gen2(1, 1));
    CHECK(r1.nf == qi * (gen2(1, 1) * gen2(2, 1)));
    CHECK(r1.trace.size() == 1);

    // x21*x12 -> q^{-1} x11 x22 - q^{-1} d  (C_12 = 1)
    auto r2 = inst.sys.normal_form(gen2(2, 1) * gen2(1, 2));
    CHECK(r2.nf == qi * (gen2(1, 1) * gen2(2, 2)) - qi * NCPoly::gen(Gen::d()));

    // irreducible input: itself, empty trace
    NCPoly irr = gen2(1, 1) * gen2(2, 2);
    auto r3 = inst.sys.normal_form(irr);
    CHECK(r3.nf == irr);
    CHECK(r3.trace.empty());
}

TEST_CASE("ambiguity enumeration: 15 overlaps at m = 2") {
    auto inst = oriented_p1p2();
    auto ambs = find_ambiguities(inst.sys);
    CHECK(ambs.size() == 15); // 4m + m^2 + 3 at m = 2
    for (auto& a : ambs) CHECK(a.kind == Ambiguity::Overlap); // no inclusion ambiguities
    // Count by witness shape: the m^2 family (x_2i x_1j, x_1j d) has witness
    // x_2i x_1j d.
    int with_d = 0;
    for (auto& a : ambs)
        if (a.witness.letters.back() == Gen::d()) ++with_d;
    CHECK(with_d == 4 + 3); // m^2 family + three singletons
}

TEST_CASE("ambiguity enumeration: degenerate cases") {
    // single rule with lhs x11*x12: no self-overlap
    std::vector<RewriteRule> rules{{Word({Gen::x(1, 1), Gen::x(1, 2)}), NCPoly()}};
    ReductionSystem sys(rules, {Gen::x(1, 1), Gen::x(1, 2)});
    CHECK(find_ambiguities(sys).empty());

    // lhs ab and bc overlap once with witness abc
    std::uint32_t a = Gen::x(1, 1), b = Gen::x(1, 2), c = Gen::x(2, 1);
    std::vector<RewriteRule> rules2{{Word({a, b}), NCPoly()}, {Word({b, c}), NCPoly()}};
    ReductionSystem sys2(rules2, {a, b, c});
    auto ambs = find_ambiguities(sys2);
    REQUIRE(ambs.size() == 1);
    CHECK(ambs[0].witness == Word({a, b, c}));
    CHECK(ambs[0].kind == Ambiguity::Overlap);

    // inclusion: lhs abc contains lhs b
    std::vector<RewriteRule> rules3{{Word({a, b, c}), NCPoly()}, {Word({b}), NCPoly()}};
    ReductionSystem sys3(rules3, {a, b, c});
    auto ambs3 = find_ambiguities(sys3);
    REQUIRE(ambs3.size() == 1);
    CHECK(ambs3[0].kind == Ambiguity::Inclusion);
    CHECK(ambs3[0].position_b == 1);
}

TEST_CASE("all 15 ambiguities resolve for (A_p1, A_p2) with p1 p2 = q^2") {
    auto inst = oriented_p1p2();
    auto rep = check_diamond(inst.sys);
    CHECK(rep.confluent);
    CHECK(rep.certificates.size() == 15);
    CHECK(rep.resolved_count() == 15);
}

TEST_CASE("specific resolution: (x21 x11, x11 d) meets at one normal form") {
    auto inst = oriented_p1p2();
    auto ambs = find_ambiguities(inst.sys);
    auto it = std::find_if(ambs.begin(), ambs.end(), [](const Ambiguity& a) {
        return a.witness == Word({Gen::x(2, 1), Gen::x(1, 1), Gen::d()});
    });
    REQUIRE(it != ambs.end());
    auto cert = resolve_ambiguity(*it, inst.sys);
    CHECK(cert.resolvable);
    CHECK(cert.left_normal_form == cert.right_normal_form);
    CHECK(!cert.left_trace.empty());
    CHECK(!cert.right_trace.empty());
}

TEST_CASE("mutated system is detected as non-confluent") {
    auto inst = oriented_p1p2();
    std::vector<RewriteRule> rules = inst.sys.rules();
    // Rule (2) solves x_1m x_2v; double its d term.
    bool mutated = false;
    for (auto& r : rules) {
        if (r.lhs == Word({Gen::x(1, 2), Gen::x(2, 1)})) {
            NCPoly d = NCPoly::gen(Gen::d());
            Scalar c = r.rhs.coeff(Word::of(Gen::d()));
            REQUIRE(!c.is_zero());
            r.rhs += c * d; // d coefficient doubled
            mutated = true;
        }
    }
    REQUIRE(mutated);
    ReductionSystem broken(rules, inst.sys.alphabet());
    auto rep = check_diamond(broken);
    CHECK(!rep.confluent);
    CHECK(rep.resolved_count() < rep.certificates.size());
}

TEST_CASE("empty rule set is vacuously confluent") {
    ReductionSystem sys({}, {Gen::d(), Gen::x(1, 1)});
    auto rep = check_diamond(sys);
    CHECK(rep.confluent);
    CHECK(rep.certificates.empty());
}

TEST_CASE("irreducible words: 1, 5, 14 and the dense-rank cross-check") {
    auto inst = oriented_p1p2();
    auto words = irreducible_words(inst.sys, 2);
    CHECK(words.size() == 20);
    long len0 = 0, len1 = 0, len2 = 0;
    for (auto& w : words) {
        if (w.size() == 0) ++len0;
        if (w.size() == 1) ++len1;
        if (w.size() == 2) ++len2;
    }
    CHECK(len0 == 1);
    CHECK(len1 == 5);
    CHECK(len2 == 14);

    auto zero = irreducible_words(inst.sys, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(quotient_rank_oracle(inst.sys, 2) == 20);
}

TEST_CASE("ideal membership: relation itself is one step") {
    auto inst = oriented_p1p2();
    auto rels = cross_family_relations(inst.q, inst.C);
    auto res = ideal_membership_search(rels[0], rels);
    REQUIRE(is_verified_zero(res));
    CHECK(std::get<VerifiedZero>(res).trace.size() == 1);
}

TEST_CASE("the (2,1) second-family entry is implied by the cross family and the (1,2) entry") {
    auto inst = oriented_p1p2();
    std::vector<NCPoly> rels = cross_family_relations(inst.q, inst.C);
    rels.push_back(unit_entry_relation(inst.D));
    NCPoly r5 = redundant_entry_relation(inst.q, inst.D);
    auto res = ideal_membership_search(r5, rels);
    CHECK(is_verified_zero(res));
}

TEST_CASE("membership soundness: the unit is never certified in GL_q(2)") {
    auto inst = oriented_p1p2();
    std::vector<NCPoly> rels = cross_family_relations(inst.q, inst.C);
    rels.push_back(unit_entry_relation(inst.D));
    auto res = ideal_membership_search(NCPoly::one(), rels, 3);
    CHECK(!is_verified_zero(res));
    CHECK(std::get<MembershipUnknown>(res).residue == NCPoly::one());
}

TEST_CASE("normal form is idempotent and respects products (confluent system)") {
    auto inst = oriented_glq2();
    std::vector<std::uint32_t> alphabet = inst.sys.alphabet();
    auto g = rng();
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 4), coeff(-4, 4);
    for (int iter = 0; iter < 25; ++iter) {
        NCPoly p, q;
        for (int t = 0; t < 3; ++t) {
            Word w1, w2;
            int l1 = len(g), l2 = len(g);
            for (int k = 0; k < l1; ++k) w1.letters.push_back(alphabet[pick(g)]);
            for (int k = 0; k < l2; ++k) w2.letters.push_back(alphabet[pick(g)]);
            p.add_term(w1, Scalar(coeff(g)));
            q.add_term(w2, Scalar(coeff(g)));
        }
        NCPoly nf_p = inst.sys.normal_form(p).nf;
        CHECK(inst.sys.normal_form(nf_p).nf == nf_p);
        NCPoly nf_q = inst.sys.normal_form(q).nf;
        // NF(p*q) = NF(NF(p)*NF(q)): quotient multiplication well-defined.
        CHECK(inst.sys.normal_form(p * q).nf == inst.sys.normal_form(nf_p * nf_q).nf);
    }
}

TEST_CASE("normal form is strategy-independent on the certified system") {
    auto inst = oriented_glq2();
    REQUIRE(check_diamond(inst.sys).confluent);
    std::vector<std::uint32_t> alphabet = inst.sys.alphabet();
    auto g = rng();
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(1, 4), coeff(-4, 4);
    for (int iter = 0; iter < 10; ++iter) {
        NCPoly p;
        for (int t = 0; t < 2; ++t) {
            Word w;
            int l = len(g);
            for (int k = 0; k < l; ++k) w.letters.push_back(alphabet[pick(g)]);
            p.add_term(w, Scalar(coeff(g)));
        }
        NCPoly reference = inst.sys.normal_form(p).nf;
        for (int run = 0; run < 10; ++run) CHECK(random_reduce(inst.sys, p, g) == reference);
    }
}

TEST_CASE("zero-divisor property: d*w stays irreducible, distinct") {
    auto inst = oriented_p1p2();
    auto words = irreducible_words(inst.sys, 3);
    std::vector<std::string> images;
    for (auto& w : words) {
        NCPoly dw = NCPoly::gen(Gen::d()) * NCPoly::word(w);
        auto nf = inst.sys.normal_form(dw);
        CHECK(nf.nf == dw); // d*w already irreducible
        images.push_back(nf.nf.str());
    }
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
}

TEST_CASE("order-decreasing violations are rejected at construction") {
    // x11 -> x11*x12 increases; must throw.
    std::vector<RewriteRule> rules{{Word({Gen::x(1, 1)}),
                                    NCPoly::gen(Gen::x(1, 1)) * NCPoly::gen(Gen::x(1, 2))}};
    CHECK_THROWS_AS(ReductionSystem(rules, {Gen::x(1, 1), Gen::x(1, 2)}), error);
}

TEST_CASE("fuel guard raises instead of truncating") {
    auto inst = oriented_glq2();
    NCPoly p = gen2(2, 2) * gen2(2, 1) * gen2(1, 1) * NCPoly::gen(Gen::d());
    CHECK_THROWS_AS(inst.sys.normal_form(p, 1), fuel_exhausted);
}

TEST_CASE("normal form on distinct polynomials is safe to run in parallel") {
    auto inst = oriented_glq2();
    std::vector<NCPoly> inputs;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            inputs.push_back(gen2(2, i) * gen2(1, j) * NCPoly::gen(Gen::d()));
    std::vector<NCPoly> sequential;
    for (auto& p : inputs) sequential.push_back(inst.sys.normal_form(p).nf);
    std::vector<NCPoly> parallel(inputs.size());
    std::vector<std::thread> workers;
    for (std::size_t k = 0; k < inputs.size(); ++k)
        workers.emplace_back(
            [&, k] { parallel[k] = inst.sys.normal_form(inputs[k]).nf; });
    for (auto& w : workers) w.join();
    for (std::size_t k = 0; k < inputs.size(); ++k) CHECK(parallel[k] == sequential[k]);
}

TEST_CASE("certificate traces replay bit-for-bit to the stated normal forms") {
    auto inst = oriented_p1p2();
    auto rep = check_diamond(inst.sys);
    REQUIRE(rep.confluent);
    for (auto& cert : rep.certificates) {
        NCPoly witness = NCPoly::word(cert.ambiguity.witness);
        CHECK(inst.sys.replay_trace(witness, cert.left_trace) == cert.left_normal_form);
        CHECK(inst.sys.replay_trace(witness, cert.right_trace) == cert.right_normal_form);
    }
    // A corrupted trace is rejected.
    auto& c0 = rep.certificates.front();
    if (c0.left_trace.size() > 1) {
        auto bad = c0.left_trace;
        bad[1].position += 1;
        CHECK_THROWS_AS(inst.sys.replay_trace(NCPoly::word(c0.ambiguity.witness), bad), error);
    }
}
