// Command-line front end: build presentations, certify confluence, compute
// normal forms and bases, verify Hopf structure, morphisms, witnesses,
// *-structures, fusion products and invariants. JSON bundles in, text or
// JSON reports out. Exit codes: 0 all checks passed, 1 a check failed,
// 2 input or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "gab/fusion.hpp"
#include "gab/json_io.hpp"
#include "gab/presentation.hpp"

using namespace gab;

namespace {

Json load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open bundle: " + path);
    Json j;
    in >> j;
    return j;
}

ScalarMatrix need_matrix(const Json& bundle, const std::string& key, BaseField field) {
    if (!bundle.contains(key)) throw error("bundle is missing matrix \"" + key + "\"");
    return matrix_from_json(bundle[key], field);
}

ScalarMatrix random_rational_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (;;) {
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpq_class q(num(rng), den(rng));
                q.canonicalize();
                m.at(i, j) = Scalar(GRat(q));
            }
        if (m.is_invertible()) return m;
    }
}

struct Options {
    bool json = false;
    int bound = 8;
    int max_len = 2;
    std::uint64_t seed = 20240817;
};

void emit(const Options& opt, const Json& report, const std::string& text) {
    if (opt.json) std::cout << report.dump(2) << "\n";
    else std::cout << text;
}

int run_check_diamond(const std::string& path, bool localize, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    Scalar q = parse_scalar(bundle.at("q").get<std::string>(), field);
    ScalarMatrix C = need_matrix(bundle, "C", field);
    ScalarMatrix D = need_matrix(bundle, "D", field);
    ReductionSystem sys = build_oriented_system(q, C, D);
    if (localize) sys = extend_with_localization(sys, q, C, D);
    ConfluenceReport rep = check_diamond(sys);
    Json j = confluence_report_to_json(sys, rep);
    std::string text = "ambiguities: " + std::to_string(rep.certificates.size()) +
                       ", resolved: " + std::to_string(rep.resolved_count()) +
                       "\nconfluent: " + (rep.confluent ? "yes" : "no") + "\n";
    emit(opt, j, text);
    return rep.confluent ? 0 : 1;
}

int run_normal_form(const std::string& path, const std::string& poly, bool localize,
                    const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    Scalar q = parse_scalar(bundle.at("q").get<std::string>(), field);
    ScalarMatrix C = need_matrix(bundle, "C", field);
    ScalarMatrix D = need_matrix(bundle, "D", field);
    ReductionSystem sys = build_oriented_system(q, C, D);
    if (localize) sys = extend_with_localization(sys, q, C, D);
    NCPoly p = parse_ncpoly(poly, field);
    NormalFormResult nf = sys.normal_form(p);
    Json j;
    j["input"] = p.str(false);
    j["normal_form"] = nf.nf.str(false);
    j["steps"] = nf.trace.size();
    j["trace"] = trace_to_json(nf.trace);
    emit(opt, j, nf.nf.str(false) + "\n");
    return 0;
}

int run_basis(const std::string& path, bool localize, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    Scalar q = parse_scalar(bundle.at("q").get<std::string>(), field);
    ScalarMatrix C = need_matrix(bundle, "C", field);
    ScalarMatrix D = need_matrix(bundle, "D", field);
    ReductionSystem sys = build_oriented_system(q, C, D);
    if (localize) sys = extend_with_localization(sys, q, C, D);
    std::vector<Word> words = irreducible_words(sys, opt.max_len);
    Json j;
    j["max_len"] = opt.max_len;
    j["count"] = words.size();
    Json arr = Json::array();
    std::string text = "irreducible words (length <= " + std::to_string(opt.max_len) +
                       "): " + std::to_string(words.size()) + "\n";
    for (auto& w : words) {
        arr.push_back(w.str(false));
        text += w.str(false) + "\n";
    }
    j["words"] = arr;
    emit(opt, j, text);
    return 0;
}

int run_verify_hopf(const std::string& path, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    ScalarMatrix A = need_matrix(bundle, "A", field);
    ScalarMatrix B = need_matrix(bundle, "B", field);
    Presentation P = build_hopf(A, B);

    std::vector<std::pair<std::string, Certificate>> certs;
    {
        auto [map, target] = comultiplication_map(P, A, B);
        certs.emplace_back("comultiplication", verify_structural_map(map, P, target, opt.bound));
    }
    if (bundle.contains("X") && bundle.contains("Y")) {
        ScalarMatrix X = need_matrix(bundle, "X", field);
        ScalarMatrix Y = need_matrix(bundle, "Y", field);
        auto [map, target] = comultiplication_map(P, X, Y);
        certs.emplace_back("comultiplication (middle X,Y)",
                           verify_structural_map(map, P, target, opt.bound));
    }
    {
        auto [map, target] = counit_map(P);
        certs.emplace_back("counit", verify_structural_map(map, P, target, opt.bound));
    }
    {
        auto [map, target] = antipode_map(P);
        certs.emplace_back("antipode", verify_structural_map(map, P, target, opt.bound));
    }
    certs.emplace_back("hopf identities", verify_hopf_identities(P, opt.bound));

    bool pass = true;
    Json arr = Json::array();
    std::string text;
    for (auto& [name, cert] : certs) {
        pass = pass && cert.pass;
        arr.push_back(certificate_to_json(cert));
        text += name + ": " + (cert.pass ? "pass" : "FAIL") + "\n";
    }
    Json j;
    j["certificates"] = arr;
    j["pass"] = pass;
    emit(opt, j, text);
    return pass ? 0 : 1;
}

int run_verify_morphism(const std::string& path, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    std::string kind = bundle.at("morphism").get<std::string>();
    ScalarMatrix A = need_matrix(bundle, "A", field);
    ScalarMatrix B = need_matrix(bundle, "B", field);
    std::mt19937_64 rng(opt.seed);
    auto witness = [&](const std::string& key, int n) {
        return bundle.contains(key) ? matrix_from_json(bundle[key], field)
                                    : random_rational_matrix(n, rng);
    };

    MorphismSpec spec;
    if (kind == "hopf-congruence") {
        spec = hopf_congruence_morphism(A, B, witness("P", A.rows()));
    } else if (kind == "hopf-inverse-pair") {
        spec = hopf_inverse_pair_morphism(A, B, witness("Q", A.rows()));
    } else if (kind == "congruence") {
        ScalarMatrix C = need_matrix(bundle, "C", field);
        ScalarMatrix D = need_matrix(bundle, "D", field);
        spec = congruence_morphism(A, B, C, D, witness("P", A.rows()), witness("Q", C.rows()));
    } else if (kind == "inverse-pair") {
        ScalarMatrix C = need_matrix(bundle, "C", field);
        ScalarMatrix D = need_matrix(bundle, "D", field);
        spec = inverse_pair_morphism(A, B, C, D);
    } else {
        throw error("unknown morphism kind: " + kind);
    }
    Certificate cert = verify_morphism(spec, opt.bound);
    Json j = certificate_to_json(cert);
    emit(opt, j, spec.name + ": " + (cert.pass ? "pass" : "FAIL") + "\n");
    return cert.pass ? 0 : 1;
}

int run_verify_star(const std::string& path, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    ScalarMatrix E = need_matrix(bundle, "E", field);
    StarReport rep = verify_star_structure(E, opt.bound);
    Json j = certificate_to_json(rep.certificate);
    j["lambda"] = rep.lambda.str();
    j["conditionally_positive"] = rep.conditionally_positive;
    std::string text = "lambda = " + rep.lambda.str() +
                       (rep.conditionally_positive ? " (conditionally positive)" : "") +
                       "\nstar structure: " + (rep.certificate.pass ? "pass" : "FAIL") + "\n";
    emit(opt, j, text);
    return rep.certificate.pass ? 0 : 1;
}

int run_fusion(const std::string& a_text, const std::string& b_text, const std::string& case_name,
               int order, const Options& opt) {
    FusionCase fc = case_name == "root" ? FusionCase::root_of_unity(order) : FusionCase::generic();
    SimpleLabel a = parse_label(a_text, fc);
    SimpleLabel b = parse_label(b_text, fc);
    Json j;
    j["a"] = a.str(fc);
    j["b"] = b.str(fc);
    std::string text;
    if (!fc.root) {
        SemiringElement r = tensor_generic(a, b);
        j["decomposition"] = r.str(fc);
        j["dim"] = r.dim();
        text = r.str(fc) + "\n";
    } else {
        RootTensorResult r = tensor_root_partial(a, b, fc);
        if (auto* s = std::get_if<SemiringElement>(&r)) {
            j["decomposition"] = s->str(fc);
            j["dim"] = s->dim();
            text = s->str(fc) + "\n";
        } else if (auto* ns = std::get_if<NotSemisimple>(&r)) {
            Json f = Json::array();
            std::string fs;
            for (auto& l : ns->composition_factors) {
                f.push_back(l.str(fc));
                fs += (fs.empty() ? "" : ", ") + l.str(fc);
            }
            j["not_semisimple"] = true;
            j["composition_factors"] = f;
            text = "not semisimple; composition factors: " + fs + "\n";
        } else {
            j["undetermined"] = true;
            text = "undetermined by the stated fusion rules\n";
        }
    }
    emit(opt, j, text);
    return 0;
}

int run_invariants(const std::string& path, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    ScalarMatrix A = need_matrix(bundle, "A", field);
    ScalarMatrix B = need_matrix(bundle, "B", field);
    InvariantReport rep = invariant_report(A, B);
    Json j = invariant_report_to_json(rep);
    std::string text;
    if (rep.condition_ok) {
        text = "lambda = " + rep.lambda->str() + "\nmu = " + rep.mu.str() +
               "\nkappa = " + rep.kappa->str() + "\ngenericity: " + rep.genericity.str() + "\n";
    } else {
        text = "condition failed: B^tA^tBA is not a scalar matrix\n";
    }
    emit(opt, j, text);
    return rep.condition_ok ? 0 : 1;
}

int run_verify_witness(const std::string& path, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    ScalarMatrix A = need_matrix(bundle, "A", field);
    ScalarMatrix B = need_matrix(bundle, "B", field);
    WitnessOrientation orientation = WitnessOrientation::Direct;
    if (bundle.contains("orientation") && bundle["orientation"].get<std::string>() == "inverse")
        orientation = WitnessOrientation::Inverse;
    std::mt19937_64 rng(opt.seed);
    ScalarMatrix P = bundle.contains("P") ? matrix_from_json(bundle["P"], field)
                                          : random_rational_matrix(A.rows(), rng);
    ScalarMatrix C, D;
    if (bundle.contains("C") && bundle.contains("D")) {
        C = need_matrix(bundle, "C", field);
        D = need_matrix(bundle, "D", field);
    } else {
        // Self-check mode: construct the transformed pair from P.
        ScalarMatrix Pi = P.inverse();
        if (orientation == WitnessOrientation::Direct) {
            C = P.transpose() * A * P;
            D = Pi * B * Pi.transpose();
        } else {
            C = P.transpose() * B.inverse() * P;
            D = Pi * A.inverse() * Pi.transpose();
        }
    }
    WitnessVerdict v = verify_iso_witness(A, B, C, D, P, orientation);
    Json j = witness_verdict_to_json(v);
    std::string text = v.pass ? "pass (alpha = " + v.alpha.str() + ", beta = " + v.beta.str() + ")\n"
                              : "FAIL: " + v.failure + "\n";
    emit(opt, j, text);
    return v.pass ? 0 : 1;
}

int run_galois_check(const std::string& path, const Options& opt) {
    Json bundle = load_bundle(path);
    BaseField field = field_from_json(bundle);
    Json j;
    std::string text;
    bool pass = true;
    if (bundle.contains("M")) {
        ScalarMatrix C1 = need_matrix(bundle, "C1", field);
        ScalarMatrix D1 = need_matrix(bundle, "D1", field);
        ScalarMatrix C2 = need_matrix(bundle, "C2", field);
        ScalarMatrix D2 = need_matrix(bundle, "D2", field);
        ScalarMatrix M = need_matrix(bundle, "M", field);
        WitnessVerdict v = verify_galois_iso_witness(C1, D1, C2, D2, M);
        j = witness_verdict_to_json(v);
        pass = v.pass;
        text = v.pass ? "galois iso witness: pass\n" : "galois iso witness FAIL: " + v.failure + "\n";
    } else {
        ScalarMatrix A = need_matrix(bundle, "A", field);
        ScalarMatrix B = need_matrix(bundle, "B", field);
        ScalarMatrix C = need_matrix(bundle, "C", field);
        ScalarMatrix D = need_matrix(bundle, "D", field);
        GaloisPairVerdict v = verify_galois_pair(A, B, C, D);
        j = galois_verdict_to_json(v);
        pass = v.pass;
        text = v.pass ? "galois pair conditions: pass\n" : "galois pair FAIL: " + v.failure + "\n";
    }
    emit(opt, j, text);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for the G(A,B) quantum-group family"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON reports");
    app.add_option("--bound", opt.bound, "ideal-membership search bound");
    app.add_option("--seed", opt.seed, "seed for generated witnesses");

    std::string bundle, poly, label_a, label_b, case_name = "generic";
    int order = 5;
    bool localize = false;

    auto* cd = app.add_subcommand("check-diamond", "certify confluence of the oriented presentation");
    cd->add_option("bundle", bundle)->required();
    cd->add_flag("--localize", localize, "extend with d^{-1} first");

    auto* nf = app.add_subcommand("normal-form", "reduce a polynomial to normal form");
    nf->add_option("bundle", bundle)->required();
    nf->add_option("poly", poly)->required();
    nf->add_flag("--localize", localize);

    auto* bs = app.add_subcommand("basis", "irreducible words up to a length");
    bs->add_option("bundle", bundle)->required();
    bs->add_option("--max-len", opt.max_len);
    bs->add_flag("--localize", localize);

    auto* vh = app.add_subcommand("verify-hopf", "verify Delta/epsilon/S and the Hopf identities");
    vh->add_option("bundle", bundle)->required();

    auto* vm = app.add_subcommand("verify-morphism", "verify an isomorphism of presented algebras");
    vm->add_option("bundle", bundle)->required();

    auto* vs = app.add_subcommand("verify-star", "verify the *-structure of G(E, conj E)");
    vs->add_option("bundle", bundle)->required();

    auto* fu = app.add_subcommand("fusion", "decompose a tensor product of simple labels");
    fu->add_option("a", label_a)->required();
    fu->add_option("b", label_b)->required();
    fu->add_option("--case", case_name)->check(CLI::IsMember({"generic", "root"}));
    fu->add_option("--order", order, "root-of-unity order N");

    auto* in = app.add_subcommand("invariants", "lambda, mu, kappa and genericity of a pair");
    in->add_option("bundle", bundle)->required();

    auto* vw = app.add_subcommand("verify-witness", "verify an isomorphism witness P");
    vw->add_option("bundle", bundle)->required();

    auto* gc = app.add_subcommand("galois-check", "Galois pair conditions / iso witness");
    gc->add_option("bundle", bundle)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cd->parsed()) return run_check_diamond(bundle, localize, opt);
        if (nf->parsed()) return run_normal_form(bundle, poly, localize, opt);
        if (bs->parsed()) return run_basis(bundle, localize, opt);
        if (vh->parsed()) return run_verify_hopf(bundle, opt);
        if (vm->parsed()) return run_verify_morphism(bundle, opt);
        if (vs->parsed()) return run_verify_star(bundle, opt);
        if (fu->parsed()) return run_fusion(label_a, label_b, case_name, order, opt);
        if (in->parsed()) return run_invariants(bundle, opt);
        if (vw->parsed()) return run_verify_witness(bundle, opt);
        if (gc->parsed()) return run_galois_check(bundle, opt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_failed& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
