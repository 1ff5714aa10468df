#include "gab/json_io.hpp"

#include <cctype>

namespace gab {

ScalarMatrix matrix_from_json(const Json& j, BaseField field) {
    if (!j.is_array() || j.empty()) throw error("matrix json must be a non-empty array of rows");
    std::vector<std::vector<std::string>> rows;
    for (auto& row : j) {
        std::vector<std::string> r;
        for (auto& cell : row) {
            if (cell.is_string()) r.push_back(cell.get<std::string>());
            else if (cell.is_number_integer()) r.push_back(std::to_string(cell.get<long>()));
            else throw error("matrix entries must be scalar strings or integers");
        }
        rows.push_back(std::move(r));
    }
    return ScalarMatrix::from_strings(rows, field);
}

Json matrix_to_json(const ScalarMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

BaseField field_from_json(const Json& bundle) {
    if (bundle.contains("field") && bundle["field"].get<std::string>() == "Q")
        return BaseField::Rationals;
    return BaseField::GaussianRationals;
}

Json trace_to_json(const std::vector<ReductionStep>& trace) {
    Json t = Json::array();
    for (auto& s : trace) t.push_back(Json::array({s.rule, s.position}));
    return t;
}

Json membership_trace_to_json(const std::vector<MembershipStep>& trace) {
    Json t = Json::array();
    for (auto& s : trace) t.push_back(Json::array({s.relation, s.position, s.word.str(true)}));
    return t;
}

Json confluence_report_to_json(const ReductionSystem& sys, const ConfluenceReport& rep) {
    Json j;
    Json rules = Json::array();
    for (auto& r : sys.rules()) {
        Json jr;
        jr["lhs"] = r.lhs.str(false);
        jr["rhs"] = r.rhs.str(false);
        rules.push_back(jr);
    }
    j["rules"] = rules;
    Json ambs = Json::array();
    for (auto& c : rep.certificates) {
        Json ja;
        ja["kind"] = c.ambiguity.kind_name();
        ja["rule_a"] = c.ambiguity.rule_a;
        ja["rule_b"] = c.ambiguity.rule_b;
        ja["witness"] = c.ambiguity.witness.str(false);
        ja["left_trace"] = trace_to_json(c.left_trace);
        ja["right_trace"] = trace_to_json(c.right_trace);
        ja["left_normal_form"] = c.left_normal_form.str(false);
        ja["right_normal_form"] = c.right_normal_form.str(false);
        ja["resolvable"] = c.resolvable;
        ambs.push_back(ja);
    }
    j["ambiguities"] = ambs;
    j["resolved"] = rep.resolved_count();
    j["confluent"] = rep.confluent;
    return j;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["title"] = cert.title;
    Json checks = Json::array();
    for (auto& c : cert.checks) {
        Json jc;
        jc["label"] = c.label;
        jc["verified"] = c.verified;
        if (!c.verified) jc["residue"] = c.residue.str(true);
        else jc["trace"] = membership_trace_to_json(c.trace);
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["pass"] = cert.pass;
    return j;
}

Json invariant_report_to_json(const InvariantReport& rep) {
    Json j;
    j["condition_ok"] = rep.condition_ok;
    j["lambda"] = rep.lambda ? Json(rep.lambda->str()) : Json(nullptr);
    j["mu"] = rep.mu.str();
    j["kappa"] = rep.kappa ? Json(rep.kappa->str()) : Json(nullptr);
    j["genericity"] = rep.genericity.str();
    return j;
}

Json witness_verdict_to_json(const WitnessVerdict& v) {
    Json j;
    j["pass"] = v.pass;
    if (v.pass) {
        j["alpha"] = v.alpha.str();
        j["beta"] = v.beta.str();
    } else {
        j["failure"] = v.failure;
    }
    return j;
}

Json galois_verdict_to_json(const GaloisPairVerdict& v) {
    Json j;
    j["pass"] = v.pass;
    j["lambda_ab"] = v.lambda_ab ? Json(v.lambda_ab->str()) : Json(nullptr);
    j["lambda_cd"] = v.lambda_cd ? Json(v.lambda_cd->str()) : Json(nullptr);
    j["trace_ab"] = v.trace_ab.str();
    j["trace_cd"] = v.trace_cd.str();
    if (!v.pass) j["failure"] = v.failure;
    return j;
}

namespace {

struct NCParser {
    const std::string& s;
    std::size_t pos = 0;
    BaseField field;

    void ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    NCPoly expr() {
        NCPoly r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    NCPoly term() {
        NCPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    NCPoly factor() {
        ws();
        if (pos >= s.size()) throw parse_error("unexpected end of polynomial", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            NCPoly r = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            return r;
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        // Slot tag?
        std::uint8_t slot = 0;
        bool tagged = false;
        if ((c == 'L' || c == 'R') && pos + 1 < s.size() && s[pos + 1] == ':') {
            slot = (c == 'R') ? 1 : 0;
            tagged = true;
            pos += 2;
            ws();
            c = pos < s.size() ? s[pos] : '\0';
        }
        if (c == 'D') {
            // D or Dinv
            ++pos;
            if (pos < s.size() && s.compare(pos, 3, "inv") == 0) {
                pos += 3;
                return NCPoly::gen(Gen::d_inv(slot));
            }
            return NCPoly::gen(Gen::d(slot));
        }
        if (c == 'x') {
            ++pos;
            int r, cc;
            ws();
            if (pos < s.size() && s[pos] == '(') {
                ++pos;
                r = read_int();
                if (!eat(',')) throw parse_error("expected ','", pos);
                cc = read_int();
                if (!eat(')')) throw parse_error("expected ')'", pos);
            } else {
                if (pos + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])) ||
                    !std::isdigit(static_cast<unsigned char>(s[pos + 1])))
                    throw parse_error("expected generator indices after x", pos);
                r = s[pos] - '0';
                cc = s[pos + 1] - '0';
                pos += 2;
            }
            return NCPoly::gen(Gen::x(r, cc, slot));
        }
        if (tagged) throw parse_error("expected generator after slot tag", pos);
        // Scalar atom: parse greedily up to the next '*' at depth 0 that is
        // followed by a generator, or to +/- at depth 0.
        std::size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            char ch = s[pos];
            if (ch == '(') ++depth;
            if (ch == ')') { if (!depth) break; --depth; }
            if (!depth && (ch == '+' || ch == '-' || ch == '*')) break;
            ++pos;
        }
        if (pos == start) throw parse_error("expected scalar or generator", pos);
        Scalar sc = parse_scalar(s.substr(start, pos - start), field);
        return NCPoly(sc);
    }
    int read_int() {
        ws();
        int v = 0;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected integer", pos);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }
};

} // namespace

NCPoly parse_ncpoly(const std::string& text, BaseField field) {
    NCParser p{text, 0, field};
    NCPoly r = p.expr();
    p.ws();
    if (p.pos != text.size()) throw parse_error("trailing input in polynomial", p.pos);
    return r;
}

} // namespace gab
