#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// End-to-end runs of the CLI binary against the bundled inputs: exit-code
// contract and byte-identical reports across runs.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GABCLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string bundle(const std::string& name) { return std::string(GAB_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("check-diamond reports 15/15 on the two-parameter instance") {
    RunResult r = run("check-diamond " + bundle("gl_p1p2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ambiguities: 15, resolved: 15") != std::string::npos);
    CHECK(r.output.find("confluent: yes") != std::string::npos);
}

TEST_CASE("check-diamond --localize still confluent; reports are byte-identical") {
    RunResult a = run("--json check-diamond --localize " + bundle("glq2.json"));
    RunResult b = run("--json check-diamond --localize " + bundle("glq2.json"));
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"confluent\": true") != std::string::npos);
}

TEST_CASE("normal-form command") {
    RunResult r = run("normal-form " + bundle("glq2.json") + " \"x21*x12\"");
    CHECK(r.exit_code == 0);
    // q^{-1} x11 x22 - q^{-1} d
    CHECK(r.output.find("x11*x22") != std::string::npos);
    CHECK(r.output.find("D") != std::string::npos);
}

TEST_CASE("basis command counts 20 words at max length 2") {
    RunResult r = run("basis " + bundle("gl_p1p2.json") + " --max-len 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("irreducible words (length <= 2): 20") != std::string::npos);
}

TEST_CASE("verify-hopf passes on GL_q(2) with the free middle object") {
    RunResult r = run("verify-hopf " + bundle("hopf_glq2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify-morphism with generated witnesses honors --seed") {
    RunResult a = run("--json --seed 7 verify-morphism " + bundle("morphism_hopf_congruence.json"));
    RunResult b = run("--json --seed 7 verify-morphism " + bundle("morphism_hopf_congruence.json"));
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run("verify-morphism " + bundle("morphism_inverse_pair.json"));
    CHECK(c.exit_code == 0);
}

TEST_CASE("verify-star reports lambda = q^2") {
    RunResult r = run("verify-star " + bundle("star_aq.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("lambda = q^2") != std::string::npos);
    CHECK(r.output.find("conditionally positive") != std::string::npos);
}

TEST_CASE("fusion command: generic and root cases") {
    RunResult r = run("fusion \"U(1,0)\" \"U(1,0)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("U(2,0) + U(0,1)") != std::string::npos);

    RunResult root = run("fusion --case root --order 6 \"U(2,0)\" \"U(1,0)\"");
    CHECK(root.exit_code == 0);
    CHECK(root.output.find("not semisimple") != std::string::npos);
}

TEST_CASE("invariants command: GL_{p,q} and Jordanian values") {
    RunResult r = run("invariants " + bundle("invariants_glpq.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("lambda = p*q") != std::string::npos);
    CHECK(r.output.find("mu = p*q + 1") != std::string::npos);

    RunResult j = run("invariants " + bundle("invariants_jordanian.json"));
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("kappa = 4") != std::string::npos);
    CHECK(j.output.find("generic") != std::string::npos);
}

TEST_CASE("verify-witness self-check and galois-check") {
    RunResult w = run("verify-witness " + bundle("witness_selfcheck.json"));
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("pass") != std::string::npos);

    RunResult g = run("galois-check " + bundle("galois_pair.json"));
    CHECK(g.exit_code == 0);
}

TEST_CASE("exit code 2 on malformed input and failed preconditions") {
    RunResult r = run("invariants /nonexistent.json");
    CHECK(r.exit_code == 2);
    // D_mm != 0 violates the normalized presentation.
    RunResult p = run("check-diamond " + bundle("invariants_glpq.json"));
    CHECK(p.exit_code == 2);
}
