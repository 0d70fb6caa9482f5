#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qdiff/catalog.hpp"
#include "qdiff/cli.hpp"

using namespace qdiff;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args,
              const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    RunResult r;
    r.code = run_qdiff(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string& mq2_path() {
    static const std::string path = [] {
        const std::string p =
            (std::filesystem::temp_directory_path() / "qdiff_cli_mq2.qalg")
                .string();
        std::ofstream file(p);
        file << make_family({Family::aiii, 2}).to_qalg();
        return p;
    }();
    return path;
}

const std::string& sym2_qalg() {
    static const std::string text =
        make_family({Family::symmetric, 2}).to_qalg();
    return text;
}

} // namespace

TEST_CASE("cli: catalog prints a parseable presentation") {
    const RunResult r = run({"catalog", "aiii", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "qalg 1\n"
          "name aiii(2)\n"
          "gens 4\n"
          "names Z1_1 Z1_2 Z2_1 Z2_2\n"
          "rel 2 1 : 1q^-1 ;\n"
          "rel 3 1 : 1q^-1 ;\n"
          "rel 3 2 : 1q^0 ;\n"
          "rel 4 1 : 1q^0 ; -1q^1+1q^-1 * 2 3\n"
          "rel 4 2 : 1q^-1 ;\n"
          "rel 4 3 : 1q^-1 ;\n");
    CHECK(r.err.empty());

    CHECK(run({"catalog", "nope", "2"}).code == 2);
    CHECK(run({"catalog", "aiii", "0"}).code == 2);
}

TEST_CASE("cli: normal-form matches the documented reduction") {
    const RunResult r = run({"normal-form", mq2_path(), "X4.X1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1q^0 * X1.X4 + -1q^1+1q^-1 * X2.X3\n");
}

TEST_CASE("cli: qsym reads the algebra file from standard input") {
    const RunResult r = run({"qsym", "-", "X2.X1"}, sym2_qalg());
    CHECK(r.code == 0);
    CHECK(r.out == "1/2q^0 * X1.X2 + 1/2q^0 * X2.X1\n");
}

TEST_CASE("cli: check reports both validations") {
    const RunResult ok = run({"check", mq2_path()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "dcp: PASS\ndiamond: PASS\n");

    // A presentation whose X3.X2.X1 overlap fails to resolve.
    const std::string bad =
        "qalg 1\n"
        "name overlap_failure\n"
        "gens 3\n"
        "rel 2 1 : 1q^1 ;\n"
        "rel 3 1 : 1q^0 ;\n"
        "rel 3 2 : 1q^0 ; 1q^0 * 1 1\n";
    const RunResult fail = run({"check", "-"}, bad);
    CHECK(fail.code == 1);
    CHECK(fail.out.find("dcp: PASS") != std::string::npos);
    CHECK(fail.out.find("diamond: FAIL") != std::string::npos);
    CHECK(fail.out.find("ambiguity X3.X2.X1") != std::string::npos);
}

TEST_CASE("cli: derivatives and scheme selection") {
    CHECK(run({"derive", "4", mq2_path(), "z2.z3"}).out ==
          "-1q^1+1q^-1 * z1\n");
    CHECK(run({"derive", "3", mq2_path(), "z1.z2.z3"}).out ==
          "1q^-1 * z1.z2\n");
    CHECK(run({"derive", "3", mq2_path(), "z1.z2.z3", "--scheme", "f1"}).out ==
          "1/2q^-1+1/2q^-2 * z1.z2\n");
    CHECK(run({"derive", "4", mq2_path(), "z2.z3", "--scheme", "zz"}).code ==
          2);
}

TEST_CASE("cli: star, pair, poisson, and dual-relations") {
    CHECK(run({"star", mq2_path(), "z2", "z1"}).out == "1q^1 * z1.z2\n");
    CHECK(run({"pair", mq2_path(), "X1.X4", "X4.X1"}).out == "1q^0\n");
    CHECK(run({"poisson", mq2_path(), "z1", "z2"}).out == "-1q^0 * z1.z2\n");
    CHECK(run({"dual-relations", mq2_path()}).out ==
          "X2*.X1* = q^1 X1*.X2*\n"
          "X3*.X1* = q^1 X1*.X3*\n"
          "X3*.X2* = q^0 X2*.X3*\n"
          "X4*.X1* = q^0 X1*.X4*\n"
          "X4*.X2* = q^1 X2*.X4*\n"
          "X4*.X3* = q^1 X3*.X4*\n");
}

TEST_CASE("cli: factored operators and their checks") {
    CHECK(run({"path-op", "2", "2", mq2_path()}).out ==
          "O[1,1] d[1,2] d[2,1] + K[1,2]^-1 K[2,1]^-1 d[2,2]\n");
    CHECK(run({"path-op", "1", "1", mq2_path()}).out == "d[1,1]\n");

    const RunResult wave = run({"wave-check", mq2_path(), "--max-degree", "2"});
    CHECK(wave.code == 0);
    CHECK(wave.out == "wave-operator identities degree<=2: PASS\n");

    CHECK(run({"lift-check", "AF", mq2_path(), "z2.z3"}).out ==
          "lift AF: PASS\n");
    CHECK(run({"lift-check", "bg", mq2_path(), "z2.z3"}).out ==
          "lift BG: PASS\n");
    CHECK(run({"lift-check", "xx", mq2_path(), "z2.z3"}).code == 2);
}

TEST_CASE("cli: verify suites name every check and count failures") {
    const RunResult stars =
        run({"verify", mq2_path(), "--suite", "stars", "--max-degree", "2"});
    CHECK(stars.code == 0);
    CHECK(stars.out ==
          "stars n=2 split=(0,0,2): PASS\n"
          "stars n=2 split=(0,1,1): PASS\n"
          "stars n=2 split=(0,2,0): PASS\n"
          "stars n=2 split=(1,0,1): PASS\n"
          "stars n=2 split=(1,1,0): PASS\n"
          "stars n=2 split=(2,0,0): PASS\n"
          "verify: 6 checks, 0 failures\n");

    const RunResult braid =
        run({"verify", mq2_path(), "--suite", "braid", "--max-degree", "3"});
    CHECK(braid.code == 0);
    CHECK(braid.out ==
          "braid involution n=2 (16 words): PASS\n"
          "fixpoint scheme-independence n=2 (16 words): PASS\n"
          "braid involution n=3 (64 words): PASS\n"
          "braid relation n=3 (64 words): PASS\n"
          "fixpoint scheme-independence n=3 (64 words): PASS\n"
          "verify: 5 checks, 0 failures\n");

    // Determinism: identical invocations produce identical bytes.
    const RunResult again =
        run({"verify", mq2_path(), "--suite", "stars", "--max-degree", "2"});
    CHECK(again.out == stars.out);
}

TEST_CASE("cli: verify all skips suites that need another algebra") {
    const RunResult r =
        run({"verify", "-", "--suite", "all", "--max-degree", "2"},
            sym2_qalg());
    CHECK(r.code == 0);
    CHECK(r.out ==
          "stars n=2 split=(0,0,2): PASS\n"
          "stars n=2 split=(0,1,1): PASS\n"
          "stars n=2 split=(0,2,0): PASS\n"
          "stars n=2 split=(1,0,1): PASS\n"
          "stars n=2 split=(1,1,0): PASS\n"
          "stars n=2 split=(2,0,0): PASS\n"
          "braid involution n=2 (4 words): PASS\n"
          "fixpoint scheme-independence n=2 (4 words): PASS\n"
          "closed-forms: SKIP (needs the 2x2 quantum matrix algebra)\n"
          "paths: SKIP (needs a quantum matrix algebra)\n"
          "opposite-relations: SKIP (needs the 2x2 quantum matrix algebra)\n"
          "lifts: SKIP (needs the 2x2 quantum matrix algebra)\n"
          "verify: 8 checks, 0 failures\n");

    // Requesting an inapplicable suite explicitly is an error, not a skip.
    CHECK(run({"verify", "-", "--suite", "closed-forms"}, sym2_qalg()).code ==
          2);
}

TEST_CASE("cli: numeric display at a chosen q") {
    const RunResult nf =
        run({"normal-form", mq2_path(), "X4.X1", "--q-at", "3/2"});
    CHECK(nf.code == 0);
    CHECK(nf.out ==
          "1q^0 * X1.X4 + -1q^1+1q^-1 * X2.X3\n"
          "at q=3/2: 1 * X1.X4 + -5/6 * X2.X3\n");

    const RunResult d = run({"derive", "4", mq2_path(), "z2.z3", "--q-at",
                             "2"});
    CHECK(d.out ==
          "-1q^1+1q^-1 * z1\n"
          "at q=2: -3/2 * z1\n");

    CHECK(run({"derive", "4", mq2_path(), "z2.z3", "--q-at", "abc"}).code ==
          2);
    CHECK(run({"derive", "4", mq2_path(), "z2.z3", "--q-at", "0"}).code == 2);
    CHECK(run({"derive", "4", mq2_path(), "z2.z3", "--q-at", "1/0"}).code ==
          2);
}

TEST_CASE("cli: usage and input errors exit with code 2") {
    const RunResult bad_word = run({"normal-form", mq2_path(), "X9.X1"});
    CHECK(bad_word.code == 2);
    CHECK(bad_word.err == "error: generator X9 outside 1..4\n");

    const RunResult bad_expr = run({"normal-form", mq2_path(), "X4..X1"});
    CHECK(bad_expr.code == 2);
    CHECK(bad_expr.err.find("(line 1, column 4)") != std::string::npos);

    CHECK(run({"check", "/no/such/file.qalg"}).code == 2);
    CHECK(run({"verify", mq2_path(), "--suite", "nope"}).code == 2);
    CHECK(run({"wave-check", "-"}, sym2_qalg()).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", mq2_path(), "--zzz"}).code == 2);
}

TEST_CASE("cli: work caps guard deep sweeps unless forced") {
    const RunResult blocked = run(
        {"verify", mq2_path(), "--suite", "stars", "--max-degree", "9"});
    CHECK(blocked.code == 2);
    CHECK(blocked.err.find("--force") != std::string::npos);

    // A degree-7 polynomial needs degree-8 reductions: blocked, then forced.
    const std::string qp = make_family({Family::quantum_plane, 1}).to_qalg();
    CHECK(run({"derive", "1", "-", "z1^7"}, qp).code == 2);
    const RunResult forced = run({"derive", "1", "-", "z1^7", "--force"}, qp);
    CHECK(forced.code == 0);
    CHECK(forced.out == "7q^0 * z1^6\n");
}

TEST_CASE("cli: help is available and succeeds") {
    const RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage: qdiff") != std::string::npos);
    CHECK(r.err.empty());
}
