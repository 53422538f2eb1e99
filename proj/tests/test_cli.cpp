#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "qgrass/json_io.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("QGRASS_CLI");
    if (!bin) {
        FAIL("QGRASS_CLI is not set; run through ctest");
        return {};
    }
    std::string cmd = env_prefix + "\"" + bin + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("qbinom prints exact decimals") {
    RunResult r = run_cli("qbinom --a 4 --b 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out == "35\n");
    CHECK(run_cli("qbinom --a 5 --b 2 --q 3").out == "1210\n");
    CHECK(run_cli("qbinom --a 40 --b 20 --q 2").code == 0);
}

TEST_CASE("usage errors exit with 2, help with 0") {
    CHECK(run_cli("qbinom --a 4").code == 2);          // missing --b
    CHECK(run_cli("frobnicate").code == 2);            // unknown subcommand
    CHECK(run_cli("").code == 2);                      // no subcommand
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("qbinom --help").code == 0);
}

TEST_CASE("nprime evaluates, and names violated hypotheses via exit 2") {
    RunResult r = run_cli("nprime --m1 0 --h1 0 --m 2 --h 1 --e 3 --l 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out == "42\n");
    CHECK(run_cli("nprime --m1 0 --h1 2 --m 2 --h 1 --e 3 --l 2 --q 2").code == 2);
}

TEST_CASE("f-eval needs x; g-eval hits the frozen product bound") {
    CHECK(run_cli("f-eval --which f1 --q 2 --n 9 --k 3 --t 1").code == 2);
    RunResult g1 = run_cli("g-eval --which g1 --q 2 --n 6 --k 2 --t 1 --s 1");
    CHECK(g1.code == 0);
    CHECK(g1.out == "128\n");
    RunResult g2 = run_cli("g-eval --which g2 --q 2 --n 5 --k 2 --t 1");
    CHECK(g2.out == "43\n");
}

TEST_CASE("identity subcommand emits certificates") {
    RunResult eq1 = run_cli("identity --which eq1 --q 2 --n 6 --k 2 --t 1");
    CHECK(eq1.code == 0);
    CHECK(eq1.out.find("\"kind\": \"eq1\"") != std::string::npos);
    RunResult eq66 =
        run_cli("identity --which eq66 --q 2 --n 5 --k 2 --t 1 --out cli_eq66.json");
    CHECK(eq66.code == 0);
    CHECK(qgrass::read_text_file("cli_eq66.json") == eq66.out);
}

TEST_CASE("lemma-check lists, runs, and rejects unknown ids") {
    RunResult ls = run_cli("lemma-check --list");
    CHECK(ls.code == 0);
    CHECK(ls.out.find("f1-decreasing\n") != std::string::npos);
    RunResult run = run_cli("lemma-check --id f1-decreasing");
    CHECK(run.code == 0);
    CHECK(run.out.rfind("lemma_id", 0) == 0); // CSV header first
    RunResult json_run = run_cli("lemma-check --id qbinom-7-2 --format json");
    CHECK(json_run.code == 0);
    CHECK(json_run.out.find("\"verdicts\"") != std::string::npos);
    CHECK(run_cli("lemma-check --id no-such-lemma").code == 2);
    CHECK(run_cli("lemma-check").code == 2);
    RunResult inline_run = run_cli(
        "lemma-check --id basic-bounds.i --grid inline --q 2 --n 5 --k 2 --t 1 --s 1");
    CHECK(inline_run.code == 0);
}

TEST_CASE("enumerate counts and honours the budget flag") {
    RunResult r = run_cli("enumerate --q 2 --n 4 --k 2");
    CHECK(r.code == 0);
    CHECK(r.out == "35\n");
    CHECK(run_cli("--budget 100 enumerate --q 2 --n 5 --k 2").code == 2);
    RunResult ok = run_cli("--budget 200 enumerate --q 2 --n 5 --k 2");
    CHECK(ok.code == 0);
    CHECK(ok.out == "155\n");
}

TEST_CASE("config file budget applies, flags win over it") {
    qgrass::write_text_file("cli_budget.json", "{\"enumeration_budget\": 100}\n");
    CHECK(run_cli("enumerate --q 2 --n 5 --k 2",
                  "QGRASS_CONFIG=cli_budget.json ").code == 2);
    RunResult ok = run_cli("--budget 200 enumerate --q 2 --n 5 --k 2",
                           "QGRASS_CONFIG=cli_budget.json ");
    CHECK(ok.code == 0);
    CHECK(ok.out == "155\n");
}

TEST_CASE("construct, certify, tau, closure, sequence: one pipeline") {
    RunResult made = run_cli(
        "construct --which almost --q 2 --n 6 --k 2 --t 1 --s 1 "
        "--out-f cli_f.json --out-g cli_g.json");
    CHECK(made.code == 0);
    CHECK(made.out == "{\"size_f\":4,\"size_g\":32}\n");

    RunResult cert = run_cli(
        "certify-pair --F cli_f.json --G cli_g.json --t 1 --s 1 --out cli_cert.json");
    CHECK(cert.code == 0);
    CHECK(cert.out.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(qgrass::read_text_file("cli_cert.json") == cert.out);

    RunResult tau = run_cli("tau --F cli_f.json --t 1 --out cli_tau.json");
    CHECK(tau.code == 0);
    CHECK(tau.out == "1\n");
    auto tj = nlohmann::json::parse(qgrass::read_text_file("cli_tau.json"));
    CHECK(tj["tau"].get<long>() == 1);
    CHECK(!tj["minimal_covers"].empty());

    RunResult close = run_cli(
        "closure --F cli_f.json --G cli_g.json --t 1 --s 1 "
        "--out-f cli_cf.json --out-g cli_cg.json");
    CHECK(close.code == 0);
    auto cj = nlohmann::json::parse(close.out);
    CHECK(cj["added_f"].get<long>() >= 0);

    // the least F-member sits inside X and meets every G-member, so the
    // procedure stops immediately with a cover witness
    RunResult seq = run_cli("sequence --F cli_f.json --G cli_g.json --t 1");
    CHECK(seq.code == 0);
    CHECK(seq.out == "0\n");
}

TEST_CASE("certify-pair flags a failing claim with exit 1") {
    // a pair that is not 0-almost: two disjoint planes
    qgrass::Ambient amb(2, 4);
    qgrass::Subspace a = qgrass::canonicalize(amb, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    qgrass::Subspace b = qgrass::canonicalize(amb, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    qgrass::save_family("cli_bad_f.json", qgrass::Family(amb, 2, {a}));
    qgrass::save_family("cli_bad_g.json", qgrass::Family(amb, 2, {b}));
    RunResult r = run_cli("certify-pair --F cli_bad_f.json --G cli_bad_g.json --t 1 --s 0");
    CHECK(r.code == 1);
    CHECK(r.out.find("\"verdict\": \"fail\"") != std::string::npos);
}

TEST_CASE("construct rejects out-of-range parameters with exit 2") {
    CHECK(run_cli("construct --which almost --q 2 --n 5 --k 2 --t 1 --s 0").code == 2);
    CHECK(run_cli("construct --which nonsense --q 2 --n 5 --k 2").code == 2);
}

TEST_CASE("suite runner prints a tally line") {
    RunResult ls = run_cli("suite --list");
    CHECK(ls.code == 0);
    CHECK(ls.out.find("constructions\n") != std::string::npos);
    RunResult r = run_cli("suite --name qbinom-identities");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("pass=", 0) == 0);
    CHECK(r.out.find(" fail=0 ") != std::string::npos);
    CHECK(run_cli("suite --name no-such-suite").code == 2);
    CHECK(run_cli("suite --name grassmannian-counts --format csv").code == 2);
    CHECK(run_cli("suite").code == 2);
}

} // TEST_SUITE
