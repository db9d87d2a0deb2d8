// End-to-end tests of the command-line tool: exit codes, output shapes,
// JSON determinism. Drives the built binary through std::system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef QWEYL_CLI_PATH
#error "QWEYL_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QWEYL_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("bracket command") {
    RunResult r = run("bracket --algebra sl2 --x 1,0 --y 0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pass") != std::string::npos);

    // parallel curves: zero bracket
    r = run("bracket --algebra sp4 --x 1,1 --y 1,1 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"quantized\": \"0\"") != std::string::npos);

    r = run("bracket --algebra so5 --x 2,1 --y 1,1");
    CHECK(r.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("bracket --algebra e9 --x 1,0 --y 0,1").exit_code == 2);
    CHECK(run("bracket --algebra sl2 --x 1 --y 0,1").exit_code == 2);
    CHECK(run("verify no-such-id").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("apply --op \"E +\" --fn unknot").exit_code == 2);
}

TEST_CASE("verify goldman, small ranges") {
    RunResult r = run("verify goldman --algebra sl2 --range 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    r = run("verify goldman --algebra sl3 --range 1 --parallel 2");
    CHECK(r.exit_code == 0);
}

TEST_CASE("verify inv-rec-unknot") {
    RunResult r = run("verify inv-rec-unknot");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS A1") != std::string::npos);
}

TEST_CASE("apply command") {
    RunResult r = run("apply --algebra sl2 --op \"E + E^{-1}\" --fn unknot --lambda 3 --json");
    CHECK(r.exit_code == 0);
    // [4] + [2] = q^{3/2} + 2q^{1/2} + 2q^{-1/2} + q^{-3/2}
    CHECK(r.output.find("q^{3/2} + 2*q^{1/2} + 2*q^{-1/2} + q^{-3/2}") != std::string::npos);

    r = run("apply --op \"1\" --fn unknot --lambda 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("q^{1/2} + q^{-1/2}") != std::string::npos);

    r = run("apply --op \"Q\" --fn zero --lambda 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value: 0") != std::string::npos);
}

TEST_CASE("epsilon and mul commands") {
    RunResult r = run("epsilon --algebra sl2 --expr \"EQ + E^{-1}Q^{-1} - q(Q + Q^{-1})\"");
    CHECK(r.exit_code == 0);
    r = run("mul --algebra sl2 --x \"E\" --y \"Q\" --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("q^{1/2}*Q[1,0]E[1,0]") != std::string::npos);
}

TEST_CASE("groebner command with queries") {
    RunResult r = run("groebner --knot unknot --member \"E + E^{-1} - 2\" "
                      "--radical-member \"E - 1\" --radical-member \"Q - 1\" --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"member\": true") != std::string::npos);
    CHECK(r.output.find("\"radical_member\": true") != std::string::npos);
    CHECK(r.output.find("\"radical_member\": false") != std::string::npos);

    CHECK(run("groebner --member \"E\"").exit_code == 2); // no generators
}

TEST_CASE("guard override produces exit 3") {
    RunResult r = run("groebner --knot trefoil-left --member \"Q\"");
    CHECK(r.exit_code == 0);
    std::string cmd = "QWEYL_GUARD_STEPS=1 " + std::string(QWEYL_CLI_PATH) +
                      " groebner --knot trefoil-left --member \"Q\" >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("oracle export") {
    RunResult r = run("oracle-export --knot trefoil-left --range 2 --json");
    CHECK(r.exit_code == 0);
    bool has_values = r.output.find("\"values\"") != std::string::npos;
    CHECK(has_values);
    r = run("oracle-export --knot unknot --range 3 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("q^{1/2} + q^{-1/2}") != std::string::npos);
    CHECK(run("oracle-export --knot granny").exit_code == 2);
}

TEST_CASE("json output is deterministic and statuses agree") {
    RunResult a = run("bracket --algebra sl3 --x 2,1 --y 1,0 --json");
    RunResult b = run("bracket --algebra sl3 --x 2,1 --y 1,0 --json");
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"schema\": 1") != std::string::npos);

    RunResult t = run("bracket --algebra sl3 --x 2,1 --y 1,0");
    CHECK(t.exit_code == a.exit_code);

    RunResult v1 = run("verify iva --json");
    RunResult v2 = run("verify iva --json");
    CHECK(v1.output == v2.output);
    CHECK(v1.exit_code == 0);
}
