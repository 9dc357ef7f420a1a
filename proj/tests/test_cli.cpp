#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "noethera/report.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using namespace noethera;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the CLI with stderr folded into stdout; NOETHERA_COLOR=never keeps
// golden comparisons free of escape codes.
RunResult run_cli(const std::string& args) {
    std::string cmd = "NOETHERA_COLOR=never " NOETHERA_CLI_PATH " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return testsup::data_file(name); }

} // namespace

TEST_CASE("check passes the critical problem") {
    RunResult r = run_cli("check " + data("h1_critical.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("overall: PASS") != std::string::npos);
    CHECK(r.output.find("-y*u^2, x*u^2") != std::string::npos); // V1 potentials on display
}

TEST_CASE("conditional dilation fails unless allowed") {
    RunResult strict = run_cli("check " + data("h1_p_symbolic.json"));
    CHECK(strict.exit_code == 1);
    CHECK(strict.output.find("conditional") != std::string::npos);

    RunResult relaxed = run_cli("check " + data("h1_p_symbolic.json") + " --allow-conditional");
    CHECK(relaxed.exit_code == 0);
    CHECK(relaxed.output.find("{3}") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    std::string broken = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/noethera_broken.json";
    {
        std::ofstream f(broken);
        f << R"({"independent": ["x", "y", "t"], "dependent": "u", "parameters": [],
                 "lagrangian": "1/2*u_x^2",
                 "generators": [{"name": "G", "xi": {"x": "z", "y": "0", "t": "0"}, "eta": "0"}]})";
    }
    RunResult r = run_cli("check " + broken);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("z") != std::string::npos);

    CHECK(run_cli("check /no/such/file.json").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("heisenberg suites by exit code") {
    CHECK(run_cli("heisenberg --n 1 --suite theorem1").exit_code == 0);
    CHECK(run_cli("heisenberg --n 1 --suite theorem2").exit_code == 0);
    CHECK(run_cli("heisenberg --n 1 --suite both").exit_code == 0);
    CHECK(run_cli("heisenberg --n 1 --p 3 --suite theorem2").exit_code == 0);
    CHECK(run_cli("heisenberg --n 2 --suite theorem2").exit_code == 2);
    CHECK(run_cli("heisenberg --n 1 --suite theorem2 --n 2").exit_code == 2);
    CHECK(run_cli("heisenberg --n 1 --suite nonsense").exit_code == 2);
    CHECK(run_cli("heisenberg --n 1 --p 5 --suite theorem1").exit_code == 2);
    CHECK(run_cli("heisenberg --n 1 --p 5 --suite theorem2").exit_code == 2);

    RunResult n2 = run_cli("heisenberg --n 2 --suite theorem1");
    CHECK(n2.exit_code == 0);
    CHECK(n2.output.find("{2}") != std::string::npos); // critical exponent for H^2
}

TEST_CASE("color control") {
    std::string cmd = std::string(NOETHERA_CLI_PATH) + " check " + data("h1_critical.json");
    auto run_env = [&](const std::string& env) {
        FILE* pipe = popen((env + " " + cmd + " 2>&1").c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 512> buf;
        while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
        pclose(pipe);
        return out;
    };
    CHECK(run_env("NOETHERA_COLOR=always").find("\033[32m") != std::string::npos);
    CHECK(run_env("NOETHERA_COLOR=never").find("\033[") == std::string::npos);
    // auto on a pipe (not a tty) stays plain
    CHECK(run_env("NOETHERA_COLOR=auto").find("\033[") == std::string::npos);
}

TEST_CASE("json reports reparse to the in-process report") {
    ProblemSpec spec = load_problem(data("h1_critical.json"));
    Report expected = run_check(spec, false, data("h1_critical.json"));

    RunResult r = run_cli("check " + data("h1_critical.json") + " --format json");
    CHECK(r.exit_code == 0);
    Report parsed = Report::from_json(nlohmann::json::parse(r.output));
    CHECK(parsed == expected);
    // Serialization is deterministic.
    CHECK(expected.to_json().dump() == parsed.to_json().dump());

    RunResult suite = run_cli("heisenberg --n 1 --suite theorem2 --format json");
    CHECK(suite.exit_code == 0);
    Report suite_parsed = Report::from_json(nlohmann::json::parse(suite.output));
    auto s = heisenberg::theorem2_suite();
    auto prob = heisenberg::build(1, Rational(3));
    CHECK(suite_parsed == suite_report(s, prob.ctx, "heisenberg n=1 suite=theorem2"));
}

TEST_CASE("tools subcommands") {
    RunResult el = run_cli("tools euler-lagrange --file " + data("h1_p_symbolic.json"));
    CHECK(el.exit_code == 0);
    CHECK(el.output.find("- u^p") != std::string::npos); // negated equation

    RunResult hom = run_cli("tools homotopy --problem " + data("h1_critical.json") +
                            " --expr \"2*u*u_y - 4*x*u*u_t\"");
    CHECK(hom.exit_code == 0);
    CHECK(hom.output.find("phi[y] = u^2") != std::string::npos);
    CHECK(hom.output.find("phi[t] = -2*x*u^2") != std::string::npos);

    RunResult pro = run_cli("tools prolong --problem " + data("h1_p_symbolic.json") +
                            " --gen Z --order 1");
    CHECK(pro.exit_code == 0);
    CHECK(pro.output.find("eta[u_t] = -2*p/(p-1)*u_t") != std::string::npos);

    RunResult div = run_cli("tools divergence --problem " + data("h1_critical.json") +
                            " --expr \"-y*u^2\" --expr \"x*u^2\" --expr \"-2*(x^2+y^2)*u^2\"");
    CHECK(div.exit_code == 0);
    CHECK(div.output.find("2*x*u*u_y") != std::string::npos);

    RunResult pde = run_cli("tools pde-symmetry --problem " + data("h1_critical.json") +
                            " --gen V1");
    CHECK(pde.exit_code == 0);
    CHECK(pde.output.find("admitted: yes") != std::string::npos);

    // A mathematical failure in a tool exits with 1.
    RunResult bad = run_cli("tools homotopy --problem " + data("h1_critical.json") +
                            " --expr \"u^2\"");
    CHECK(bad.exit_code == 1);
}
