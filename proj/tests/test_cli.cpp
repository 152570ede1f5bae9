#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Drives the installed binary end to end: exit codes, worked examples,
// deterministic JSON.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FLAGPUSH_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("roots subcommand") {
    const RunResult a2 = run_cli("roots --type A2");
    CHECK(a2.exit_code == 0);
    CHECK(a2.out.find("3 roots") != std::string::npos);
    CHECK(a2.out.find("(2,-1)") != std::string::npos);

    const RunResult par = run_cli("roots --type A2 --parabolic 1");
    CHECK(par.exit_code == 0);
    CHECK(par.out.find("Delta+(H) (1 roots)") != std::string::npos);

    CHECK(run_cli("roots --type Z9").exit_code == 2);
    CHECK(run_cli("roots --type A2 --parabolic 7").exit_code == 2);
    CHECK(run_cli("roots --type E7").exit_code == 2);
    CHECK(run_cli("roots --type E7 --size-guard-override").exit_code == 0);
}

TEST_CASE("weyl subcommand") {
    const RunResult b2 = run_cli("weyl --type B2 --parabolic 2");
    CHECK(b2.exit_code == 0);
    CHECK(b2.out.find("|W(B2)| = 8") != std::string::npos);
    CHECK(b2.out.find("cosets = 4") != std::string::npos);
}

TEST_CASE("pushforward worked examples") {
    const RunResult one = run_cli("pushforward --type A1 --parabolic 1 --poly \"z1\"");
    CHECK(one.exit_code == 0);
    CHECK(one.out == "1\n");

    const RunResult two = run_cli("pushforward --type A2 --parabolic 1 --poly \"2*z1^1-z2\" --route all");
    CHECK(two.exit_code == 0);
    CHECK(two.out == "2\n");

    const RunResult zero = run_cli("pushforward --type A2 --parabolic 1 --poly \"1\"");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "0\n");

    CHECK(run_cli("pushforward --type A2 --parabolic 1 --poly \"z3\"").exit_code == 2);
    CHECK(run_cli("pushforward --type A2 --poly \"z1\" --route demazure").exit_code == 2);
    CHECK(run_cli("pushforward --type A2 --parabolic 1").exit_code == 2); // missing --poly
}

TEST_CASE("integrate worked examples") {
    const RunResult chi = run_cli("integrate --type A2 --poly \"(2*z1-z2)*(-z1+2*z2)*(z1+z2)\"");
    CHECK(chi.exit_code == 0);
    CHECK(chi.out == "6\n");

    CHECK(run_cli("integrate --type A1 --poly \"z1\"").out == "1\n");
    CHECK(run_cli("integrate --type A1 --poly \"1\"").out == "0\n");
    // non-invariant integrand over G/H
    CHECK(run_cli("integrate --type A2 --parabolic 1 --poly \"z1\"").exit_code == 2);
}

TEST_CASE("verify subcommand and JSON determinism") {
    const std::string args = "verify --type A2 --parabolic 1 --max-degree 4 --trials 5 --seed 42 --json";
    const RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("\"result\": \"pass\"") != std::string::npos);
    const RunResult second = run_cli(args);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);

    const RunResult text = run_cli("verify --type B2 --parabolic 2 --trials 5 --seed 7");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("PASS route_equivalence") != std::string::npos);
}

TEST_CASE("json envelope fields") {
    const RunResult push = run_cli("pushforward --type A1 --parabolic 1 --poly \"z1\" --json");
    CHECK(push.exit_code == 0);
    for (const char* key : {"\"type\"", "\"parabolic\"", "\"route\"", "\"result\"", "\"checks\""})
        CHECK(push.out.find(key) != std::string::npos);
    CHECK(push.out.find("\"pretty\": \"1\"") != std::string::npos);
}
