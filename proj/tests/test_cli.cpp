// Drives the installed rmjacobi binary through its documented surface and
// checks output text and exit codes. The binary path comes from the
// RMJACOBI_BIN environment variable (set by the ctest registration).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("RMJACOBI_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("code subcommands") {
    auto r = run("code rm1 -m 3 --wenum");
    CHECK(r.status == 0);
    CHECK(r.out == "x^8 + 14*x^4*y^4 + y^8\n");

    r = run("code ehamming -m 4 --dim");
    CHECK(r.status == 0);
    CHECK(r.out == "11\n");

    r = run("code rm1 -m 3");
    CHECK(r.status == 0);
    CHECK(r.out.substr(0, 4) == "8 4\n");

    r = run("code shell --rm1 3 --ell 4");
    CHECK(r.status == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 14);

    // self-dual code: dual prints the same RREF matrix
    r = run("code dual --rm1 3");
    CHECK(r.status == 0);
    CHECK(r.out == run("code rm1 -m 3").out);

    r = run("code wenum --ehamming 3");
    CHECK(r.out == "x^8 + 14*x^4*y^4 + y^8\n");
}

TEST_CASE("jacobi subcommand") {
    auto r = run("jacobi --rm1 3 --t 0,1,2,4 --check");
    CHECK(r.status == 0);
    CHECK(r.out == "OK\n");

    r = run("jacobi --ehamming 4 --class dep --check");
    CHECK(r.status == 0);
    CHECK(r.out == "OK\n");

    r = run("jacobi --rm1 3 --t 0,1");
    CHECK(r.status == 0);
    CHECK(r.out.find("w^2*x^6") != std::string::npos);

    r = run("jacobi --rm1 3 --class indep --closed");
    CHECK(r.status == 0);
    CHECK(r.out == run("jacobi --rm1 3 --t 0,1,2,4").out);
}

TEST_CASE("verify subcommand and exit codes") {
    auto r = run("verify lemma31 --m 3..4");
    CHECK(r.status == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);

    // usage errors exit 2
    CHECK(run("verify bogus-target").status == 2);
    CHECK(run("code rm1").status == 2);          // missing -m
    CHECK(run("jacobi --rm1 3").status == 2);    // neither --t nor --class
    CHECK(run("nonsense").status == 2);

    // capacity errors exit 3
    CHECK(run("code wenum --ehamming 6").status == 3);
}

TEST_CASE("deterministic output") {
    const std::string a = run("verify thm12 --m 3..4 --format json").out;
    const std::string b = run("verify thm12 --m 3..4 --format json").out;
    CHECK(a == b);
    CHECK(!a.empty());

    const std::string c = run("design-check --ehamming 4 --ell 6 --t 3 --format json").out;
    CHECK(c == run("design-check --ehamming 4 --ell 6 --t 3 --format json").out);
    CHECK(c.find("\"lambda\":\"16\"") != std::string::npos);
}

TEST_CASE("design-check text output and disagreement guard") {
    auto r = run("design-check --rm1 3 --ell 4 --t 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("direct-count: t=3 design, lambda = 1") != std::string::npos);
    CHECK(r.out.find("delsarte: t=3 design, lambda = 1") != std::string::npos);
    CHECK(r.out.find("jacobi-coeff: t=3 design, lambda = 1") != std::string::npos);

    r = run("design-check --rm1 3 --ell 4 --t 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("not a t=4 design") != std::string::npos);
}
