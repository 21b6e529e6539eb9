// Acceptance suite: runs every criterion at its stated range and tolerance
// (all equalities are exact) and prints one pass/fail line per criterion.
// --slow adds the 2^26-codeword dual enumeration cross-check at m=5.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstring>
#include <iostream>
#include <vector>

#include "rmj/verify.hpp"

using namespace rmj;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    double seconds = 0;
    double budget = 0;  // 0 = no runtime target
    std::vector<std::string> failures;
};

void fold(Criterion& c, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) {
            c.pass = false;
            c.failures.push_back(r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
        }
    }
}

template <typename F>
Criterion run(std::string name, double budget, F&& body) {
    Criterion c;
    c.name = std::move(name);
    c.budget = budget;
    const auto t0 = Clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && c.seconds > budget) {
        c.pass = false;
        c.failures.push_back("runtime " + std::to_string(c.seconds) + " s exceeds target " +
                             std::to_string(budget) + " s");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    std::vector<Criterion> criteria;

    criteria.push_back(run("criterion 1: closed 4-set Jacobi forms = enumeration, m=3..10, 20 random T/class", 5.0,
                           [&](Criterion& c) {
                               VerifyOptions opt{3, 10, false, 0, 0};
                               // only the part-(1) checks belong to criterion 1
                               auto all = verify_thm11(opt);
                               std::vector<CheckResult> part1;
                               for (auto& r : all)
                                   if (r.name.find("thm11.1") == 0) part1.push_back(r);
                               fold(c, part1);
                           }));

    criteria.push_back(run(std::string("criterion 2: dual Jacobi forms, enumeration m=3,4") +
                               (slow ? " and m=5 (2^26 words)" : "") + ", round-trips m=6..10",
                           slow ? 600.0 : 0.0, [&](Criterion& c) {
                               VerifyOptions opt{3, 10, slow, 0, 0};
                               auto all = verify_thm11(opt);
                               std::vector<CheckResult> part2;
                               for (auto& r : all)
                                   if (r.name.find("thm11.2") == 0) part2.push_back(r);
                               fold(c, part2);
                           }));

    criteria.push_back(run("criterion 3: restriction histograms = printed counts, m=3..10, both classes", 0,
                           [&](Criterion& c) { fold(c, verify_lemma31({3, 10, false, 0, 0})); }));

    criteria.push_back(run("criterion 4: subspace restriction image = H_8, uniform fibers, m=3..8, 5 subspaces", 0,
                           [&](Criterion& c) { fold(c, verify_lemma41({3, 8, false, 0, 0})); }));

    criteria.push_back(run("criterion 5: harmonic enumerator closed forms, m=3..8, dual via transform", 0,
                           [&](Criterion& c) { fold(c, verify_thm12({3, 8, false, 0, 0})); }));

    criteria.push_back(run("criterion 6: every proper shell is a 3-design and not a 4-design, m=3..5", 120.0,
                           [&](Criterion& c) {
                               auto all = verify_corollary_suite({3, 5, false, 0, 0});
                               std::vector<CheckResult> shells;
                               for (auto& r : all)
                                   if (r.name.find("corollary m=") == 0) shells.push_back(r);
                               fold(c, shells);
                           }));

    criteria.push_back(run("criterion 7: closed difference identities, both sides, m=3..10", 0,
                           [&](Criterion& c) { fold(c, verify_difference_identities({3, 10, false, 0, 0})); }));

    criteria.push_back(run("criterion 8: structural invariants (transform round-trips, harmonic dimensions, "
                           "block intersections, three-way design agreement n<=16)",
                           0, [&](Criterion& c) { fold(c, verify_invariants({3, 8, false, 0, 0})); }));

    int failed = 0;
    for (const auto& c : criteria) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        std::printf("  (%.2f s)\n", c.seconds);
        for (const auto& f : c.failures) std::cout << "        " << f << "\n";
        failed += !c.pass;
    }
    std::cout << (failed ? "ACCEPTANCE: FAILED " + std::to_string(failed) + " criteria\n"
                         : "ACCEPTANCE: all criteria passed\n");
    return failed;
}
