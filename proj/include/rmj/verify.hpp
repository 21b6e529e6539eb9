#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmj {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int m_lo = 3;
    int m_hi = 8;
    bool slow = false;       // enables the 2^26-codeword dual enumeration cross-checks
    unsigned threads = 0;    // 0 = hardware concurrency
    std::uint64_t seed = 0;  // for sampled T-sets / subspaces
};

// Closed Jacobi forms against enumeration (both T-classes), dual forms
// against dual enumeration where feasible, transform round-trips beyond.
std::vector<CheckResult> verify_thm11(const VerifyOptions& opt);

// Harmonic-enumerator closed forms: primal as printed, dual through the
// radical-free transform, cross-validated by enumeration at small m; also
// reports the discrepancy of the alternative dual normalization.
std::vector<CheckResult> verify_thm12(const VerifyOptions& opt);

// Restriction histograms against the printed counts, both T-classes.
std::vector<CheckResult> verify_lemma31(const VerifyOptions& opt);

// Subspace restriction image = H_8 with uniform weight-4 fibers.
std::vector<CheckResult> verify_lemma41(const VerifyOptions& opt);

// The closed difference identities of the two T-class forms, both sides.
std::vector<CheckResult> verify_difference_identities(const VerifyOptions& opt);

// Shell-by-shell design verdicts (3-designs everywhere, 4-designs refuted on
// proper shells) plus the closed difference identities.
std::vector<CheckResult> verify_corollary_suite(const VerifyOptions& opt);

// Structural invariants: transform round-trips, harmonic dimensions,
// block-intersection counts, three-way design-test agreement on n <= 16.
std::vector<CheckResult> verify_invariants(const VerifyOptions& opt);

std::vector<CheckResult> verify_all(const VerifyOptions& opt);

}  // namespace rmj
