#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmj/design_report.hpp"
#include "rmj/gf2code.hpp"
#include "rmj/harmonic.hpp"
#include "rmj/jacobi.hpp"

namespace rmj {

inline constexpr std::uint64_t kDefaultSubsetCap = 10000000;  // on C(n,t)

// Exact coverage count over every t-subset. Blocks are a multiset; repeated
// blocks count with multiplicity. On failure the witness pair is the first
// lexicographic t-subset attaining the minimum coverage and the first
// attaining the maximum.
DesignReport is_t_design(const BlockSet& b, int t, std::uint64_t cap = kDefaultSubsetCap);

// Delsarte's criterion: a t-design iff sum_b f~(b) = 0 for every harmonic f
// of degree 1..t. Checks every basis element; a nonzero sum is reported as
// (degree, basis index). Precomputed bases (indexed by degree-1) may be
// passed to amortize elimination across shells of the same length.
DesignReport delsarte_test(const BlockSet& b, int t,
                           const std::vector<std::vector<HarmonicFn>>* bases = nullptr,
                           std::uint64_t harm_cap = kDefaultHarmCap);

// Largest t in [1, n] passing the weight-count condition on either the code
// or its dual (at most d-t dual weights, or at most d_dual-t code weights,
// in {1,...,n-t}).
int assmus_mattson_t(const BinaryCode& c, unsigned threads = 1);

enum class Route { Jacobi, Harmonic, Both };

// Per-shell outcome of the corollary verification.
struct ShellVerdict {
    std::string code;    // "RM(1,m)" or "H_{2^m}"
    std::uint32_t ell = 0;
    std::uint64_t block_count = 0;
    bool trivial = false;  // ell == 0 or ell == n: complete/degenerate shell

    std::optional<Rat> lambda3;          // direct count, when capacity allows
    bool three_design = false;           // all executed methods agree: t=3 design
    bool four_design_refuted = false;    // all executed methods agree: not a t=4 design
    Rat jacobi_gap;                      // closed-form coefficient gap at z^4 x^{n-ell} y^{ell-4}
    Rat hwe_coeff;                       // coefficient of x^{n-ell} y^ell in w_{C,f}
    std::vector<std::string> methods;    // methods that ran
    bool agreement = true;               // no two methods disagreed
    std::string detail;
};

struct CorollaryReport {
    int m = 0;
    Route route = Route::Both;
    std::vector<ShellVerdict> shells;
    bool all_proper_shells_refuted = false;
    bool all_shells_three_designs = false;
    bool agreement = true;
};

// End-to-end corollary verification for RM(1,m) and, where enumeration is
// feasible (m <= 4), its dual. Three independent routes: direct coverage
// counts, the closed Jacobi coefficient gap (plus exact jacobi_design_test
// where C(n,4) is small), and the harmonic-enumerator coefficient built from
// corollary_f. Inconsistency between routes raises verification_error.
CorollaryReport verify_corollary(int m, Route route = Route::Both, unsigned threads = 1);

}  // namespace rmj
