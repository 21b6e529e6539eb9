#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rmj/design_report.hpp"
#include "rmj/gf2code.hpp"
#include "rmj/poly.hpp"

namespace rmj {

// Four distinct coordinate indices of RM(1,m), i.e. four points of F_2^m
// under the canonical coordinate order.
struct FourSet {
    int m = 0;
    std::array<std::uint32_t, 4> points{};
};

FourSet make_four_set(int m, std::array<std::uint32_t, 4> points);

// A 4-set is affinely dependent iff the XOR of its four point-vectors is 0;
// for sets containing 0 this is exactly the u1+u2=u3 dichotomy.
enum class TClass { AffinelyIndependent, AffinelyDependent };

TClass classify_four_set(int m, const FourSet& t);

// Canonical class witnesses {0,e1,e2,e3} and {0,e1,e2,e1+e2}, valid for m >= 3.
FourSet canonical_four_set(int m, TClass cls);

// J_{C,T} = sum over codewords of w^{m0} z^{m1} x^{n0} y^{n1}, where m1/n1
// count T / non-T positions in the support.
Poly4 jacobi(const BinaryCode& c, std::span<const std::uint32_t> t_set, unsigned threads = 1);

// (1/code_size) J(w+z, w-z, x+y, x-y). Callers demanding integrality check
// is_integral() on the result.
Poly4 jacobi_transform(const Poly4& j, const Int& code_size);

// Closed forms for J_{RM(1,m),T}, both T-classes, m >= 3,
// and their duals obtained through jacobi_transform.
Poly4 rm1_jacobi_closed(int m, TClass cls);
Poly4 rm1_dual_jacobi_closed(int m, TClass cls);

// Histogram of wt(c|_T) over codewords of c not listed in exclude.
std::map<std::uint32_t, std::uint64_t> restriction_profile(const BinaryCode& c,
                                                           std::span<const std::uint32_t> t_set,
                                                           const std::vector<BitVec>& exclude,
                                                           unsigned threads = 1);

enum class Side { Code, Dual };

// Difference J_{T-independent} - J_{T-dependent} in closed form:
//   Code: -2^{m-3} x^{2^{m-1}-4} y^{2^{m-1}-4} (wy - xz)^4
//   Dual: -(x^2 - y^2)^{2^{m-1}-4} (wy - xz)^4
Poly4 jacobi_difference_closed(int m, Side side);

struct SampleMode {
    bool all = true;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
};

// t-design test through Jacobi coefficients: the shell C_ell is a t-design
// iff the coefficient of z^t x^{n-ell} y^{ell-t} in J_{C,T} does not depend
// on T. Every tested T triggers a fresh codeword enumeration; block coverage
// counting is never used here.
DesignReport jacobi_design_test(const BinaryCode& c, std::uint32_t ell, int t,
                                const SampleMode& mode = {}, std::uint64_t subset_cap = 10000000,
                                unsigned threads = 1);

}  // namespace rmj
