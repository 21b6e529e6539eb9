#include "rmj/jacobi.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "rmj/combin.hpp"

namespace rmj {

namespace {

BitVec mask_from_indices(std::uint32_t n, std::span<const std::uint32_t> t_set) {
    BitVec mask(n);
    for (auto i : t_set) {
        if (i >= n) throw input_error("T index " + std::to_string(i) + " out of range");
        mask.set(i);
    }
    return mask;
}

Poly4 poly_from_joint_hist(const std::vector<std::uint64_t>& hist, std::uint32_t n,
                           std::uint32_t tsize) {
    const std::size_t cols = tsize + 1;
    Poly4 j;
    for (std::uint32_t wt = 0; wt <= n; ++wt) {
        for (std::uint32_t i = 0; i <= tsize; ++i) {
            const std::uint64_t count = hist[wt * cols + i];
            if (!count || i > wt) continue;
            const std::uint32_t m1 = i;
            const std::uint32_t m0 = tsize - i;
            const std::uint32_t n1 = wt - i;
            const std::uint32_t n0 = (n - tsize) - n1;
            j = j + Poly4::monomial(Monomial{m0, m1, n0, n1}, Rat(Int(count)));
        }
    }
    return j;
}

}  // namespace

FourSet make_four_set(int m, std::array<std::uint32_t, 4> points) {
    if (m < 1) throw input_error("four-set needs m >= 1");
    const std::uint32_t n = std::uint32_t{1} << m;
    std::set<std::uint32_t> uniq(points.begin(), points.end());
    if (uniq.size() != 4) throw input_error("four-set points must be pairwise distinct");
    for (auto p : points)
        if (p >= n) throw input_error("four-set point out of range");
    return FourSet{m, points};
}

TClass classify_four_set(int, const FourSet& t) {
    const std::uint32_t x = t.points[0] ^ t.points[1] ^ t.points[2] ^ t.points[3];
    return x == 0 ? TClass::AffinelyDependent : TClass::AffinelyIndependent;
}

FourSet canonical_four_set(int m, TClass cls) {
    if (m < 3) throw input_error("canonical four-set needs m >= 3");
    if (cls == TClass::AffinelyIndependent) return make_four_set(m, {0, 1, 2, 4});
    return make_four_set(m, {0, 1, 2, 3});
}

Poly4 jacobi(const BinaryCode& c, std::span<const std::uint32_t> t_set, unsigned threads) {
    const BitVec mask = mask_from_indices(c.length(), t_set);
    const auto hist = joint_weight_histogram(c, mask, threads);
    return poly_from_joint_hist(hist, c.length(), mask.popcount());
}

Poly4 jacobi_transform(const Poly4& j, const Int& code_size) {
    if (code_size <= 0) throw input_error("code size must be positive");
    return macwilliams_substitute(j).scale(Rat(1) / Rat(code_size));
}

Poly4 rm1_jacobi_closed(int m, TClass cls) {
    if (m < 3) throw input_error("closed Jacobi form needs m >= 3");
    const std::uint32_t n = std::uint32_t{1} << m;
    const std::uint32_t h = n / 2;
    const Rat p_m1 = Rat(pow2(static_cast<unsigned>(m - 1)));
    const Rat p_m2 = Rat(pow2(static_cast<unsigned>(m - 2)));
    const Rat p_m3_1 = Rat(pow2(static_cast<unsigned>(m - 3))) - 1;
    const Rat p_m2_1 = p_m2 - 1;

    Poly4 j;
    if (cls == TClass::AffinelyIndependent) {
        j = j + Poly4::monomial(Monomial{4, 0, n - 4, 0});
        j = j + Poly4::monomial(Monomial{4, 0, h - 4, h}, p_m3_1);
        j = j + Poly4::monomial(Monomial{3, 1, h - 3, h - 1}, p_m1);
        j = j + Poly4::monomial(Monomial{2, 2, h - 2, h - 2}, 3 * p_m2);
        j = j + Poly4::monomial(Monomial{1, 3, h - 1, h - 3}, p_m1);
        j = j + Poly4::monomial(Monomial{0, 4, h, h - 4}, p_m3_1);
        j = j + Poly4::monomial(Monomial{0, 4, 0, n - 4});
    } else {
        j = j + Poly4::monomial(Monomial{4, 0, n - 4, 0});
        j = j + Poly4::monomial(Monomial{4, 0, h - 4, h}, p_m2_1);
        j = j + Poly4::monomial(Monomial{2, 2, h - 2, h - 2}, 3 * p_m1);
        j = j + Poly4::monomial(Monomial{0, 4, h, h - 4}, p_m2_1);
        j = j + Poly4::monomial(Monomial{0, 4, 0, n - 4});
    }
    return j;
}

Poly4 rm1_dual_jacobi_closed(int m, TClass cls) {
    const Poly4 dual = jacobi_transform(rm1_jacobi_closed(m, cls), pow2(static_cast<unsigned>(m + 1)));
    if (!dual.is_integral())
        throw verification_error("dual Jacobi closed form is not integral");
    return dual;
}

std::map<std::uint32_t, std::uint64_t> restriction_profile(const BinaryCode& c,
                                                           std::span<const std::uint32_t> t_set,
                                                           const std::vector<BitVec>& exclude,
                                                           unsigned threads) {
    const BitVec mask = mask_from_indices(c.length(), t_set);
    const std::uint32_t tsize = mask.popcount();
    const std::size_t cols = tsize + 1;
    const auto hist = joint_weight_histogram(c, mask, threads);

    std::map<std::uint32_t, std::uint64_t> profile;
    for (std::uint32_t i = 0; i <= tsize; ++i) profile[i] = 0;
    const std::uint32_t n = c.length();
    for (std::uint32_t wt = 0; wt <= n; ++wt)
        for (std::uint32_t i = 0; i <= tsize; ++i) profile[i] += hist[wt * cols + i];

    // Excluded words contribute one count each; drop them if they are members.
    std::vector<BitVec> seen;
    for (const auto& word : exclude) {
        if (word.size() != c.length() || !c.contains(word)) continue;
        if (std::find(seen.begin(), seen.end(), word) != seen.end()) continue;
        seen.push_back(word);
        profile[word.and_popcount(mask)] -= 1;
    }
    return profile;
}

Poly4 jacobi_difference_closed(int m, Side side) {
    if (m < 3) throw input_error("difference closed form needs m >= 3");
    const std::uint32_t h = std::uint32_t{1} << (m - 1);
    const Poly4 w = Poly4::variable(Var::W), z = Poly4::variable(Var::Z);
    const Poly4 x = Poly4::variable(Var::X), y = Poly4::variable(Var::Y);
    const Poly4 core = (w * y - x * z).pow(4);
    if (side == Side::Code) {
        const Poly4 xy = Poly4::monomial(Monomial{0, 0, h - 4, h - 4});
        return (xy * core).scale(-Rat(pow2(static_cast<unsigned>(m - 3))));
    }
    const Poly4 factor = (x * x - y * y).pow(h - 4);
    return (factor * core).scale(-1);
}

DesignReport jacobi_design_test(const BinaryCode& c, std::uint32_t ell, int t,
                                const SampleMode& mode, std::uint64_t subset_cap,
                                unsigned threads) {
    const std::uint32_t n = c.length();
    if (t < 1 || static_cast<std::uint32_t>(t) > n) throw input_error("t out of range");

    DesignReport report;
    report.t = t;
    report.method = Method::JacobiCoeff;

    // Coefficient of z^t x^{n-ell} y^{ell-t} in J_{C,T} is the joint-histogram
    // entry at (weight = ell, |supp ∩ T| = t).
    const std::size_t cols = static_cast<std::size_t>(t) + 1;
    auto coefficient = [&](const std::vector<std::uint32_t>& t_set) -> std::uint64_t {
        const BitVec mask = mask_from_indices(n, t_set);
        const auto hist = joint_weight_histogram(c, mask, threads);
        if (ell > n || static_cast<std::uint32_t>(t) > ell) return 0;
        return hist[ell * cols + t];
    };

    // Establish shell emptiness from the weight distribution.
    const auto whist = joint_weight_histogram(c, BitVec(n), threads);
    if (ell > n || whist[ell] == 0) {
        report.note = "vacuous: shell is empty, no design claim";
        return report;
    }

    bool have_first = false;
    std::uint64_t common = 0;
    std::vector<std::uint32_t> first_set;
    auto consider = [&](const std::vector<std::uint32_t>& t_set) -> bool {
        const std::uint64_t v = coefficient(t_set);
        if (!have_first) {
            have_first = true;
            common = v;
            first_set = t_set;
            return true;
        }
        if (v == common) return true;
        DesignReport::Witness w;
        if (v < common) {
            w.low = t_set;
            w.high = first_set;
            w.low_count = Rat(Int(v));
            w.high_count = Rat(Int(common));
        } else {
            w.low = first_set;
            w.high = t_set;
            w.low_count = Rat(Int(common));
            w.high_count = Rat(Int(v));
        }
        report.witness = std::move(w);
        return false;
    };

    if (mode.all) {
        if (binomial_u64(n, static_cast<unsigned>(t)) > subset_cap)
            throw capacity_error("C(n,t) exceeds subset cap; use sampled mode");
        bool constant = true;
        for_each_subset(n, static_cast<std::uint32_t>(t), [&](const std::vector<std::uint32_t>& s) {
            if (constant) constant = consider(s);
        });
        report.is_design = constant;
    } else {
        std::mt19937_64 rng(mode.seed);
        bool constant = true;
        for (std::uint64_t i = 0; i < mode.count && constant; ++i)
            constant = consider(random_subset(n, static_cast<std::uint32_t>(t), rng));
        report.is_design = constant;
        report.note = "sampled " + std::to_string(mode.count) + " T-sets, seed " +
                      std::to_string(mode.seed);
    }
    if (report.is_design) report.lambda = Rat(Int(common));
    return report;
}

}  // namespace rmj
