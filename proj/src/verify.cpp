#include "rmj/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rmj/combin.hpp"
#include "rmj/design.hpp"
#include "rmj/harmonic.hpp"
#include "rmj/jacobi.hpp"

namespace rmj {

namespace {

CheckResult check(std::string name, bool pass, std::string detail = "") {
    return CheckResult{std::move(name), pass, std::move(detail)};
}

std::string class_name(TClass c) {
    return c == TClass::AffinelyIndependent ? "indep" : "dep";
}

std::vector<std::uint32_t> to_vec(const FourSet& t) {
    return {t.points.begin(), t.points.end()};
}

// Seeded 4-subsets of the coordinate space, bucketed by T-class.
std::vector<FourSet> sample_four_sets(int m, TClass cls, unsigned count, std::mt19937_64& rng) {
    const std::uint32_t n = std::uint32_t{1} << m;
    std::vector<FourSet> out;
    for (unsigned guard = 0; out.size() < count && guard < 100000; ++guard) {
        auto pts = random_subset(n, 4, rng);
        FourSet t = make_four_set(m, {pts[0], pts[1], pts[2], pts[3]});
        if (classify_four_set(m, t) == cls) out.push_back(t);
    }
    return out;
}

Subspace3 random_subspace(int m, std::mt19937_64& rng) {
    const std::uint32_t n = std::uint32_t{1} << m;
    std::uniform_int_distribution<std::uint32_t> dist(1, n - 1);
    while (true) {
        const std::uint32_t v1 = dist(rng);
        const std::uint32_t v2 = dist(rng);
        const std::uint32_t v3 = dist(rng);
        if (v2 == v1) continue;
        if (v3 == v1 || v3 == v2 || v3 == (v1 ^ v2)) continue;
        return make_subspace3(m, {v1, v2, v3});
    }
}

int clamp_lo(const VerifyOptions& opt, int lo) { return std::max(opt.m_lo, lo); }
int clamp_hi(const VerifyOptions& opt, int hi) { return std::min(opt.m_hi, hi); }

}  // namespace

std::vector<CheckResult> verify_thm11(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);

    // Part (1): closed forms vs enumeration of RM(1,m).
    for (int m = clamp_lo(opt, 3); m <= opt.m_hi; ++m) {
        const BinaryCode rm = reed_muller_1(m);
        bool ok = true;
        std::string fail;
        for (TClass cls : {TClass::AffinelyIndependent, TClass::AffinelyDependent}) {
            const Poly4 closed = rm1_jacobi_closed(m, cls);
            std::vector<FourSet> tsets{canonical_four_set(m, cls)};
            for (auto& t : sample_four_sets(m, cls, 20, rng)) tsets.push_back(t);
            for (const auto& t : tsets) {
                if (!(jacobi(rm, to_vec(t), opt.threads) == closed)) {
                    ok = false;
                    fail = "T-class " + class_name(cls);
                    break;
                }
            }
            if (!ok) break;
        }
        out.push_back(check("thm11.1 m=" + std::to_string(m) + " closed 4-set Jacobi = enumeration (21 T/class)",
                            ok, fail));
    }

    // Part (2): dual closed forms.
    for (int m = clamp_lo(opt, 3); m <= clamp_hi(opt, 4); ++m) {
        const BinaryCode dual_code = extended_hamming(m);
        bool ok = true;
        for (TClass cls : {TClass::AffinelyIndependent, TClass::AffinelyDependent}) {
            const Poly4 closed = rm1_dual_jacobi_closed(m, cls);
            std::vector<FourSet> tsets{canonical_four_set(m, cls)};
            for (auto& t : sample_four_sets(m, cls, 5, rng)) tsets.push_back(t);
            for (const auto& t : tsets)
                ok = ok && jacobi(dual_code, to_vec(t), opt.threads) == closed;
        }
        out.push_back(check("thm11.2 m=" + std::to_string(m) + " dual closed form = dual enumeration", ok));
    }
    if (opt.slow && opt.m_lo <= 5 && 5 <= opt.m_hi) {
        const BinaryCode h32 = extended_hamming(5);
        bool ok = true;
        for (TClass cls : {TClass::AffinelyIndependent, TClass::AffinelyDependent})
            ok = ok && jacobi(h32, to_vec(canonical_four_set(5, cls)), opt.threads) ==
                           rm1_dual_jacobi_closed(5, cls);
        out.push_back(check("thm11.2 m=5 dual closed form = dual enumeration (2^26 words)", ok));
    }
    for (int m = std::max(clamp_lo(opt, 3), opt.slow ? 6 : 5); m <= opt.m_hi; ++m) {
        bool ok = true;
        const Int dual_size = pow2((std::uint32_t{1} << m) - static_cast<unsigned>(m) - 1);
        for (TClass cls : {TClass::AffinelyIndependent, TClass::AffinelyDependent}) {
            const Poly4 back = jacobi_transform(rm1_dual_jacobi_closed(m, cls), dual_size);
            ok = ok && back == rm1_jacobi_closed(m, cls);
        }
        out.push_back(check("thm11.2 m=" + std::to_string(m) + " transform round-trip returns part (1)", ok));
    }
    return out;
}

std::vector<CheckResult> verify_thm12(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    const Poly4 xy4 = Poly4::monomial(Monomial{0, 0, 4, 4});

    for (int m = clamp_lo(opt, 3); m <= opt.m_hi; ++m) {
        const std::uint32_t h = std::uint32_t{1} << (m - 1);
        const BinaryCode rm = reed_muller_1(m);

        std::vector<Subspace3> subspaces{make_subspace3(m, {1, 2, 4})};
        subspaces.push_back(random_subspace(m, rng));

        bool primal_ok = true, dual_ok = true;
        Rat s_val;
        for (const auto& u : subspaces) {
            const HarmonicFn f = corollary_f({0, 1}, u);
            // S = sum of f~ over the weight-4 words of H_8, via the block list
            const HarmonicFn f8 = corollary_f({0, 1});
            Rat s(0);
            for (const auto& b : hamming8_weight4_blocks().blocks) s += tilde(f8.fn(), b);
            s_val = s;

            const auto [primal, dual] = rm1_subspace_hwe_closed(m, 4, s);
            primal_ok = primal_ok && hwe(rm, f) == primal &&
                        primal == Poly4::monomial(Monomial{0, 0, h, h},
                                                  Rat(pow2(static_cast<unsigned>(m - 3))) * s);

            // transform-derived dual must match the explicit product form
            const Poly4 x = Poly4::variable(Var::X), y = Poly4::variable(Var::Y);
            const Poly4 expected_dual = (xy4 * (x * x - y * y).pow(h - 4)).scale(8);
            dual_ok = dual_ok && dual == expected_dual;
            if (m <= 4) dual_ok = dual_ok && hwe(extended_hamming(m), f) == dual;
        }
        out.push_back(check("thm12 m=" + std::to_string(m) + " primal = 8*2^{m-3} x^h y^h (2 subspaces)",
                            primal_ok, "S = " + rat_to_string(s_val)));
        out.push_back(check("thm12 m=" + std::to_string(m) + " dual via transform" +
                                (m <= 4 ? " (+ dual enumeration cross-check)" : ""),
                            dual_ok));

        // The alternative dual normalization (constant 2^{2^{m-1}-2}, made
        // radical-free by homogeneity: (-1)^k 2^{k-2} S) must disagree with
        // the transform-derived dual; the suite reports the discrepancy and
        // passes with the transform value.
        {
            const std::uint32_t k = 4;
            const auto [primal, dual] = rm1_subspace_hwe_closed(m, k, Rat(8));
            const Poly4 x = Poly4::variable(Var::X), y = Poly4::variable(Var::Y);
            Poly4 alt = (Poly4::monomial(Monomial{0, 0, k, k}) * (x * x - y * y).pow(h - k))
                            .scale(Rat(pow2(k - 2)) * 8);
            const bool differs = !(alt == dual);
            out.push_back(check("thm12 m=" + std::to_string(m) +
                                    " alternative dual constant 2^{2^{m-1}-2} differs (expected discrepancy)",
                                differs,
                                differs ? "alternative constant yields 4x the transform-derived dual"
                                        : "alternative constant unexpectedly matched"));
        }
    }
    return out;
}

std::vector<CheckResult> verify_lemma31(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    for (int m = clamp_lo(opt, 3); m <= opt.m_hi; ++m) {
        const std::uint32_t n = std::uint32_t{1} << m;
        const BinaryCode rm = reed_muller_1(m);
        BitVec zero(n), ones(n);
        for (std::uint32_t i = 0; i < n; ++i) ones.set(i);
        const std::vector<BitVec> exclude{zero, ones};

        const std::uint64_t p1 = std::uint64_t{1} << (m - 1);
        const std::uint64_t p2 = std::uint64_t{1} << (m - 2);
        const std::uint64_t p3 = std::uint64_t{1} << (m - 3);

        bool ok = true;
        for (TClass cls : {TClass::AffinelyIndependent, TClass::AffinelyDependent}) {
            std::vector<std::uint64_t> expect =
                cls == TClass::AffinelyIndependent
                    ? std::vector<std::uint64_t>{p3 - 1, p1, 3 * p2, p1, p3 - 1}
                    : std::vector<std::uint64_t>{p2 - 1, 0, 3 * p1, 0, p2 - 1};
            std::vector<FourSet> tsets{canonical_four_set(m, cls)};
            for (auto& t : sample_four_sets(m, cls, 10, rng)) tsets.push_back(t);
            for (const auto& t : tsets) {
                const auto prof = restriction_profile(rm, to_vec(t), exclude, opt.threads);
                for (std::uint32_t i = 0; i <= 4; ++i) ok = ok && prof.at(i) == expect[i];
            }
        }
        out.push_back(check("lemma31 m=" + std::to_string(m) +
                                " restriction histogram matches printed counts (11 T/class)",
                            ok));
    }
    return out;
}

std::vector<CheckResult> verify_lemma41(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    for (int m = clamp_lo(opt, 3); m <= opt.m_hi; ++m) {
        const BinaryCode rm = reed_muller_1(m);
        const std::uint64_t expect = std::uint64_t{1} << (m - 3);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const Subspace3 u = trial == 0 ? make_subspace3(m, {1, 2, 4}) : random_subspace(m, rng);
            try {
                const auto [image, fibers] = restrict_to_subspace(rm, u);
                ok = image == extended_hamming(3) && fibers.size() == 14;
                for (const auto& [word, count] : fibers) ok = ok && count == expect;
            } catch (const verification_error& e) {
                ok = false;
                detail = e.what();
            }
        }
        out.push_back(check("lemma41 m=" + std::to_string(m) +
                                " restriction image = H_8, weight-4 fibers = 2^{m-3} (5 subspaces)",
                            ok, detail));
    }
    return out;
}

std::vector<CheckResult> verify_difference_identities(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const Poly4 w = Poly4::variable(Var::W), z = Poly4::variable(Var::Z);
    const Poly4 x = Poly4::variable(Var::X), y = Poly4::variable(Var::Y);
    bool ok = true;
    for (int m = clamp_lo(opt, 3); m <= opt.m_hi; ++m) {
        const std::uint32_t h = std::uint32_t{1} << (m - 1);
        const Poly4 code_diff = rm1_jacobi_closed(m, TClass::AffinelyIndependent) -
                                rm1_jacobi_closed(m, TClass::AffinelyDependent);
        const Poly4 code_expect = (Poly4::monomial(Monomial{0, 0, h - 4, h - 4}) *
                                   (w * y - x * z).pow(4))
                                      .scale(-Rat(pow2(static_cast<unsigned>(m - 3))));
        const Poly4 dual_diff = rm1_dual_jacobi_closed(m, TClass::AffinelyIndependent) -
                                rm1_dual_jacobi_closed(m, TClass::AffinelyDependent);
        const Poly4 dual_expect = ((x * x - y * y).pow(h - 4) * (w * y - x * z).pow(4)).scale(-1);
        ok = ok && code_diff == code_expect && code_diff == jacobi_difference_closed(m, Side::Code);
        ok = ok && dual_diff == dual_expect && dual_diff == jacobi_difference_closed(m, Side::Dual);
    }
    out.push_back(check("corollary difference identities m=" + std::to_string(clamp_lo(opt, 3)) +
                            ".." + std::to_string(opt.m_hi),
                        ok));
    return out;
}

std::vector<CheckResult> verify_corollary_suite(const VerifyOptions& opt) {
    std::vector<CheckResult> out = verify_difference_identities(opt);

    // Shell-by-shell verdicts.
    static const Rat kMidLambda3[] = {Rat(1), Rat(3), Rat(7)};  // m = 3, 4, 5
    for (int m = clamp_lo(opt, 3); m <= clamp_hi(opt, 5); ++m) {
        const CorollaryReport rep = verify_corollary(m, Route::Both, opt.threads);
        bool ok = rep.all_proper_shells_refuted && rep.all_shells_three_designs && rep.agreement;
        std::ostringstream detail;
        const std::uint32_t mid = std::uint32_t{1} << (m - 1);
        for (const auto& s : rep.shells) {
            if (s.code.rfind("RM", 0) == 0 && s.ell == mid) {
                ok = ok && s.lambda3 && *s.lambda3 == kMidLambda3[m - 3];
                detail << s.code << " middle shell lambda_3 = "
                       << (s.lambda3 ? rat_to_string(*s.lambda3) : "?");
            }
        }
        out.push_back(check("corollary m=" + std::to_string(m) +
                                " all proper shells: 3-designs, 4-design refuted, methods agree",
                            ok, detail.str()));
    }
    return out;
}

std::vector<CheckResult> verify_invariants(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);

    // MacWilliams double substitution scales each monomial by 2^{degree}.
    {
        bool ok = true;
        std::uniform_int_distribution<int> expo(0, 6), coef(-5, 5);
        for (int trial = 0; trial < 25; ++trial) {
            Poly4 p;
            for (int t = 0; t < 6; ++t) {
                Monomial mo{static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng)),
                            static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng))};
                p = p + Poly4::monomial(mo, coef(rng));
            }
            const Poly4 twice = p.substitute(macwilliams_images()).substitute(macwilliams_images());
            Poly4 expect;
            for (const auto& [mo, c] : p.terms())
                expect = expect + Poly4::monomial(mo, c * Rat(pow2(mo.w + mo.z + mo.x + mo.y)));
            ok = ok && twice == expect;
            // the grouped fast route agrees with the generic one
            ok = ok && macwilliams_substitute(p) == p.substitute(macwilliams_images());
        }
        out.push_back(check("invariant: MacWilliams double transform = 2^deg scaling (25 random polys)", ok));
    }

    // Bachoc round-trip and (xy)^k divisibility on full harmonic bases of H_8.
    {
        const BinaryCode h8 = extended_hamming(3);
        bool ok = true;
        for (std::uint32_t k = 1; k <= 4; ++k) {
            for (const auto& f : harm_basis(8, k)) {
                const Poly4 wcf = hwe(h8, f);
                const Poly4 dual = bachoc_transform(wcf, 8, k, 16);  // throws if not divisible
                ok = ok && bachoc_transform(dual, 8, k, 16) == wcf;
            }
        }
        const BinaryCode rm4 = reed_muller_1(4);
        for (std::uint32_t k = 1; k <= 4; ++k) {
            const auto basis = harm_basis(16, k);
            for (std::size_t i = 0; i < basis.size(); i += std::max<std::size_t>(basis.size() / 5, 1)) {
                const Poly4 wcf = hwe(rm4, basis[i]);
                const Poly4 dual = bachoc_transform(wcf, 16, k, 32);
                ok = ok && bachoc_transform(dual, 16, k, pow2(11)) == wcf;
            }
        }
        out.push_back(check("invariant: Bachoc transform round-trip + (xy)^k divisibility, n=8 and n=16", ok));
    }

    // Harmonic space dimensions and gamma kernel membership.
    {
        bool ok = true;
        for (std::uint32_t n = 4; n <= 10; ++n) {
            for (std::uint32_t k = 1; k <= std::min<std::uint32_t>(4, n); ++k) {
                const auto basis = harm_basis(n, k);
                const std::int64_t expect =
                    static_cast<std::int64_t>(binomial_u64(n, k)) -
                    static_cast<std::int64_t>(binomial_u64(n, k - 1));
                ok = ok && static_cast<std::int64_t>(basis.size()) == std::max<std::int64_t>(expect, 0);
                for (const auto& f : basis) ok = ok && gamma(f.fn()).is_zero();
            }
        }
        out.push_back(check("invariant: dim Harm_k = C(n,k) - C(n,k-1) and gamma(basis) = 0, n <= 10", ok));
    }

    // Block-intersection counts for every transposition.
    {
        bool ok = true;
        for (std::uint32_t a = 0; a < 8 && ok; ++a)
            for (std::uint32_t b = a + 1; b < 8 && ok; ++b) {
                try {
                    const HarmonicFn f = corollary_f({a, b});  // construction checks the count
                    Rat s(0);
                    for (const auto& blk : hamming8_weight4_blocks().blocks) s += tilde(f.fn(), blk);
                    ok = s == 8;
                } catch (const verification_error&) {
                    ok = false;
                }
            }
        out.push_back(check("invariant: |B ∩ B^tau| = 6 and sum f~ = 8 for all 28 transpositions", ok));
    }

    // Three-way design-test agreement on every shell with n <= 16.
    {
        bool ok = true;
        std::ostringstream detail;
        struct Probe {
            BinaryCode code;
            std::string name;
        };
        std::vector<Probe> probes;
        probes.push_back({reed_muller_1(3), "RM(1,3)"});
        probes.push_back({reed_muller_1(4), "RM(1,4)"});
        probes.push_back({extended_hamming(4), "H_16"});

        for (const auto& probe : probes) {
            const std::uint32_t n = probe.code.length();
            std::vector<std::vector<HarmonicFn>> bases;
            for (std::uint32_t k = 1; k <= 4; ++k) bases.push_back(harm_basis(n, k));
            const auto hist = joint_weight_histogram(probe.code, BitVec(n), opt.threads);
            for (std::uint32_t ell = 0; ell <= n; ++ell) {
                if (!hist[ell]) continue;
                const BlockSet blocks = shell(probe.code, ell);
                for (int t = 2; t <= 4; ++t) {
                    const auto direct = is_t_design(blocks, t);
                    const auto dels = delsarte_test(blocks, t, &bases);
                    const auto jac = jacobi_design_test(probe.code, ell, t, {}, kDefaultSubsetCap,
                                                        opt.threads);
                    const bool agree = direct.is_design == dels.is_design &&
                                       direct.is_design == jac.is_design &&
                                       (!direct.is_design || *direct.lambda == *jac.lambda);
                    if (!agree) {
                        ok = false;
                        detail << probe.name << " ell=" << ell << " t=" << t << " disagrees; ";
                    }
                    // lambda double-counting identity
                    if (direct.is_design) {
                        Rat lhs = *direct.lambda * Rat(binomial(n, static_cast<unsigned>(t)));
                        Rat rhs(0);
                        for (const auto& b : blocks.blocks)
                            rhs += Rat(binomial(static_cast<unsigned>(b.size()),
                                                static_cast<unsigned>(t)));
                        ok = ok && lhs == rhs;
                    }
                }
            }
        }
        out.push_back(check("invariant: direct/Delsarte/Jacobi agree on all shells with n <= 16 (t=2..4)",
                            ok, detail.str()));
    }
    return out;
}

std::vector<CheckResult> verify_all(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto f : {verify_thm11, verify_thm12, verify_lemma31, verify_lemma41,
                   verify_corollary_suite, verify_invariants}) {
        auto part = f(opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace rmj
