#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rmj/combin.hpp"
#include "rmj/design.hpp"

using namespace rmj;

TEST_CASE("direct coverage counting") {
    const BlockSet b = hamming8_weight4_blocks();

    const auto d3 = is_t_design(b, 3);
    CHECK(d3.is_design);
    CHECK(*d3.lambda == 1);

    const auto d4 = is_t_design(b, 4);
    CHECK_FALSE(d4.is_design);
    REQUIRE(d4.witness.has_value());
    CHECK(d4.witness->low_count == 0);
    CHECK(d4.witness->high_count == 1);
    // lexicographically first attainers
    CHECK(d4.witness->high == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(d4.witness->low == std::vector<std::uint32_t>{0, 1, 2, 4});
    CHECK(oracle::coverage(b.blocks, d4.witness->low) == 0);
    CHECK(oracle::coverage(b.blocks, d4.witness->high) == 1);

    // empty block set: vacuous, never a design
    const auto vac = is_t_design(BlockSet{8, {}}, 3);
    CHECK_FALSE(vac.is_design);
    CHECK_FALSE(vac.lambda.has_value());
    CHECK(vac.note.find("vacuous") != std::string::npos);

    // multiset semantics: duplicated blocks double lambda
    BlockSet doubled = b;
    doubled.blocks.insert(doubled.blocks.end(), b.blocks.begin(), b.blocks.end());
    const auto dd = is_t_design(doubled, 3);
    CHECK(dd.is_design);
    CHECK(*dd.lambda == 2);

    CHECK_THROWS_AS(is_t_design(b, 0), input_error);
    CHECK_THROWS_AS(is_t_design(b, 3, 10), capacity_error);
}

TEST_CASE("coverage against the oracle on random block sets") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        BlockSet b;
        b.n = 10;
        for (int i = 0; i < 12; ++i) b.blocks.push_back(random_subset(10, 3 + rng() % 4, rng));
        std::sort(b.blocks.begin(), b.blocks.end());
        const auto rep = is_t_design(b, 2);
        std::uint64_t lo = UINT64_MAX, hi = 0;
        for_each_subset(10, 2, [&](const std::vector<std::uint32_t>& t) {
            const auto c = oracle::coverage(b.blocks, t);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        });
        CHECK(rep.is_design == (lo == hi));
        if (rep.is_design)
            CHECK(*rep.lambda == Rat(Int(lo)));
        else {
            CHECK(rep.witness->low_count == Rat(Int(lo)));
            CHECK(rep.witness->high_count == Rat(Int(hi)));
        }
    }
}

TEST_CASE("Delsarte criterion") {
    const BlockSet b = hamming8_weight4_blocks();

    const auto d3 = delsarte_test(b, 3);
    CHECK(d3.is_design);
    CHECK(*d3.lambda == 1);  // forced by double counting

    const auto d4 = delsarte_test(b, 4);
    CHECK_FALSE(d4.is_design);
    REQUIRE(d4.harmonic_witness.has_value());
    CHECK(d4.harmonic_witness->first == 4);  // fails exactly at degree 4

    const auto vac = delsarte_test(BlockSet{8, {}}, 3);
    CHECK_FALSE(vac.is_design);
    CHECK(vac.note.find("vacuous") != std::string::npos);

    // precomputed bases give the same verdicts
    std::vector<std::vector<HarmonicFn>> bases;
    for (std::uint32_t k = 1; k <= 4; ++k) bases.push_back(harm_basis(8, k));
    CHECK(delsarte_test(b, 3, &bases).is_design);
    CHECK_FALSE(delsarte_test(b, 4, &bases).is_design);
}

TEST_CASE("three methods agree on the shells of small codes") {
    std::mt19937_64 rng(52);
    for (int m : {3, 4}) {
        const BinaryCode code = reed_muller_1(m);
        const std::uint32_t n = code.length();
        std::vector<std::vector<HarmonicFn>> bases;
        for (std::uint32_t k = 1; k <= 4; ++k) bases.push_back(harm_basis(n, k));
        for (std::uint32_t ell : {0u, n / 2, n}) {
            const BlockSet blocks = shell(code, ell);
            for (int t = 1; t <= 4; ++t) {
                const auto a = is_t_design(blocks, t);
                const auto b = delsarte_test(blocks, t, &bases);
                const auto c = jacobi_design_test(code, ell, t);
                CHECK(a.is_design == b.is_design);
                CHECK(a.is_design == c.is_design);
                if (a.is_design) {
                    CHECK(*a.lambda == *c.lambda);
                    CHECK(*a.lambda == *b.lambda);
                }
            }
        }
    }
}

TEST_CASE("lambda double counting") {
    const BlockSet b = shell(extended_hamming(4), 6);
    const auto rep = is_t_design(b, 3);
    CHECK(rep.is_design);
    CHECK(*rep.lambda == 16);
    Rat rhs(0);
    for (const auto& blk : b.blocks) rhs += Rat(binomial(static_cast<unsigned>(blk.size()), 3));
    CHECK(*rep.lambda * Rat(binomial(16, 3)) == rhs);
}

TEST_CASE("monotonicity: a t-design is a (t-1)-design") {
    for (std::uint32_t ell : {4u, 6u, 8u}) {
        const BlockSet b = shell(extended_hamming(4), ell);
        int max_t = 0;
        for (int t = 1; t <= 4; ++t)
            if (is_t_design(b, t).is_design) max_t = t;
        for (int t = 1; t <= max_t; ++t) CHECK(is_t_design(b, t).is_design);
        CHECK(max_t == 3);
    }
}

TEST_CASE("Assmus-Mattson strength") {
    CHECK(assmus_mattson_t(reed_muller_1(3)) == 3);
    CHECK(assmus_mattson_t(reed_muller_1(4)) == 3);
    CHECK(assmus_mattson_t(reed_muller_1(5)) == 3);
    CHECK(assmus_mattson_t(extended_hamming(3)) == 3);
    CHECK(assmus_mattson_t(extended_hamming(4)) == 3);
    CHECK(assmus_mattson_t(extended_hamming(5)) == 3);

    // repetition code: both weight sets are tiny, the condition holds at t = n
    BitVec ones(6);
    for (std::uint32_t i = 0; i < 6; ++i) ones.set(i);
    CHECK(assmus_mattson_t(make_code(6, {ones})) == 6);
}

TEST_CASE("corollary verification") {
    const CorollaryReport r3 = verify_corollary(3, Route::Both);
    CHECK(r3.all_proper_shells_refuted);
    CHECK(r3.all_shells_three_designs);
    CHECK(r3.agreement);
    CHECK(r3.shells.size() == 6);  // {0, 4, 8} for RM(1,3) and for H_8

    int proper = 0;
    for (const auto& s : r3.shells) {
        if (s.trivial) continue;
        ++proper;
        CHECK(s.ell == 4);
        CHECK(s.lambda3.has_value());
        CHECK(*s.lambda3 == 1);
        CHECK(s.jacobi_gap == -1);
        CHECK(s.hwe_coeff == 8);
    }
    CHECK(proper == 2);

    const CorollaryReport r4 = verify_corollary(4, Route::Both);
    CHECK(r4.all_proper_shells_refuted);
    CHECK(r4.agreement);
    // frozen lambda_3 per shell of H_16
    std::map<std::uint32_t, Rat> lam;
    for (const auto& s : r4.shells)
        if (!s.trivial && s.code == "H_16" && s.lambda3) lam[s.ell] = *s.lambda3;
    CHECK(lam == std::map<std::uint32_t, Rat>{{4, Rat(1)}, {6, Rat(16)}, {8, Rat(87)},
                                              {10, Rat(96)}, {12, Rat(55)}});

    // jacobi-only route still refutes everything proper
    const CorollaryReport rj = verify_corollary(6, Route::Jacobi);
    CHECK(rj.all_proper_shells_refuted);
    CHECK_THROWS_AS(verify_corollary(2), input_error);
}
