#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rmj/errors.hpp"
#include "rmj/poly.hpp"

using namespace rmj;

namespace {
const Poly4 W = Poly4::variable(Var::W);
const Poly4 Z = Poly4::variable(Var::Z);
const Poly4 X = Poly4::variable(Var::X);
const Poly4 Y = Poly4::variable(Var::Y);

Poly4 rm13_wenum() {
    return Poly4::monomial({0, 0, 8, 0}) + Poly4::monomial({0, 0, 4, 4}, 14) +
           Poly4::monomial({0, 0, 0, 8});
}
}  // namespace

TEST_CASE("addition: inverses, identity, paper fixture") {
    const Poly4 w4 = Poly4::monomial({4, 0, 0, 0});
    CHECK((w4 + w4.scale(-1)).is_zero());

    const Poly4 sum = Poly4::monomial({0, 0, 8, 0}) +
                      (Poly4::monomial({0, 0, 4, 4}, 14) + Poly4::monomial({0, 0, 0, 8}));
    CHECK(sum == rm13_wenum());
    CHECK(sum.term_count() == 3);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const Poly4 p = oracle::random_poly(rng);
        CHECK(p + Poly4::zero() == p);
    }
}

TEST_CASE("multiplication against hand expansions and the flat-list oracle") {
    CHECK((X + Y) * (X - Y) == X * X - Y * Y);

    // (wy - xz)^2 = w^2y^2 - 2wxyz + x^2z^2
    const Poly4 core = W * Y - X * Z;
    const Poly4 sq = core * core;
    CHECK(sq == Poly4::monomial({2, 0, 0, 2}) + Poly4::monomial({1, 1, 1, 1}, -2) +
                    Poly4::monomial({0, 2, 2, 0}));

    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        const Poly4 p = oracle::random_poly(rng), q = oracle::random_poly(rng);
        CHECK(p * q == oracle::naive_mul(p, q));
        CHECK(p * Poly4::one() == p);
        CHECK(p * q == q * p);
    }
    for (int i = 0; i < 10; ++i) {
        const Poly4 p = oracle::random_poly(rng), q = oracle::random_poly(rng),
                    r = oracle::random_poly(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) + r == p + (q + r));
    }
}

TEST_CASE("powers: binomials and the (wy-xz)^4 pattern") {
    CHECK((X + Y).pow(2) == X * X + (X * Y).scale(2) + Y * Y);

    // binomial theorem oracle for (wy - xz)^4: coefficient of (wy)^i (xz)^{4-i}
    // is C(4,i) (-1)^{4-i}: 1, -4, 6, -4, 1
    const Poly4 p4 = (W * Y - X * Z).pow(4);
    CHECK(p4.term_count() == 5);
    for (std::uint32_t i = 0; i <= 4; ++i) {
        const Rat expect = Rat(binomial(4, i)) * ((4 - i) % 2 ? -1 : 1);
        CHECK(p4.coeff({i, 4 - i, 4 - i, i}) == expect);
    }

    std::mt19937_64 rng(3);
    for (int i = 0; i < 15; ++i) {
        const Poly4 p = oracle::random_poly(rng, 4, 3);
        CHECK(p.pow(0) == Poly4::one());
        CHECK(p.pow(1) == p);
        CHECK(p.pow(3) == p * p * p);
        // evaluation oracle
        const auto v = oracle::random_point(rng);
        Rat expect(1);
        for (int e = 0; e < 5; ++e) expect *= oracle::eval(p, v);
        CHECK(oracle::eval(p.pow(5), v) == expect);
    }
}

TEST_CASE("substitution: direct cases and the MacWilliams map") {
    // wz under w -> w+z, z -> w-z gives w^2 - z^2
    const Poly4 p = W * Z;
    CHECK(p.substitute({W + Z, W - Z, X, Y}) == W * W - Z * Z);

    // identity map
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
        const Poly4 q = oracle::random_poly(rng);
        CHECK(q.substitute({W, Z, X, Y}) == q);
    }

    // RM(1,3) weight enumerator is MacWilliams self-dual up to |C| = 16
    const Poly4 transformed = rm13_wenum().substitute(macwilliams_images());
    CHECK(transformed == rm13_wenum().scale(16));
    CHECK(transformed.scale_div(16) == rm13_wenum());

    // non-linear image is rejected
    CHECK_THROWS_AS(p.substitute({W * W, Z, X, Y}), input_error);

    // evaluation oracle: substituting then evaluating = evaluating the images
    for (int i = 0; i < 15; ++i) {
        const Poly4 q = oracle::random_poly(rng);
        const auto v = oracle::random_point(rng);
        const Rat direct = oracle::eval(q.substitute(macwilliams_images()), v);
        const Rat expect = q.eval(v[0] + v[1], v[0] - v[1], v[2] + v[3], v[2] - v[3]);
        CHECK(direct == expect);
    }
}

TEST_CASE("grouped MacWilliams substitution equals the generic route") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const Poly4 p = oracle::random_poly(rng);  // generally non-homogeneous
        CHECK(macwilliams_substitute(p) == p.substitute(macwilliams_images()));
    }
    // homogeneous-in-(x,y) inputs take the fast path; same answer required
    for (int i = 0; i < 20; ++i) {
        Poly4 p;
        std::uniform_int_distribution<std::uint32_t> e(0, 10);
        for (int t = 0; t < 5; ++t) {
            const std::uint32_t deg = 10, xe = e(rng);
            p = p + Poly4::monomial({e(rng) % 3, e(rng) % 3, xe, deg - xe},
                                    Rat(static_cast<int>(rng() % 19) - 9));
        }
        CHECK(macwilliams_substitute(p) == p.substitute(macwilliams_images()));
    }
}

TEST_CASE("double MacWilliams substitution scales by 2^degree") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 10; ++i) {
        // homogeneous of degree n in (x,y) only
        const std::uint32_t n = 6 + static_cast<std::uint32_t>(rng() % 5);
        Poly4 p;
        for (std::uint32_t xe = 0; xe <= n; ++xe)
            p = p + Poly4::monomial({0, 0, xe, n - xe}, Rat(static_cast<int>(rng() % 15) - 7));
        const Poly4 twice = p.substitute(macwilliams_images()).substitute(macwilliams_images());
        CHECK(twice == p.scale(Rat(pow2(n))));
    }
}

TEST_CASE("scale_div and integrality") {
    const Poly4 big = rm13_wenum().scale(16);
    CHECK(big.scale_div(16) == rm13_wenum());
    CHECK(big.scale_div(16).is_integral());
    CHECK(rm13_wenum().scale_div(1) == rm13_wenum());

    const Poly4 half = X.scale_div(2);
    CHECK_FALSE(half.is_integral());
    CHECK(half.coeff({0, 0, 1, 0}) == Rat(1, 2));
    CHECK_THROWS_AS(X.scale_div(0), input_error);
}

TEST_CASE("coefficient lookup") {
    CHECK(rm13_wenum().coeff({0, 0, 4, 4}) == 14);
    CHECK(rm13_wenum().coeff({1, 0, 3, 4}) == 0);
    CHECK(rm13_wenum().coeff_sum() == 16);
}

TEST_CASE("exponent sanity cap") {
    CHECK_THROWS_AS(Poly4::monomial({(1u << 20) + 1, 0, 0, 0}), input_error);
}

TEST_CASE("canonical order, display and JSON round trip") {
    CHECK(rm13_wenum().str() == "x^8 + 14*x^4*y^4 + y^8");
    CHECK(Poly4::zero().str() == "0");
    CHECK((X - Y).str() == "x - y");
    CHECK((W * Y - X * Z).pow(2).str() == "w^2*y^2 - 2*w*x*y*z + x^2*z^2");

    const std::string js = rm13_wenum().to_json();
    CHECK(js ==
          R"({"vars":["w","z","x","y"],"terms":[{"exp":[0,0,8,0],"coeff":"1"},{"exp":[0,0,4,4],"coeff":"14"},{"exp":[0,0,0,8],"coeff":"1"}]})");
    CHECK(Poly4::from_json(js) == rm13_wenum());

    std::mt19937_64 rng(8);
    for (int i = 0; i < 25; ++i) {
        const Poly4 p = oracle::random_poly(rng);
        CHECK(Poly4::from_json(p.to_json()) == p);
        CHECK(p.to_json() == Poly4::from_json(p.to_json()).to_json());
    }
    CHECK_THROWS_AS(Poly4::from_json("not json"), input_error);
    CHECK_THROWS_AS(Poly4::from_json(R"({"terms":[{"exp":[1,2],"coeff":"1"}]})"), input_error);
}

TEST_CASE("rational coefficients survive serialization") {
    const Poly4 p = X.scale(Rat(-3, 7)) + Y.scale(Rat(22, 5));
    CHECK(Poly4::from_json(p.to_json()) == p);
    CHECK(p.coeff({0, 0, 1, 0}) == Rat(-3, 7));
}
