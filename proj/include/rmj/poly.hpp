#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "rmj/rational.hpp"

namespace rmj {

// Exponent tuple of a term in the four enumerator variables (w, z, x, y).
// Lexicographic order on (w, z, x, y), largest tuple first, is the canonical
// term order everywhere: map iteration, serialization and display all follow
// it (so a weight enumerator reads x^n + ... + y^n).
struct Monomial {
    std::uint32_t w = 0, z = 0, x = 0, y = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

inline constexpr std::uint32_t kMaxExponent = 1u << 20;

enum class Var { W = 0, Z = 1, X = 2, Y = 3 };

// Sparse polynomial in (w, z, x, y) with exact rational coefficients.
// Immutable value semantics: every operation returns a new polynomial and no
// stored coefficient is ever zero.
class Poly4 {
public:
    Poly4() = default;

    static Poly4 zero() { return Poly4(); }
    static Poly4 constant(Rat c);
    static Poly4 one() { return constant(1); }
    static Poly4 monomial(const Monomial& m, Rat coeff = 1);
    static Poly4 variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat, MonomialDescending>& terms() const { return terms_; }

    Rat coeff(const Monomial& m) const;

    Poly4 operator+(const Poly4& o) const;
    Poly4 operator-(const Poly4& o) const;
    Poly4 operator-() const;
    Poly4 operator*(const Poly4& o) const;
    Poly4 pow(unsigned e) const;

    Poly4 scale(const Rat& c) const;
    // Exact division of every coefficient by d (d != 0).
    Poly4 scale_div(const Int& d) const;
    bool is_integral() const;

    // Simultaneous substitution; each image must have total degree <= 1.
    Poly4 substitute(const std::array<Poly4, 4>& images) const;

    Rat eval(const Rat& w, const Rat& z, const Rat& x, const Rat& y) const;
    // Sum of coefficients = value at w=z=x=y=1; equals |C| for code enumerators.
    Rat coeff_sum() const;

    // "x^8 + 14*x^4*y^4 + y^8", canonical order; "0" for the zero polynomial.
    std::string str() const;

    std::string to_json() const;
    static Poly4 from_json(const std::string& text);

    friend bool operator==(const Poly4&, const Poly4&) = default;

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat, MonomialDescending> terms_;
};

// MacWilliams substitution images: w -> w+z, z -> w-z, x -> x+y, y -> x-y.
std::array<Poly4, 4> macwilliams_images();

// p(w+z, w-z, x+y, x-y). Equal to p.substitute(macwilliams_images()) — the
// tests hold the two routes against each other — but runs in O(deg^2) per
// (e_w,e_z) group via synthetic binomial shifts when each group's (x,y) part
// is homogeneous, which every code enumerator satisfies.
Poly4 macwilliams_substitute(const Poly4& p);

}  // namespace rmj
