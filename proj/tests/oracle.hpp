// Independent reference implementations used as test oracles. Everything here
// deliberately avoids the library's computation paths: polynomials are checked
// by evaluation at random points or by a flat term-list multiplier, dual codes
// by filtering the full vector space against the inner product, Jacobi
// polynomials by a per-word definition sum, and designs by naive coverage.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "rmj/gf2code.hpp"
#include "rmj/poly.hpp"

namespace oracle {

using rmj::BinaryCode;
using rmj::BitVec;
using rmj::Monomial;
using rmj::Poly4;
using rmj::Rat;

// mpq_class(n, d) does not canonicalize; every fraction built from raw parts
// must go through here or comparisons misbehave.
inline Rat frac(int n, int d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Poly4 random_poly(std::mt19937_64& rng, int max_terms = 8, int max_exp = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> expo(0, static_cast<std::uint32_t>(max_exp));
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Poly4 p;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m{expo(rng), expo(rng), expo(rng), expo(rng)};
        p = p + Poly4::monomial(m, frac(num(rng), den(rng)));
    }
    return p;
}

inline std::array<Rat, 4> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 5);
    return {frac(num(rng), den(rng)), frac(num(rng), den(rng)), frac(num(rng), den(rng)),
            frac(num(rng), den(rng))};
}

inline Rat eval(const Poly4& p, const std::array<Rat, 4>& v) {
    return p.eval(v[0], v[1], v[2], v[3]);
}

// Flat term-list product, no map machinery.
inline Poly4 naive_mul(const Poly4& a, const Poly4& b) {
    std::vector<std::pair<Monomial, Rat>> terms;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            terms.push_back({Monomial{ma.w + mb.w, ma.z + mb.z, ma.x + mb.x, ma.y + mb.y}, ca * cb});
    Poly4 out;
    for (const auto& [m, c] : terms) out = out + Poly4::monomial(m, c);
    return out;
}

// All codewords by filtering F_2^n against the generators (n <= 20).
inline std::vector<BitVec> dual_words_by_filter(const BinaryCode& c) {
    const std::uint32_t n = c.length();
    std::vector<BitVec> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        BitVec word(n);
        for (std::uint32_t i = 0; i < n; ++i)
            if ((v >> i) & 1) word.set(i);
        bool orthogonal = true;
        for (const auto& g : c.generators())
            if (word.and_popcount(g) % 2 != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal) out.push_back(word);
    }
    return out;
}

// All codewords by direct message-subset XOR (non-Gray order).
inline std::vector<BitVec> words_by_subsets(const BinaryCode& c) {
    const auto& gens = c.generators();
    std::vector<BitVec> out;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << gens.size()); ++msg) {
        BitVec word(c.length());
        for (std::size_t i = 0; i < gens.size(); ++i)
            if ((msg >> i) & 1) word ^= gens[i];
        out.push_back(word);
    }
    return out;
}

// Jacobi polynomial straight from the definition over an explicit word list.
inline Poly4 jacobi_from_words(const std::vector<BitVec>& words, std::uint32_t n,
                               const std::vector<std::uint32_t>& t_set) {
    BitVec mask(n);
    for (auto i : t_set) mask.set(i);
    const std::uint32_t tsize = mask.popcount();
    Poly4 j;
    for (const auto& w : words) {
        const std::uint32_t m1 = w.and_popcount(mask);
        const std::uint32_t wt = w.popcount();
        j = j + Poly4::monomial(Monomial{tsize - m1, m1, (n - tsize) - (wt - m1), wt - m1});
    }
    return j;
}

// Naive coverage count of one t-subset over a block multiset.
inline std::uint64_t coverage(const std::vector<std::vector<std::uint32_t>>& blocks,
                              const std::vector<std::uint32_t>& t_set) {
    std::uint64_t count = 0;
    for (const auto& b : blocks)
        if (std::includes(b.begin(), b.end(), t_set.begin(), t_set.end())) ++count;
    return count;
}

}  // namespace oracle
