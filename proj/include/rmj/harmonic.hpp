#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmj/gf2code.hpp"
#include "rmj/poly.hpp"
#include "rmj/rational.hpp"

namespace rmj {

inline constexpr std::uint64_t kDefaultHarmCap = 100000;  // on C(n,k)

// Rational-valued function on k-subsets of {0,...,n-1}. Keys are sorted;
// zero values are never stored.
class SubsetFn {
public:
    SubsetFn(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {}

    std::uint32_t points() const { return n_; }
    std::uint32_t degree() const { return k_; }
    const std::map<std::vector<std::uint32_t>, Rat>& values() const { return values_; }

    Rat value(const std::vector<std::uint32_t>& subset) const;
    void set(std::vector<std::uint32_t> subset, Rat v);
    void add(std::vector<std::uint32_t> subset, const Rat& v);
    bool is_zero() const { return values_.empty(); }

    std::string to_json() const;
    static SubsetFn from_json(const std::string& text);

    friend bool operator==(const SubsetFn&, const SubsetFn&) = default;

private:
    std::uint32_t n_, k_;
    std::map<std::vector<std::uint32_t>, Rat> values_;
};

// Differentiation: (gamma f)(y) = sum of f over the k-supersets of y that lie
// in f's support; degree drops by one.
SubsetFn gamma(const SubsetFn& f);

// f~(u) = sum of f over all k-subsets of u.
Rat tilde(const SubsetFn& f, std::span<const std::uint32_t> u_sorted);

// Subset function with gamma(f) = 0, checked at construction.
class HarmonicFn {
public:
    explicit HarmonicFn(SubsetFn f);
    const SubsetFn& fn() const { return f_; }
    std::uint32_t points() const { return f_.points(); }
    std::uint32_t degree() const { return f_.degree(); }

private:
    SubsetFn f_;
};

// Basis of ker(gamma) on degree-k subset functions, computed by exact
// rational elimination. Canonical: pivot columns are the lexicographically
// earliest independent columns, vectors are scaled to integer entries with
// content 1, ordered by their free column.
std::vector<HarmonicFn> harm_basis(std::uint32_t n, std::uint32_t k,
                                   std::uint64_t cap = kDefaultHarmCap);

// Harmonic weight enumerator sum over codewords of f~(supp c) x^{n-wt} y^{wt}.
Poly4 hwe(const BinaryCode& c, const HarmonicFn& f);

// Dualization of a harmonic weight enumerator, radical-free: with
// wcf = (xy)^k Z and Z homogeneous of degree n-2k,
//   dual = (xy)^k * (-1)^k (2^k / code_size) * Z(x+y, x-y).
Poly4 bachoc_transform(const Poly4& wcf, std::uint32_t n, std::uint32_t k, const Int& code_size);

// Three-dimensional subspace of F_2^m given by 3 independent vectors;
// points = the 8 spanned coordinate indices, sorted (always contains 0).
struct Subspace3 {
    int m = 0;
    std::array<std::uint32_t, 3> basis{};
    std::vector<std::uint32_t> points;  // size 8, sorted
};

Subspace3 make_subspace3(int m, std::array<std::uint32_t, 3> basis);

// Restriction of RM(1,m) to the 8 points of U. The image must be H_8
// (verification error otherwise); the map gives, for each weight-4 word a of
// H_8, the number of weight-2^{m-1} codewords restricting to a.
std::pair<BinaryCode, std::map<BitVec, std::uint64_t>> restrict_to_subspace(const BinaryCode& c,
                                                                            const Subspace3& u);

// The 14 supports of weight-4 words of H_8: blocks of a 3-(8,4,1) design.
BlockSet hamming8_weight4_blocks();

// Degree-4 harmonic function sum(B) - sum(B^tau) built from the 3-(8,4,1)
// blocks and a transposition tau; optionally embedded on 2^m points via the
// sorted point list of U (H_8 coordinate i -> i-th smallest point of U).
HarmonicFn corollary_f(std::pair<std::uint32_t, std::uint32_t> tau,
                       const std::optional<Subspace3>& u = std::nullopt);

// Closed forms for the harmonic weight enumerator of RM(1,m) with a degree-k
// harmonic function supported inside a 3-dimensional subspace, where
// S = sum of f~ over the weight-4 words of H_8:
//   primal: 2^{m-3} S x^{2^{m-1}} y^{2^{m-1}}
//   dual:   bachoc_transform of the primal.
// Only k = 4 is exercised by the corollary; other k are experimental.
std::pair<Poly4, Poly4> rm1_subspace_hwe_closed(int m, std::uint32_t k, const Rat& s);

}  // namespace rmj
