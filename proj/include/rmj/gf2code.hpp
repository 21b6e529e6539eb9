#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmj/bitvec.hpp"
#include "rmj/poly.hpp"
#include "rmj/rational.hpp"

namespace rmj {

// Full codeword enumeration is allowed up to 2^26 words; beyond that the
// MacWilliams-type transforms are the supported route.
inline constexpr unsigned kMaxEnumDimension = 26;

// Multiset of subsets of {0,...,n-1}; blocks are kept sorted.
struct BlockSet {
    std::uint32_t n = 0;
    std::vector<std::vector<std::uint32_t>> blocks;
};

// Binary linear code held as a reduced row-echelon generator matrix.
class BinaryCode {
public:
    // Rows are reduced over GF(2); zero/duplicate rows drop out, k = rank.
    static BinaryCode from_rows(std::uint32_t n, const std::vector<BitVec>& rows);

    std::uint32_t length() const { return n_; }
    std::uint32_t dimension() const { return static_cast<std::uint32_t>(gens_.size()); }
    Int size() const { return pow2(dimension()); }

    const std::vector<BitVec>& generators() const { return gens_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    BinaryCode dual() const;
    bool contains(const BitVec& word) const;

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;  // RREF is canonical
    }

private:
    BinaryCode() = default;
    std::uint32_t n_ = 0;
    std::vector<BitVec> gens_;
    std::vector<std::uint32_t> pivots_;
};

BinaryCode make_code(std::uint32_t n, const std::vector<BitVec>& rows);

// RM(1,m): length 2^m, dimension m+1. Coordinate j <-> the vector of binary
// digits of j, least-significant bit first.
BinaryCode reed_muller_1(int m);

// Defined as dual(reed_muller_1(m)): length 2^m, dimension 2^m - m - 1.
BinaryCode extended_hamming(int m);

// Visits all 2^k codewords exactly once, in Gray-code message order (each
// step XORs a single generator). Deterministic. Throws capacity_error when
// k exceeds kMaxEnumDimension.
void for_each_codeword(const BinaryCode& c, const std::function<void(const BitVec&)>& fn);

// Joint histogram over all codewords: entry [wt * (t+1) + i] counts codewords
// with weight wt and |supp ∩ tmask| = i, where t = popcount(tmask).
// This is the kernel-accelerated enumeration core. threads = 0 means one
// thread per hardware core for single-word codes with k >= 20.
std::vector<std::uint64_t> joint_weight_histogram(const BinaryCode& c, const BitVec& tmask,
                                                  unsigned threads = 1);

Poly4 weight_enumerator(const BinaryCode& c, unsigned threads = 1);

BlockSet shell(const BinaryCode& c, std::uint32_t ell);

// --- file formats ---

// "n k" on the first line, then k rows of n characters from {0,1}.
std::string generator_matrix_to_text(const BinaryCode& c);
BinaryCode generator_matrix_from_text(const std::string& text);

// One block per line, space-separated 0-based indices.
std::string blockset_to_text(const BlockSet& b);
BlockSet blockset_from_text(const std::string& text, std::uint32_t n);

}  // namespace rmj
