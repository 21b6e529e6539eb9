#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmj/errors.hpp"
#include "rmj/kernels.hpp"

namespace rmj {

// Fixed-length bit vector over GF(2), packed into 64-bit words (bit i of word
// i/64). Codewords, generator rows and coordinate masks are all BitVecs.
class BitVec {
public:
    BitVec() : nbits_(0) {}
    explicit BitVec(std::uint32_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(static_cast<std::uint32_t>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(static_cast<std::uint32_t>(i));
            else if (s[i] != '0')
                throw input_error("bit string may contain only 0/1");
        }
        return v;
    }

    std::uint32_t size() const { return nbits_; }
    std::size_t word_count() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    bool get(std::uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint32_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    std::uint32_t popcount() const {
        return static_cast<std::uint32_t>(kernels::active().popcount_words(w_.data(), w_.size()));
    }
    std::uint32_t and_popcount(const BitVec& o) const {
        return static_cast<std::uint32_t>(
            kernels::active().popcount_and(w_.data(), o.w_.data(), w_.size()));
    }

    BitVec& operator^=(const BitVec& o) {
        kernels::active().xor_words(w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool is_zero() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    // Index of the first set bit, or size() when zero.
    std::uint32_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(w_[i]));
        return nbits_;
    }

    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> s;
        s.reserve(popcount());
        for (std::uint32_t i = 0; i < nbits_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::uint32_t i = 0; i < nbits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.nbits_ <=> b.nbits_; c != 0) return c;
        return a.w_ <=> b.w_;
    }

private:
    std::uint32_t nbits_;
    std::vector<std::uint64_t> w_;
};

}  // namespace rmj
