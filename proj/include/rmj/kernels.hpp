#pragma once

#include <cstddef>
#include <cstdint>

namespace rmj::kernels {

// Hot inner loops of codeword enumeration, shared by weight enumerators,
// Jacobi polynomials and restriction profiles. Scalar reference
// implementations always exist; an AVX2 variant is selected at runtime when
// the CPU supports it. Both produce bit-identical results and the test suite
// checks them against each other on random inputs.

// For each table entry v = table[i] ^ prefix, increment
// hist[popcount(v) * hist_cols + popcount(v & tmask)].
// hist has (nbits+1) * hist_cols entries; hist_cols must exceed popcount(tmask).
using joint_hist_fn = void (*)(const std::uint64_t* table, std::size_t count,
                               std::uint64_t prefix, std::uint64_t tmask,
                               std::size_t hist_cols, std::uint64_t* hist);

// Total popcount of a word array.
using popcount_words_fn = std::uint64_t (*)(const std::uint64_t* words, std::size_t n);

// Total popcount of the pairwise AND of two word arrays.
using popcount_and_fn = std::uint64_t (*)(const std::uint64_t* a, const std::uint64_t* b,
                                          std::size_t n);

// dst[i] ^= src[i]
using xor_words_fn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

struct Kernels {
    joint_hist_fn joint_hist;
    popcount_words_fn popcount_words;
    popcount_and_fn popcount_and;
    xor_words_fn xor_words;
    const char* name;
};

enum class Backend { Auto, Scalar, Avx2 };

extern const Kernels scalar_kernels;

bool avx2_available();
const Kernels& avx2_kernels();  // throws capacity-agnostic runtime_error if unavailable

// Active kernel set. Defaults to the best available backend; force_backend
// overrides (tests use this to run both variants on identical inputs).
const Kernels& active();
void force_backend(Backend b);
Backend selected_backend();

}  // namespace rmj::kernels
