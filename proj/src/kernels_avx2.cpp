// AVX2 variants of the enumeration kernels. This translation unit is the only
// one compiled with -mavx2; callers reach it through the runtime dispatch in
// kernels.cpp. Popcounts use the classic vpshufb nibble lookup followed by
// a horizontal byte add (vpsadbw), giving one 64-bit count per lane.

#include "rmj/kernels.hpp"

#include <bit>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#define RMJ_X86 1
#include <immintrin.h>
#else
#define RMJ_X86 0
#endif

namespace rmj::kernels {

#if RMJ_X86 && defined(__AVX2__)

namespace {

inline __m256i popcount64x4(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi64(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

void joint_hist_avx2(const std::uint64_t* table, std::size_t count, std::uint64_t prefix,
                     std::uint64_t tmask, std::size_t hist_cols, std::uint64_t* hist) {
    const __m256i vprefix = _mm256_set1_epi64x(static_cast<long long>(prefix));
    const __m256i vmask = _mm256_set1_epi64x(static_cast<long long>(tmask));
    std::size_t i = 0;
    alignas(32) std::uint64_t wt[4], wi[4];
    for (; i + 4 <= count; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + i));
        v = _mm256_xor_si256(v, vprefix);
        _mm256_store_si256(reinterpret_cast<__m256i*>(wt), popcount64x4(v));
        _mm256_store_si256(reinterpret_cast<__m256i*>(wi),
                           popcount64x4(_mm256_and_si256(v, vmask)));
        ++hist[wt[0] * hist_cols + wi[0]];
        ++hist[wt[1] * hist_cols + wi[1]];
        ++hist[wt[2] * hist_cols + wi[2]];
        ++hist[wt[3] * hist_cols + wi[3]];
    }
    for (; i < count; ++i) {
        const std::uint64_t v = table[i] ^ prefix;
        ++hist[static_cast<std::size_t>(std::popcount(v)) * hist_cols +
               static_cast<std::size_t>(std::popcount(v & tmask))];
    }
}

std::uint64_t popcount_words_avx2(const std::uint64_t* words, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        acc = _mm256_add_epi64(acc, popcount64x4(v));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
    return total;
}

std::uint64_t popcount_and_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount64x4(_mm256_and_si256(va, vb)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

const Kernels avx2_impl = {joint_hist_avx2, popcount_words_avx2, popcount_and_avx2,
                           xor_words_avx2, "avx2"};

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const Kernels& avx2_kernels() {
    if (!avx2_available()) throw std::runtime_error("AVX2 not available on this CPU");
    return avx2_impl;
}

#else

bool avx2_available() { return false; }

const Kernels& avx2_kernels() { throw std::runtime_error("built without AVX2 support"); }

#endif

}  // namespace rmj::kernels
