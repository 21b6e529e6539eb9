#include "rmj/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace rmj::kernels {

namespace {

void joint_hist_scalar(const std::uint64_t* table, std::size_t count, std::uint64_t prefix,
                       std::uint64_t tmask, std::size_t hist_cols, std::uint64_t* hist) {
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t v = table[i] ^ prefix;
        const unsigned wt = static_cast<unsigned>(std::popcount(v));
        const unsigned wit = static_cast<unsigned>(std::popcount(v & tmask));
        ++hist[wt * hist_cols + wit];
    }
}

std::uint64_t popcount_words_scalar(const std::uint64_t* words, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
    return total;
}

std::uint64_t popcount_and_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::atomic<const Kernels*> g_active{nullptr};
std::atomic<Backend> g_selected{Backend::Auto};

const Kernels* pick_default() {
    if (avx2_available()) return &avx2_kernels();
    return &scalar_kernels;
}

}  // namespace

const Kernels scalar_kernels = {joint_hist_scalar, popcount_words_scalar, popcount_and_scalar,
                                xor_words_scalar, "scalar"};

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (!k) {
        k = pick_default();
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

void force_backend(Backend b) {
    switch (b) {
        case Backend::Auto:
            g_active.store(pick_default(), std::memory_order_release);
            break;
        case Backend::Scalar:
            g_active.store(&scalar_kernels, std::memory_order_release);
            break;
        case Backend::Avx2:
            if (!avx2_available()) throw std::runtime_error("AVX2 not available on this CPU");
            g_active.store(&avx2_kernels(), std::memory_order_release);
            break;
    }
    g_selected.store(b, std::memory_order_release);
}

Backend selected_backend() { return g_selected.load(std::memory_order_acquire); }

}  // namespace rmj::kernels
