#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "rmj/kernels.hpp"

using namespace rmj::kernels;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = rng();
    return w;
}

void reference_joint_hist(const std::vector<std::uint64_t>& table, std::uint64_t prefix,
                          std::uint64_t tmask, std::size_t cols, std::vector<std::uint64_t>& hist) {
    for (auto t : table) {
        const std::uint64_t v = t ^ prefix;
        ++hist[static_cast<std::size_t>(std::popcount(v)) * cols +
               static_cast<std::size_t>(std::popcount(v & tmask))];
    }
}

}  // namespace

TEST_CASE("scalar joint histogram matches a per-element reference") {
    std::mt19937_64 rng(7);
    for (std::size_t size : {0u, 1u, 3u, 4u, 5u, 63u, 64u, 65u, 1000u}) {
        const auto table = random_words(size, rng);
        const std::uint64_t prefix = rng(), tmask = rng() & 0xff;
        const std::size_t cols = static_cast<std::size_t>(std::popcount(tmask)) + 1;
        std::vector<std::uint64_t> expect(65 * cols, 0), got(65 * cols, 0);
        reference_joint_hist(table, prefix, tmask, cols, expect);
        scalar_kernels.joint_hist(table.data(), table.size(), prefix, tmask, cols, got.data());
        CHECK(expect == got);
    }
}

TEST_CASE("AVX2 kernels agree with the scalar reference on random input") {
    if (!avx2_available()) return;  // nothing to compare on this machine
    const Kernels& avx2 = avx2_kernels();
    std::mt19937_64 rng(11);

    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t size = static_cast<std::size_t>(rng() % 300);
        const auto table = random_words(size, rng);
        const std::uint64_t prefix = rng();
        const std::uint64_t tmask = rng() & ((trial % 2) ? ~0ull : 0x1full);
        const std::size_t cols = static_cast<std::size_t>(std::popcount(tmask)) + 1;

        std::vector<std::uint64_t> h_scalar(65 * cols, 0), h_avx2(65 * cols, 0);
        scalar_kernels.joint_hist(table.data(), size, prefix, tmask, cols, h_scalar.data());
        avx2.joint_hist(table.data(), size, prefix, tmask, cols, h_avx2.data());
        CHECK(h_scalar == h_avx2);

        CHECK(scalar_kernels.popcount_words(table.data(), size) ==
              avx2.popcount_words(table.data(), size));

        const auto other = random_words(size, rng);
        CHECK(scalar_kernels.popcount_and(table.data(), other.data(), size) ==
              avx2.popcount_and(table.data(), other.data(), size));

        auto a = table, b = table;
        scalar_kernels.xor_words(a.data(), other.data(), size);
        avx2.xor_words(b.data(), other.data(), size);
        CHECK(a == b);
    }
}

TEST_CASE("backend forcing switches the active kernel set") {
    const Kernels& initial = active();
    CHECK(initial.joint_hist != nullptr);
    force_backend(Backend::Scalar);
    CHECK(std::string(active().name) == "scalar");
    if (avx2_available()) {
        force_backend(Backend::Avx2);
        CHECK(std::string(active().name) == "avx2");
    }
    force_backend(Backend::Auto);
}
