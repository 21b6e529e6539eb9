#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace rmj {

// Visits all k-subsets of {0,...,n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::uint32_t n, std::uint32_t k, F&& fn) {
    if (k > n) return;
    std::vector<std::uint32_t> s(k);
    for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::uint32_t>&>(s));
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && s[static_cast<std::uint32_t>(i)] == n - k + static_cast<std::uint32_t>(i))
            --i;
        if (i < 0) return;
        ++s[static_cast<std::uint32_t>(i)];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

// Uniform random sorted k-subset of {0,...,n-1} (Floyd's algorithm).
inline std::vector<std::uint32_t> random_subset(std::uint32_t n, std::uint32_t k,
                                                std::mt19937_64& rng) {
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::uint32_t j = n - k; j < n; ++j) {
        std::uniform_int_distribution<std::uint32_t> dist(0, j);
        const std::uint32_t v = dist(rng);
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
        else
            out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rmj
