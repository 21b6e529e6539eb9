#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "rmj/errors.hpp"

namespace rmj {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow2(unsigned e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "14", "-3", or "p/q" with q > 0.
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();  // mpq_class prints n or n/d, canonical
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Binomial clamped into uint64 for cap checks; saturates instead of overflowing.
inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
    Int b = binomial(n, k);
    if (!b.fits_ulong_p()) return UINT64_MAX;
    return b.get_ui();
}

}  // namespace rmj
