#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmj/rational.hpp"

namespace rmj {

enum class Method { DirectCount, Delsarte, JacobiCoeff };

const char* method_name(Method m);

// Outcome of a t-design test. Exactly one of {lambda, witness-ish fields} is
// meaningful: is_design <=> lambda present and no witness.
struct DesignReport {
    bool is_design = false;
    int t = 0;
    Method method = Method::DirectCount;
    std::optional<Rat> lambda;

    // Two t-subsets with different coverage / Jacobi coefficient.
    struct Witness {
        std::vector<std::uint32_t> low, high;
        Rat low_count, high_count;
    };
    std::optional<Witness> witness;

    // Delsarte failure: (degree k, basis index) of the first nonzero sum.
    std::optional<std::pair<int, int>> harmonic_witness;

    std::string note;  // "vacuous: empty block set", "sampled", ...

    // {"design":bool,"t":t,"lambda":...|null,"witnesses":[T1,T2]|null}
    std::string to_json() const;
};

}  // namespace rmj
