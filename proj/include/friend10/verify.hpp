#pragma once

#include <cstdint>

#include "friend10/report.hpp"

namespace friend10 {

// verify_ratio_limits for k in {2, 3, 4}, merged.
VerifyReport run_theorem_suite(std::uint64_t omega_max);

// p_n < n(log n + 2 log log n) for n in [4, n_max] and p_n > n for
// n in [1, n_max].
VerifyReport run_rosser_suite(std::uint64_t n_max);

struct PropertyCounts {
    std::uint64_t multiplicativity = 10'000;  // I(mn) == I(m) I(n) for coprime m, n
    std::uint64_t strict_growth = 10'000;     // I(an) > I(n) for a > 1
    std::uint64_t domination = 1'000;         // smaller primes, same exponents => larger index
    std::uint64_t sup_bound = 1'000;          // I(n) strictly below prod p/(p-1)
};

// Randomized exact checks of the index identities; deterministic for a
// given seed.
VerifyReport run_property_suite(std::uint64_t seed, const PropertyCounts& counts = {});

}  // namespace friend10
