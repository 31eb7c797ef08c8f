#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cds::util {

/// Uniform draw in [0, bound) without std::uniform_int_distribution, whose
/// output sequence is implementation-defined. Rejection keeps it unbiased.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform double in [-1, 1). 53 random mantissa bits.
inline double uniform_signed_unit(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    return 2.0 * u - 1.0;
}

/// Fisher-Yates with explicit draws so the permutation sequence is identical
/// on every platform for a given seed.
inline std::vector<std::size_t> shuffled_identity(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

} // namespace cds::util
