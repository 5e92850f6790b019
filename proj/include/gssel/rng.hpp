#pragma once

#include <cstdint>
#include <random>

namespace gssel {

/// 64-bit mix function (the SplitMix64 output stage). Used to spread a
/// (seed, index) pair into a well-distributed engine seed so neighbouring
/// indices do not yield correlated streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Independent deterministic substream for the index-th instance of a run.
/// mt19937_64 is fully specified by the standard, so streams are identical
/// across platforms and compilers.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed + index));
}

/// Uniform draw from the open interval (0, 1): the top 53 bits of the
/// engine output scaled by 2^-53 (exact in double), redrawing the one
/// pattern that maps to 0. Distribution classes from <random> are not
/// pinned down by the standard, so this is hand-rolled to keep generated
/// data byte-identical everywhere.
inline double uniform_open01(std::mt19937_64& gen) {
    for (;;) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        if (u > 0.0) {
            return u;
        }
    }
}

/// Uniform draw from the open interval (lo, hi).
inline double uniform_open(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_open01(gen);
}

}  // namespace gssel
