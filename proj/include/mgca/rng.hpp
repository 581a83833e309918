// SPDX-License-Identifier: Apache-2.0

#ifndef MGCA_RNG_HPP
#define MGCA_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mgca {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Sub-seed for a stream identified by a master seed and a path of indices.
/// Folding is order-sensitive: derive_seed(s, {1, 2}) != derive_seed(s, {2, 1}).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t h = mix64(master);
    for (std::uint64_t v : path) {
        h = mix64(h ^ mix64(v + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

// Stream tags so that scenario geometry and fading never share a stream.
inline constexpr std::uint64_t kGeometryStream = 0x6E6F646573ULL;
inline constexpr std::uint64_t kFadingStream = 0x666164696E67ULL;

}  // namespace mgca

#endif  // MGCA_RNG_HPP
