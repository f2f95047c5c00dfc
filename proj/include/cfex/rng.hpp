#pragma once

#include <cstdint>
#include <random>

namespace cfex {

/// std::mt19937_64 output is pinned by the standard, but the standard
/// distributions are not; these helpers keep every drawn value identical
/// across toolchains.

/// Uniform draw from [0, n) via 128-bit multiply-shift.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(gen()) * static_cast<unsigned __int128>(n)) >> 64);
}

/// splitmix64 finalizer; decorrelates sequential seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace cfex
