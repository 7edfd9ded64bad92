#pragma once

#include <cstdint>
#include <random>

namespace chromata {

/// Deterministic bounded draw (rejection sampling on mt19937_64, which the
/// standard pins bit-for-bit). std::uniform_int_distribution is
/// implementation-defined, so it never appears in anything seeded.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace chromata
