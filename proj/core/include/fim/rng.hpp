#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace fim {

// Counter-based random stream. Every draw is a pure function of the key
// words fed into the mixer, so results do not depend on evaluation order
// or on how work is split across threads.

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ b);
}

// Uniform in (0,1]: never returns 0 so it is safe under log().
inline double uniform_open0(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Uniform in [0,1).
inline double uniform_closed0(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct NormalPair {
    double z1;
    double z2;
};

// Two standard normals keyed by an arbitrary 64-bit word (Box-Muller).
inline NormalPair normal_pair(std::uint64_t key) {
    const double u1 = uniform_open0(mix64(key, 0x6b79426d754c6cf5ULL));
    const double u2 = uniform_closed0(mix64(key, 0x51c64eab4e9755d1ULL));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace fim
