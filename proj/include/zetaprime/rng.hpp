// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace zetaprime {

// splitmix64; used to derive independent child seeds so that sample k of an
// ensemble is a pure function of (seed, k) regardless of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x51ed2700d1ce4e5bULL));
}

// Uniform on [0, 1). mt19937_64 keeps draws portable across platforms; the
// explicit mapping avoids std::uniform_real_distribution, whose output is
// implementation defined.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

} // namespace zetaprime
