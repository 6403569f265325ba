// Copyright 2026 The pqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PQAOA_RANDOM_H
#define PQAOA_RANDOM_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pqaoa {

// std::mt19937_64 output is fully specified by the standard, but the standard
// distributions are not. These helpers map raw engine output to values the same
// way on every platform so seeded runs are bit-reproducible.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Mixes a master seed with task coordinates into an independent stream seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t p : path) {
        h = splitmix64(h ^ splitmix64(p + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be > 0.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace pqaoa

#endif
