// Copyright 2026 The bpinit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Random engine type and derived seeding.
 *
 * Every random quantity in an experiment is drawn from its own engine whose
 * seed is a hash of the master seed and the coordinates of the work item.
 * Results therefore do not depend on which worker thread runs which item.
 *
 * The hash folds each word into a SplitMix64 state:
 *   h_0 = master;  h_{k+1} = splitmix64(h_k ^ splitmix64(word_k + k + 1))
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bpinit {

using Rng = std::mt19937_64;

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

[[nodiscard]] constexpr std::uint64_t
derive_seed(std::uint64_t master,
            std::initializer_list<std::uint64_t> coordinates) noexcept {
    std::uint64_t h = master;
    std::uint64_t k = 0;
    for (const std::uint64_t word : coordinates) {
        ++k;
        h = splitmix64(h ^ splitmix64(word + k));
    }
    return h;
}

/// Stream tags keep structure and parameter draws for the same (q, i) apart.
enum class SeedStream : std::uint64_t {
    CircuitStructure = 0x5354525543ULL,
    Parameters = 0x504152414dULL,
    Training = 0x545241494eULL,
    Landscape = 0x4c414e44ULL,
};

[[nodiscard]] constexpr std::uint64_t stream_word(SeedStream s) noexcept {
    return static_cast<std::uint64_t>(s);
}

} // namespace bpinit
