/*
 * Copyright 2026 The tfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

namespace tfc {

/// Seeded deterministic random source.
///
/// All draws go through mt19937_64 plus fixed integer mappings, never through
/// std::*_distribution, so a given seed produces the same stream on every
/// platform and standard library. Reports quote Rng::kAlgorithm so readers
/// can tell which stream a run used.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64/u53";

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [lo, hi), built from the top 53 bits.
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

    /// Uniform index in [0, n). Plain modulo; bias is zero whenever n divides
    /// 2^64 (all uses here are n = 4) and irrelevant for coverage otherwise.
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(gen_() % n);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace tfc
