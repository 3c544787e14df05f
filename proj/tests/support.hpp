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

#include <doctest.h>

#include <algorithm>
#include <string>

#include "tfc/field.hpp"
#include "tfc/rng.hpp"

namespace tfc::test {

/// Vector-space laws checked on seeded random triples. `tol` is 0 for exact
/// spaces. The exemplar fixes the shape (matrix dims, probe grids).
template <typename V, Field F>
void check_vector_space_laws(Rng& rng, const V& exemplar, double tol, int samples) {
    double worst = 0.0;
    auto record = [&worst](double d) { worst = std::max(worst, d); };
    for (int s = 0; s < samples; ++s) {
        const V u = random_like(rng, exemplar);
        const V v = random_like(rng, exemplar);
        const V w = random_like(rng, exemplar);
        const F c = field_traits<F>::sample(rng);
        const F d = field_traits<F>::sample(rng);
        const V zero = zero_like(exemplar);

        record(deviation((u + v) + w, u + (v + w)));      // associativity
        record(deviation(u + v, v + u));                  // commutativity
        record(deviation(u + zero, u));                   // identity
        record(deviation(u + (-u), zero));                // inverses
        record(deviation(c * (u + v), c * u + c * v));    // distributes over +v
        record(deviation((c + d) * u, c * u + d * u));    // distributes over +c
        record(deviation((c * d) * u, c * (d * u)));      // scalar compatibility
        record(deviation(field_traits<F>::one() * u, u));  // unit scalar
    }
    CHECK(worst <= tol);
}

}  // namespace tfc::test
