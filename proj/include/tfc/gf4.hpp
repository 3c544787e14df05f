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

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>

#include "tfc/errors.hpp"
#include "tfc/field.hpp"

namespace tfc {

/// The four-element field {0, 1, A, B}, characteristic 2.
///
/// Arithmetic is table-driven; the tables are the definition, not an
/// optimization of some polynomial construction. Addition and multiplication
/// are commutative, x + x = 0 for every x, and A and B are each other's
/// multiplicative inverses.
class GF4 {
public:
    static constexpr std::size_t order = 4;

    constexpr GF4() = default;

    static constexpr GF4 zero() { return GF4(0); }
    static constexpr GF4 one() { return GF4(1); }
    static constexpr GF4 a() { return GF4(2); }
    static constexpr GF4 b() { return GF4(3); }

    static constexpr GF4 from_index(std::size_t i) {
        return GF4(static_cast<std::uint8_t>(i & 3u));
    }
    constexpr std::size_t index() const { return v_; }

    static constexpr std::array<GF4, 4> elements() {
        return {zero(), one(), a(), b()};
    }

    char symbol() const { return "01AB"[v_]; }

    friend constexpr GF4 operator+(GF4 x, GF4 y) {
        return GF4(kAdd[x.v_][y.v_]);
    }
    friend constexpr GF4 operator*(GF4 x, GF4 y) {
        return GF4(kMul[x.v_][y.v_]);
    }
    // Characteristic 2: every element is its own additive inverse.
    constexpr GF4 operator-() const { return *this; }
    friend constexpr GF4 operator-(GF4 x, GF4 y) { return x + (-y); }

    friend constexpr bool operator==(GF4, GF4) = default;

    friend std::ostream& operator<<(std::ostream& os, GF4 x) {
        return os << x.symbol();
    }

private:
    explicit constexpr GF4(std::uint8_t v) : v_(v) {}

    // Rows/columns indexed 0, 1, A, B.
    static constexpr std::uint8_t kAdd[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    static constexpr std::uint8_t kMul[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };

    std::uint8_t v_ = 0;
};

template <>
struct field_traits<GF4> {
    static constexpr bool exact = true;
    static constexpr GF4 zero() { return GF4::zero(); }
    static constexpr GF4 one() { return GF4::one(); }
    static GF4 invert(GF4 x) {
        if (x == GF4::zero())
            throw ZeroInverseError("invert: zero has no inverse in GF(4)");
        // Scan the multiplication row; four candidates at most.
        for (GF4 y : GF4::elements())
            if (x * y == GF4::one()) return y;
        throw ZeroInverseError("invert: GF(4) element has no inverse");
    }
    static bool equals(GF4 x, GF4 y, double /*tol*/ = 0.0) { return x == y; }
    static GF4 sample(Rng& rng) { return GF4::from_index(rng.below(4)); }
};

static_assert(Field<GF4>);
static_assert(!ApproximateField<GF4>);
static_assert(ApproximateField<double>);

}  // namespace tfc
