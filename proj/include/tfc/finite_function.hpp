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
#include <concepts>
#include <cstddef>
#include <ostream>

#include "tfc/field.hpp"
#include "tfc/gf4.hpp"

namespace tfc {

/// An enumerable input set: a fixed element count plus an index bijection.
template <typename K>
concept FiniteDomain = requires(const K& k) {
    { K::order } -> std::convertible_to<std::size_t>;
    { k.index() } -> std::convertible_to<std::size_t>;
    { K::from_index(std::size_t{}) } -> std::convertible_to<K>;
};

/// A function from a finite domain into a field, stored as its full value
/// table. These form a vector space under pointwise operations; equality is
/// exact entrywise equality.
template <FiniteDomain K, Field F>
class FiniteFunction {
public:
    FiniteFunction() = default;  // the zero function

    static FiniteFunction from_values(std::array<F, K::order> values) {
        FiniteFunction f;
        f.values_ = values;
        return f;
    }

    template <std::invocable<K> Fn>
    static FiniteFunction tabulate(Fn&& fn) {
        FiniteFunction f;
        for (std::size_t i = 0; i < K::order; ++i)
            f.values_[i] = fn(K::from_index(i));
        return f;
    }

    F operator()(const K& k) const { return values_[k.index()]; }
    const std::array<F, K::order>& values() const { return values_; }

    friend FiniteFunction operator+(const FiniteFunction& u, const FiniteFunction& v) {
        FiniteFunction r;
        for (std::size_t i = 0; i < K::order; ++i)
            r.values_[i] = u.values_[i] + v.values_[i];
        return r;
    }
    friend FiniteFunction operator-(const FiniteFunction& u, const FiniteFunction& v) {
        FiniteFunction r;
        for (std::size_t i = 0; i < K::order; ++i)
            r.values_[i] = u.values_[i] - v.values_[i];
        return r;
    }
    FiniteFunction operator-() const {
        FiniteFunction r;
        for (std::size_t i = 0; i < K::order; ++i) r.values_[i] = -values_[i];
        return r;
    }
    friend FiniteFunction operator*(const F& s, const FiniteFunction& f) {
        FiniteFunction r;
        for (std::size_t i = 0; i < K::order; ++i) r.values_[i] = s * f.values_[i];
        return r;
    }

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

private:
    std::array<F, K::order> values_{};
};

/// The codomain of the finite-field example: tables GF(4) -> GF(4).
using Gf4Function = FiniteFunction<GF4, GF4>;

template <FiniteDomain K, Field F>
double deviation(const FiniteFunction<K, F>& u, const FiniteFunction<K, F>& v) {
    double worst = 0.0;
    for (std::size_t i = 0; i < K::order; ++i)
        worst = std::max(worst, deviation(u.values()[i], v.values()[i]));
    return worst;
}

template <FiniteDomain K, Field F>
FiniteFunction<K, F> zero_like(const FiniteFunction<K, F>&) {
    return {};
}

template <FiniteDomain K, Field F>
FiniteFunction<K, F> random_like(Rng& rng, const FiniteFunction<K, F>&) {
    return FiniteFunction<K, F>::tabulate(
        [&rng](const K&) { return field_traits<F>::sample(rng); });
}

inline std::ostream& operator<<(std::ostream& os, const Gf4Function& f) {
    os << '[';
    for (std::size_t i = 0; i < GF4::order; ++i) {
        if (i) os << ", ";
        os << f.values()[i];
    }
    return os << ']';
}

}  // namespace tfc
