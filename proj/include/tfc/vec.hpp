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

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

#include "tfc/field.hpp"

namespace tfc {

/// Fixed-length coordinate tuple over a field. Size mismatches are
/// impossible by construction, so all operations are total.
template <Field F, std::size_t N>
struct Vec {
    std::array<F, N> c{};

    static constexpr Vec zero() { return Vec{}; }

    constexpr F& operator[](std::size_t i) { return c[i]; }
    constexpr const F& operator[](std::size_t i) const { return c[i]; }
    static constexpr std::size_t size() { return N; }

    friend Vec operator+(const Vec& u, const Vec& v) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = u.c[i] + v.c[i];
        return r;
    }
    friend Vec operator-(const Vec& u, const Vec& v) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = u.c[i] - v.c[i];
        return r;
    }
    Vec operator-() const {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = -c[i];
        return r;
    }
    friend Vec operator*(const F& s, const Vec& v) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = s * v.c[i];
        return r;
    }
};

using Vec2r = Vec<double, 2>;
using Vec2c = Vec<std::complex<double>, 2>;

template <Field F, std::size_t N>
double deviation(const Vec<F, N>& u, const Vec<F, N>& v) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        worst = std::max(worst, deviation(u.c[i], v.c[i]));
    return worst;
}

template <Field F, std::size_t N>
Vec<F, N> zero_like(const Vec<F, N>&) {
    return Vec<F, N>::zero();
}

template <Field F, std::size_t N>
Vec<F, N> random_like(Rng& rng, const Vec<F, N>&) {
    Vec<F, N> r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = field_traits<F>::sample(rng);
    return r;
}

}  // namespace tfc
