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

#include <cmath>
#include <complex>
#include <concepts>
#include <type_traits>

#include "tfc/errors.hpp"
#include "tfc/rng.hpp"

namespace tfc {

/// Magnitudes at or below this are treated as zero when an inverse or a
/// pivot is needed in an approximate field.
inline constexpr double kSingularityTolerance = 1e-12;

/// Default comparison tolerance for approximate fields. Exact fields compare
/// exactly and ignore tolerances entirely.
inline constexpr double kDefaultTolerance = 1e-9;

/// Per-field operations that do not fit on the element type itself.
///
/// A specialization provides:
///   static constexpr bool exact;
///   static F zero(); static F one();
///   static F invert(const F&);               // throws ZeroInverseError
///   static bool equals(const F&, const F&, double tol);
///   static F sample(Rng&);                   // uniform-ish element draw
/// and, for approximate fields only:
///   static double pivot_magnitude(const F&);
template <typename F>
struct field_traits;

template <>
struct field_traits<double> {
    static constexpr bool exact = false;
    static constexpr double zero() { return 0.0; }
    static constexpr double one() { return 1.0; }
    static double invert(double a) {
        if (std::abs(a) <= kSingularityTolerance)
            throw ZeroInverseError("invert: real value is (numerically) zero");
        return 1.0 / a;
    }
    static bool equals(double a, double b, double tol = kDefaultTolerance) {
        return std::abs(a - b) <= tol;
    }
    static double pivot_magnitude(double a) { return std::abs(a); }
    static double sample(Rng& rng) { return rng.uniform(-10.0, 10.0); }
};

template <>
struct field_traits<std::complex<double>> {
    using C = std::complex<double>;
    static constexpr bool exact = false;
    static C zero() { return {0.0, 0.0}; }
    static C one() { return {1.0, 0.0}; }
    static C invert(const C& z) {
        if (std::abs(z) <= kSingularityTolerance)
            throw ZeroInverseError("invert: complex value is (numerically) zero");
        const double d = z.real() * z.real() + z.imag() * z.imag();
        return {z.real() / d, -z.imag() / d};
    }
    static bool equals(const C& a, const C& b, double tol = kDefaultTolerance) {
        return std::abs(a - b) <= tol;
    }
    static double pivot_magnitude(const C& z) { return std::abs(z); }
    static C sample(Rng& rng) {
        // Real part first, then imaginary, each uniform in [-10, 10].
        const double re = rng.uniform(-10.0, 10.0);
        const double im = rng.uniform(-10.0, 10.0);
        return {re, im};
    }
};

/// A scalar type usable as the field of a vector space: arithmetic via
/// operators, identities and inversion via field_traits.
template <typename F>
concept Field = requires(const F& a, const F& b) {
    { field_traits<F>::zero() } -> std::convertible_to<F>;
    { field_traits<F>::one() } -> std::convertible_to<F>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { field_traits<F>::invert(a) } -> std::convertible_to<F>;
    { field_traits<F>::equals(a, b) } -> std::same_as<bool>;
};

/// Approximate fields expose a pivot magnitude; exact fields do not.
template <typename F>
concept ApproximateField =
    Field<F> && requires(const F& a) {
        { field_traits<F>::pivot_magnitude(a) } -> std::convertible_to<double>;
    };

/// Elements of V under a scalar field F: the only structure the constrained
/// expression algorithm needs from its codomain.
template <typename V, typename F>
concept VectorOver = Field<F> && requires(const V& u, const V& v, const F& c) {
    { u + v } -> std::convertible_to<V>;
    { u - v } -> std::convertible_to<V>;
    { -u } -> std::convertible_to<V>;
    { c * u } -> std::convertible_to<V>;
};

/// scalar_multiply(c, v) + w in one call; the shape of every term the
/// constrained expression accumulates.
template <typename F, typename V>
    requires VectorOver<V, F>
V axpy(const F& c, const V& v, const V& w) {
    return c * v + w;
}

/// Distance between two field elements: magnitude of the difference for
/// approximate fields, 0/1 for exact ones.
template <Field F>
double deviation(const F& a, const F& b) {
    if constexpr (ApproximateField<F>) {
        return field_traits<F>::pivot_magnitude(a - b);
    } else {
        return field_traits<F>::equals(a, b) ? 0.0 : 1.0;
    }
}

/// Uniform closeness test across every value the engine handles. Each
/// concrete type supplies a deviation() overload; exact types report 0 or 1,
/// so exact equality is required there no matter the tolerance.
template <typename V>
bool equals_within(const V& u, const V& v, double tol = kDefaultTolerance) {
    return deviation(u, v) <= tol;
}

template <Field F>
F zero_like(const F&) {
    return field_traits<F>::zero();
}

template <Field F>
F random_like(Rng& rng, const F&) {
    return field_traits<F>::sample(rng);
}

}  // namespace tfc
