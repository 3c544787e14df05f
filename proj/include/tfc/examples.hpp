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
#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>

#include "tfc/expression.hpp"
#include "tfc/finite_function.hpp"
#include "tfc/gf4.hpp"
#include "tfc/matrix.hpp"
#include "tfc/multivariate.hpp"
#include "tfc/rng.hpp"
#include "tfc/sampled_function.hpp"
#include "tfc/vec.hpp"

/// The four built-in worked examples, one per codomain flavor. Each comes
/// with its constrained expression, the constraint data needed to re-check
/// it, a seeded generator of admissible free functions, and the reference
/// alpha matrix it must reproduce.
namespace tfc::examples {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// matrix_r2x3: inputs are real 2x3 matrices, outputs live in R^2.
// Constraints: a fixed value at one matrix and equality at two others.
// Supports read the (0,0) and (0,1) entries through bilinear forms.
// ---------------------------------------------------------------------------

struct MatrixExample {
    ConstrainedExpression<Matrix<double>, Vec2r, double> expression;
    Matrix<double> value_point;
    Vec2r value_target;
    Matrix<double> relative_left;
    Matrix<double> relative_right;
};

MatrixExample build_matrix_example();
Matrix<double> matrix_expected_alpha();

/// Random affine map from 2x3 matrices to R^2 (weights and biases uniform
/// in [-5, 5]).
std::function<Vec2r(const Matrix<double>&)> random_matrix_free_function(Rng& rng);

/// Random 2x3 evaluation point, entries uniform in [-10, 10].
Matrix<double> random_matrix_point(Rng& rng);

// ---------------------------------------------------------------------------
// string_c2: inputs are lowercase words, outputs live in C^2.
// The second support encodes a word with two ciphers and adds the results.
// ---------------------------------------------------------------------------

/// Cipher 1: a -> 1, b -> 2, ..., z -> 26, summed over every character.
/// Rejects anything outside a-z.
int alphabet_position_sum(std::string_view word);

/// Cipher 2: each character with cipher-1 number k contributes i^k; summed.
Complex unit_power_sum(std::string_view word);

/// cipher1 + cipher2 as one complex number; the second support function.
Complex string_code(std::string_view word);

struct StringExample {
    ConstrainedExpression<std::string, Vec2c, Complex> expression;
    std::string value_point;
    Vec2c value_target;
    std::string relative_left;
    std::string relative_right;
};

StringExample build_string_example();

/// Reference alpha quoted to four decimal places.
Matrix<Complex> string_expected_alpha_rounded();

/// Same alpha from the closed-form inverse of the upper-triangular support
/// matrix; an independent route to compare elimination against.
Matrix<Complex> string_expected_alpha_exact();

/// Random map built from the two ciphers with random complex coefficients,
/// including a cipher-product term so it is not affine in the codes.
std::function<Vec2c(const std::string&)> random_string_free_function(Rng& rng);

/// Random lowercase word, length 1..10.
std::string random_word(Rng& rng);

// ---------------------------------------------------------------------------
// gf4: inputs are GF(4) elements, outputs are functions GF(4) -> GF(4).
// Output tables are written in terms of the codomain variable t.
// ---------------------------------------------------------------------------

struct Gf4Example {
    ConstrainedExpression<GF4, Gf4Function, GF4> expression;
    GF4 value_point;             // u(value_point) = value_target
    Gf4Function value_target;    // the table for t + A
    GF4 difference_left;         // u(left) - u(right) = difference_target
    GF4 difference_right;
    Gf4Function difference_target;  // the identity table for t
};

Gf4Example build_gf4_example();
Matrix<GF4> gf4_expected_alpha();

/// Random lookup table GF(4) -> (GF(4) -> GF(4)), every entry uniform.
std::function<Gf4Function(const GF4&)> random_gf4_free_function(Rng& rng);

// ---------------------------------------------------------------------------
// multivariate: inputs are (x, y) in R^2, outputs are functions of t.
// Dimension 0 pins u at x = 0 and balances a four-point sum; dimension 1
// pins u at y = 1. Both value targets are sin(t).
// ---------------------------------------------------------------------------

using BivariateCoords = std::tuple<double, double>;
using BivariateFreeFunction = std::function<SampledFunction(const BivariateCoords&)>;
using BivariateExpression = MultivariateExpression<SampledFunction, double, double, double>;

struct BivariateExample {
    BivariateExpression expression;
    // The dimension descriptions the expression was built from, kept around
    // so callers can re-derive switching functions and check duality.
    Dimension<0, SampledFunction, double, double, double> dim_x;
    Dimension<1, SampledFunction, double, double, double> dim_y;
    double x_value_point = 0.0;  // u(0, y) = sine for every y
    std::array<double, 2> x_sum_plus{1.0, 2.0};   // u(1,y) + u(2,y) ...
    std::array<double, 2> x_sum_minus{5.0, 4.0};  // ... = u(5,y) + u(4,y)
    double y_value_point = 1.0;  // u(x, 1) = sine for every x
};

BivariateExample build_bivariate_example();
Matrix<double> bivariate_expected_alpha_x();
Matrix<double> bivariate_expected_alpha_y();

SampledFunction sine_function();

/// The fully expanded form of the composed expression, evaluated directly
/// from g without going through the engine; the oracle the recursive
/// composition is checked against.
SampledFunction bivariate_closed_form(double x, double y, const BivariateFreeFunction& g);

/// Random free function: a degree-4 polynomial in t whose coefficients are
/// bilinear in (x, y), all base coefficients uniform in [-5, 5].
BivariateFreeFunction random_bivariate_free_function(Rng& rng);

}  // namespace tfc::examples
