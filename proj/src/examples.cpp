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

#include "tfc/examples.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace tfc::examples {

// ---------------------------------------------------------------------------
// matrix_r2x3
// ---------------------------------------------------------------------------

namespace {

SupportFunction<Matrix<double>, double> entry_support(std::size_t col, std::string label) {
    std::vector<double> row = {1.0, 0.0};
    std::vector<double> sel = {0.0, 0.0, 0.0};
    sel[col] = 1.0;
    return {[row, sel](const Matrix<double>& x) {
                return bilinear_form<double>(row, x, sel);
            },
            std::move(label)};
}

}  // namespace

MatrixExample build_matrix_example() {
    auto value_point = Matrix<double>::from_rows({{1, 3, 5}, {2, 4, 7}});
    auto relative_left = Matrix<double>::from_rows({{1, 0, 1}, {0, 1, 0}});
    auto relative_right = Matrix<double>::from_rows({{0, 0, 1}, {1, 0, 0}});
    Vec2r value_target{{3.0, 4.0}};

    using C = LinearConstraint<Matrix<double>, Vec2r, double>;
    std::vector<C> constraints = {
        C::value_at(value_point, value_target, "u(P) = {3, 4}"),
        C::relative(relative_left, relative_right, Vec2r::zero(), "u(Q1) = u(Q2)"),
    };
    std::vector<SupportFunction<Matrix<double>, double>> supports = {
        entry_support(0, "x(0,0)"),
        entry_support(1, "x(0,1)"),
    };
    return {build_expression(std::move(constraints), std::move(supports)),
            value_point, value_target, relative_left, relative_right};
}

Matrix<double> matrix_expected_alpha() {
    return Matrix<double>::from_rows({{0.0, 1.0}, {1.0 / 3.0, -1.0 / 3.0}});
}

std::function<Vec2r(const Matrix<double>&)> random_matrix_free_function(Rng& rng) {
    // Two output coordinates, each an affine functional of the six entries.
    std::array<double, 2> bias{};
    std::array<std::array<double, 6>, 2> weights{};
    for (std::size_t k = 0; k < 2; ++k) {
        bias[k] = rng.uniform(-5.0, 5.0);
        for (std::size_t e = 0; e < 6; ++e) weights[k][e] = rng.uniform(-5.0, 5.0);
    }
    return [bias, weights](const Matrix<double>& x) {
        Vec2r out;
        for (std::size_t k = 0; k < 2; ++k) {
            double acc = bias[k];
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 3; ++j) acc += weights[k][3 * i + j] * x(i, j);
            out[k] = acc;
        }
        return out;
    };
}

Matrix<double> random_matrix_point(Rng& rng) {
    return random_like(rng, Matrix<double>(2, 3));
}

// ---------------------------------------------------------------------------
// string_c2
// ---------------------------------------------------------------------------

int alphabet_position_sum(std::string_view word) {
    int sum = 0;
    for (char ch : word) {
        if (ch < 'a' || ch > 'z')
            throw InvalidInputError("string inputs must use only lowercase a-z, got '" +
                                    std::string(1, ch) + "'");
        sum += ch - 'a' + 1;
    }
    return sum;
}

Complex unit_power_sum(std::string_view word) {
    Complex sum{0.0, 0.0};
    for (char ch : word) {
        if (ch < 'a' || ch > 'z')
            throw InvalidInputError("string inputs must use only lowercase a-z, got '" +
                                    std::string(1, ch) + "'");
        switch ((ch - 'a' + 1) % 4) {  // i^k cycles i, -1, -i, 1
            case 1: sum += Complex{0.0, 1.0}; break;
            case 2: sum += Complex{-1.0, 0.0}; break;
            case 3: sum += Complex{0.0, -1.0}; break;
            default: sum += Complex{1.0, 0.0}; break;
        }
    }
    return sum;
}

Complex string_code(std::string_view word) {
    return Complex(static_cast<double>(alphabet_position_sum(word)), 0.0) +
           unit_power_sum(word);
}

StringExample build_string_example() {
    Vec2c value_target{{Complex{0.0, 42.0}, Complex{19.0, 79.0}}};

    using C = LinearConstraint<std::string, Vec2c, Complex>;
    std::vector<C> constraints = {
        C::value_at("tfc", value_target, "u(\"tfc\") = {42i, 19+79i}"),
        C::relative("dont", "panic", Vec2c::zero(), "u(\"dont\") = u(\"panic\")"),
    };
    std::vector<SupportFunction<std::string, Complex>> supports = {
        {[](const std::string&) { return Complex{4.0, 2.0}; }, "4+2i"},
        {[](const std::string& w) { return string_code(w); }, "string code"},
    };
    return {build_expression(std::move(constraints), std::move(supports)),
            "tfc", value_target, "dont", "panic"};
}

Matrix<Complex> string_expected_alpha_rounded() {
    return Matrix<Complex>::from_rows({
        {Complex{0.2, -0.1}, Complex{-0.5512, 0.1816}},
        {Complex{0.0, 0.0}, Complex{0.088, 0.016}},
    });
}

Matrix<Complex> string_expected_alpha_exact() {
    // Support matrix [[a, b], [0, d]] with a = s1, b = s2("tfc"),
    // d = s2("dont") - s2("panic"); triangular, so the inverse is
    // [[1/a, -b/(a d)], [0, 1/d]].
    const Complex a{4.0, 2.0};
    const Complex b{29.0, -1.0};
    const Complex d{11.0, -2.0};
    return Matrix<Complex>::from_rows({
        {1.0 / a, -b / (a * d)},
        {Complex{0.0, 0.0}, 1.0 / d},
    });
}

std::function<Vec2c(const std::string&)> random_string_free_function(Rng& rng) {
    std::array<std::array<Complex, 4>, 2> coeff{};
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t c = 0; c < 4; ++c)
            coeff[k][c] = field_traits<Complex>::sample(rng);
    return [coeff](const std::string& w) {
        const Complex c1(static_cast<double>(alphabet_position_sum(w)), 0.0);
        const Complex c2 = unit_power_sum(w);
        Vec2c out;
        for (std::size_t k = 0; k < 2; ++k)
            out[k] = coeff[k][0] + coeff[k][1] * c1 + coeff[k][2] * c2 +
                     coeff[k][3] * c1 * c2;
        return out;
    };
}

std::string random_word(Rng& rng) {
    const std::size_t len = 1 + rng.below(10);
    std::string w(len, 'a');
    for (char& ch : w) ch = static_cast<char>('a' + rng.below(26));
    return w;
}

// ---------------------------------------------------------------------------
// gf4
// ---------------------------------------------------------------------------

Gf4Example build_gf4_example() {
    const auto value_target =
        Gf4Function::tabulate([](GF4 t) { return t + GF4::a(); });  // t + A
    const auto identity_table = Gf4Function::tabulate([](GF4 t) { return t; });  // t

    using C = LinearConstraint<GF4, Gf4Function, GF4>;
    std::vector<C> constraints = {
        C::value_at(GF4::one(), value_target, "u(1) = t + A"),
        C({{GF4::one(), GF4::a()}, {-GF4::one(), GF4::b()}}, identity_table,
          "u(A) - u(B) = t"),
    };
    std::vector<SupportFunction<GF4, GF4>> supports = {
        {[](const GF4&) { return GF4::one(); }, "1"},
        {[](const GF4& x) { return x; }, "x"},
    };
    return {build_expression(std::move(constraints), std::move(supports)),
            GF4::one(), value_target, GF4::a(), GF4::b(), identity_table};
}

Matrix<GF4> gf4_expected_alpha() {
    return Matrix<GF4>::from_rows({{GF4::one(), GF4::one()},
                                   {GF4::zero(), GF4::one()}});
}

std::function<Gf4Function(const GF4&)> random_gf4_free_function(Rng& rng) {
    std::array<Gf4Function, 4> tables;
    for (auto& table : tables) table = random_like(rng, Gf4Function{});
    return [tables](const GF4& x) { return tables[x.index()]; };
}

// ---------------------------------------------------------------------------
// multivariate
// ---------------------------------------------------------------------------

SampledFunction sine_function() {
    return SampledFunction([](double t) { return std::sin(t); });
}

BivariateExample build_bivariate_example() {
    using F = double;
    using V = SampledFunction;
    using CX = PartialConstraint<0, V, F, double, double>;
    using CY = PartialConstraint<1, V, F, double, double>;

    BivariateExample ex{
        BivariateExpression({}, {}),  // replaced below
        {},
        {},
    };

    ex.dim_x.constraints.push_back(CX::value_at(
        ex.x_value_point,
        [](const std::tuple<double>&) { return sine_function(); }, "u(0, y) = sin(t)"));
    ex.dim_x.constraints.push_back(
        CX({{1.0, ex.x_sum_plus[0]},
            {1.0, ex.x_sum_plus[1]},
            {-1.0, ex.x_sum_minus[0]},
            {-1.0, ex.x_sum_minus[1]}},
           [](const std::tuple<double>&) { return SampledFunction(); },
           "u(1,y) + u(2,y) = u(5,y) + u(4,y)"));
    ex.dim_x.supports = {{[](const double&) { return 1.0; }, "1"},
                         {[](const double& x) { return x; }, "x"}};

    ex.dim_y.constraints.push_back(CY::value_at(
        ex.y_value_point,
        [](const std::tuple<double>&) { return sine_function(); }, "u(x, 1) = sin(t)"));
    ex.dim_y.supports = {{[](const double&) { return 1.0; }, "1"}};

    ex.expression = build_multivariate(ex.dim_x, ex.dim_y);
    return ex;
}

Matrix<double> bivariate_expected_alpha_x() {
    return Matrix<double>::from_rows({{1.0, 0.0}, {0.0, -1.0 / 6.0}});
}

Matrix<double> bivariate_expected_alpha_y() {
    return Matrix<double>::from_rows({{1.0}});
}

SampledFunction bivariate_closed_form(double x, double y, const BivariateFreeFunction& g) {
    auto at = [&g](double px, double py) { return g(BivariateCoords{px, py}); };
    SampledFunction corner_sum_at_1 =
        at(4, 1) + at(5, 1) - at(1, 1) - at(2, 1);
    SampledFunction corner_sum_at_y =
        at(4, y) + at(5, y) - at(1, y) - at(2, y);
    return at(x, y) + sine_function() - at(x, 1) - at(0, y) + at(0, 1) +
           (x / 6.0) * (corner_sum_at_1 - corner_sum_at_y);
}

BivariateFreeFunction random_bivariate_free_function(Rng& rng) {
    // t-polynomial of degree <= 4; each t-coefficient is a + b*x + c*y + d*x*y.
    std::array<std::array<double, 4>, 5> coeff{};
    for (auto& row : coeff)
        for (double& v : row) v = rng.uniform(-5.0, 5.0);
    return [coeff](const BivariateCoords& p) {
        const double x = std::get<0>(p);
        const double y = std::get<1>(p);
        std::array<double, 5> poly{};
        for (std::size_t j = 0; j < 5; ++j) {
            const auto& c = coeff[j];
            poly[j] = c[0] + c[1] * x + c[2] * y + c[3] * x * y;
        }
        return SampledFunction([poly](double t) {
            double acc = 0.0;
            for (std::size_t j = poly.size(); j-- > 0;) acc = acc * t + poly[j];
            return acc;
        });
    };
}

}  // namespace tfc::examples
