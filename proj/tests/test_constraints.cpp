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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "tfc/constraint.hpp"
#include "tfc/examples.hpp"
#include "tfc/finite_function.hpp"
#include "tfc/gf4.hpp"
#include "tfc/matrix.hpp"
#include "tfc/vec.hpp"

using Complex = std::complex<double>;
using tfc::GF4;
using tfc::Gf4Function;
using tfc::Matrix;
using tfc::Vec2c;
using tfc::Vec2r;

namespace {

using MatrixConstraint = tfc::LinearConstraint<Matrix<double>, Vec2r, double>;
using StringConstraint = tfc::LinearConstraint<std::string, Vec2c, Complex>;
using Gf4Constraint = tfc::LinearConstraint<GF4, Gf4Function, GF4>;

MatrixConstraint matrix_value_constraint() {
    return MatrixConstraint::value_at(Matrix<double>::from_rows({{1, 3, 5}, {2, 4, 7}}),
                                      Vec2r{{3.0, 4.0}});
}

}  // namespace

TEST_CASE("apply sums coefficient-weighted point evaluations") {
    SUBCASE("entry extractor at the value point") {
        const auto c = matrix_value_constraint();
        // s2 reads entry (0, 1); applying the one-point constraint is just
        // evaluation there.
        const double got = c.apply([](const Matrix<double>& x) { return x(0, 1); });
        CHECK(got == 3.0);
    }
    SUBCASE("relative string constraint applied to the word code") {
        const auto c = StringConstraint::relative("dont", "panic");
        const Complex got =
            c.apply([](const std::string& w) { return tfc::examples::string_code(w); });
        CHECK(tfc::deviation(got, Complex{11.0, -2.0}) == 0.0);
    }
    SUBCASE("any constraint kills the zero function") {
        const auto c = matrix_value_constraint();
        const Vec2r got = c.apply([](const Matrix<double>&) { return Vec2r::zero(); });
        CHECK(tfc::deviation(got, Vec2r::zero()) == 0.0);
    }
}

TEST_CASE("projection is target minus application") {
    SUBCASE("zero free function leaves the target") {
        const auto c = matrix_value_constraint();
        const Vec2r rho = c.projection([](const Matrix<double>&) { return Vec2r::zero(); });
        CHECK(tfc::deviation(rho, Vec2r{{3.0, 4.0}}) == 0.0);
    }
    SUBCASE("gf4 value constraint with zero free function leaves t + A") {
        const auto target = Gf4Function::tabulate([](GF4 t) { return t + GF4::a(); });
        const auto c = Gf4Constraint::value_at(GF4::one(), target);
        const auto rho = c.projection([](const GF4&) { return Gf4Function{}; });
        CHECK(rho == target);
        CHECK(rho == Gf4Function::from_values(
                         {GF4::a(), GF4::b(), GF4::zero(), GF4::one()}));
    }
    SUBCASE("a satisfying free function has zero defect") {
        const auto c = matrix_value_constraint();
        const auto g = [](const Matrix<double>& x) {
            return Vec2r{{x(0, 0) + 2.0, x(0, 1) + 1.0}};  // hits {3,4} at the point
        };
        CHECK(tfc::deviation(c.projection(g), Vec2r::zero()) == 0.0);
    }
    SUBCASE("two-argument form ignores the point") {
        const auto c = matrix_value_constraint();
        auto g = [](const Matrix<double>&) { return Vec2r{{1.0, 1.0}}; };
        CHECK(tfc::deviation(c.projection(Matrix<double>(2, 3), g), c.projection(g)) ==
              0.0);
    }
}

TEST_CASE("constraints require at least one term") {
    CHECK_THROWS_AS(MatrixConstraint({}, Vec2r::zero()), tfc::InvalidInputError);
}

TEST_CASE("relative builder stores +1/-1 coefficients and zero target") {
    const auto c = StringConstraint::relative("dont", "panic");
    REQUIRE(c.terms().size() == 2);
    CHECK(c.terms()[0].coefficient == Complex{1.0, 0.0});
    CHECK(c.terms()[0].point == "dont");
    CHECK(c.terms()[1].coefficient == Complex{-1.0, 0.0});
    CHECK(c.terms()[1].point == "panic");
    CHECK(tfc::deviation(c.target(), Vec2c::zero()) == 0.0);
}

TEST_CASE("linearity: C[c*f + h] = c*C[f] + C[h]") {
    tfc::Rng rng(5);
    const auto c = matrix_value_constraint();
    const auto rel = MatrixConstraint::relative(
        Matrix<double>::from_rows({{1, 0, 1}, {0, 1, 0}}),
        Matrix<double>::from_rows({{0, 0, 1}, {1, 0, 0}}));
    double worst = 0.0;
    for (int s = 0; s < 120; ++s) {
        const auto f = tfc::examples::random_matrix_free_function(rng);
        const auto h = tfc::examples::random_matrix_free_function(rng);
        const double scale = rng.uniform(-10.0, 10.0);
        const auto combo = [&](const Matrix<double>& x) { return scale * f(x) + h(x); };
        for (const auto* constraint : {&c, &rel}) {
            const Vec2r lhs = constraint->apply(combo);
            const Vec2r rhs = scale * constraint->apply(f) + constraint->apply(h);
            worst = std::max(worst, tfc::deviation(lhs, rhs));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("linearity over gf4, exact") {
    tfc::Rng rng(6);
    const auto c = Gf4Constraint(
        {{GF4::one(), GF4::a()}, {-GF4::one(), GF4::b()}},
        Gf4Function::tabulate([](GF4 t) { return t; }));
    for (int s = 0; s < 120; ++s) {
        const auto f = tfc::examples::random_gf4_free_function(rng);
        const auto h = tfc::examples::random_gf4_free_function(rng);
        const GF4 scale = tfc::field_traits<GF4>::sample(rng);
        const auto combo = [&](const GF4& x) { return scale * f(x) + h(x); };
        CHECK(c.apply(combo) == scale * c.apply(f) + c.apply(h));
    }
}

TEST_CASE("evaluation failures propagate") {
    const auto c = StringConstraint::value_at("tfc", Vec2c::zero());
    auto g = [](const std::string& w) -> Vec2c {
        (void)tfc::examples::string_code(w);
        return Vec2c::zero();
    };
    CHECK_NOTHROW(c.apply(g));
    const auto bad = StringConstraint::value_at("TFC", Vec2c::zero());
    CHECK_THROWS_AS(bad.apply(g), tfc::InvalidInputError);
}
