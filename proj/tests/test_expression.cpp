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

#include <atomic>
#include <complex>
#include <string>
#include <thread>
#include <vector>

#include "tfc/examples.hpp"
#include "tfc/expression.hpp"

using Complex = std::complex<double>;
using tfc::GF4;
using tfc::Gf4Function;
using tfc::Matrix;
using tfc::Vec2c;
using tfc::Vec2r;

namespace {

// C_j[phi_i] over all pairs; the worst distance from the Kronecker delta.
template <typename X, typename V, tfc::Field F>
double duality_deviation(const tfc::ConstrainedExpression<X, V, F>& expr) {
    double worst = 0.0;
    const auto& sw = expr.switching();
    for (std::size_t i = 0; i < sw.size(); ++i) {
        auto phi = sw.switching_function(i);
        for (std::size_t j = 0; j < expr.constraints().size(); ++j) {
            const F applied = expr.constraints()[j].apply(phi);
            const F expected =
                i == j ? tfc::field_traits<F>::one() : tfc::field_traits<F>::zero();
            worst = std::max(worst, tfc::deviation(applied, expected));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("support matrices match the worked values") {
    SUBCASE("matrix example") {
        const auto ex = tfc::examples::build_matrix_example();
        const auto& cs = ex.expression.constraints();
        const auto& supports = ex.expression.switching().supports();
        const auto expected = Matrix<double>::from_rows({{1, 3}, {1, 0}});
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(cs[j].apply(supports[i].evaluate) == expected(j, i));
    }
    SUBCASE("string example") {
        const auto ex = tfc::examples::build_string_example();
        const auto& cs = ex.expression.constraints();
        const auto& supports = ex.expression.switching().supports();
        const auto expected = Matrix<Complex>::from_rows(
            {{Complex{4, 2}, Complex{29, -1}}, {Complex{0, 0}, Complex{11, -2}}});
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(tfc::deviation(cs[j].apply(supports[i].evaluate),
                                     expected(j, i)) == 0.0);
    }
    SUBCASE("gf4 example") {
        const auto ex = tfc::examples::build_gf4_example();
        const auto& cs = ex.expression.constraints();
        const auto& supports = ex.expression.switching().supports();
        const auto expected = tfc::examples::gf4_expected_alpha();  // self-inverse
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(cs[j].apply(supports[i].evaluate) == expected(j, i));
    }
}

TEST_CASE("derived alphas match the worked values") {
    CHECK(tfc::deviation(tfc::examples::build_matrix_example().expression.switching().alpha(),
                         tfc::examples::matrix_expected_alpha()) <= 1e-12);
    CHECK(tfc::deviation(tfc::examples::build_string_example().expression.switching().alpha(),
                         tfc::examples::string_expected_alpha_exact()) <= 1e-12);
    CHECK(tfc::deviation(tfc::examples::build_gf4_example().expression.switching().alpha(),
                         tfc::examples::gf4_expected_alpha()) == 0.0);
}

TEST_CASE("single-constraint expression has alpha [[1]]") {
    using C = tfc::LinearConstraint<double, double, double>;
    std::vector<C> cs = {C::value_at(1.0, 5.0)};
    std::vector<tfc::SupportFunction<double, double>> supports = {
        {[](const double&) { return 1.0; }, "1"}};
    const auto sw = tfc::derive_switching_set(cs, supports);
    REQUIRE(sw.alpha().rows() == 1);
    CHECK(sw.alpha()(0, 0) == 1.0);
}

TEST_CASE("switching values at selected points") {
    SUBCASE("matrix example: phi_1 at the value point is 1") {
        const auto ex = tfc::examples::build_matrix_example();
        CHECK(ex.expression.switching().value(0, ex.value_point) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("gf4 example: phi_2(1) = 1 + 1 = 0") {
        const auto ex = tfc::examples::build_gf4_example();
        CHECK(ex.expression.switching().value(1, GF4::one()) == GF4::zero());
    }
}

TEST_CASE("switching duality on every example") {
    CHECK(duality_deviation(tfc::examples::build_matrix_example().expression) <= 1e-9);
    CHECK(duality_deviation(tfc::examples::build_string_example().expression) <= 1e-9);
    CHECK(duality_deviation(tfc::examples::build_gf4_example().expression) == 0.0);
}

TEST_CASE("count mismatch is rejected") {
    using C = tfc::LinearConstraint<double, double, double>;
    std::vector<C> cs = {C::value_at(1.0, 5.0)};
    std::vector<tfc::SupportFunction<double, double>> supports = {
        {[](const double&) { return 1.0; }, "1"},
        {[](const double& x) { return x; }, "x"}};
    CHECK_THROWS_AS(tfc::derive_switching_set(cs, supports), tfc::CountMismatchError);
    CHECK_THROWS_AS(
        tfc::derive_switching_set(std::vector<C>{},
                                  std::vector<tfc::SupportFunction<double, double>>{}),
        tfc::CountMismatchError);
}

TEST_CASE("dependent supports fail with the support set in the message") {
    using C = tfc::LinearConstraint<double, double, double>;
    std::vector<C> cs = {C::value_at(1.0, 5.0), C::value_at(2.0, 7.0)};
    std::vector<tfc::SupportFunction<double, double>> supports = {
        {[](const double& x) { return x; }, "x"},
        {[](const double& x) { return 2.0 * x; }, "2x"}};
    try {
        tfc::derive_switching_set(cs, supports);
        FAIL("expected SingularSupportError");
    } catch (const tfc::SingularSupportError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("x") != std::string::npos);
        CHECK(msg.find("2x") != std::string::npos);
    }
}

TEST_CASE("constraint satisfaction for 100 random free functions each") {
    tfc::Rng rng(31);
    SUBCASE("matrix example") {
        const auto ex = tfc::examples::build_matrix_example();
        double worst = 0.0;
        for (int s = 0; s < 100; ++s) {
            auto bound =
                ex.expression.bind(tfc::examples::random_matrix_free_function(rng));
            worst = std::max(worst,
                             tfc::deviation(bound(ex.value_point), ex.value_target));
            worst = std::max(worst, tfc::deviation(bound(ex.relative_left),
                                                   bound(ex.relative_right)));
        }
        CHECK(worst <= 1e-9);
    }
    SUBCASE("string example") {
        const auto ex = tfc::examples::build_string_example();
        double worst = 0.0;
        for (int s = 0; s < 100; ++s) {
            auto bound =
                ex.expression.bind(tfc::examples::random_string_free_function(rng));
            worst = std::max(worst,
                             tfc::deviation(bound(ex.value_point), ex.value_target));
            worst = std::max(worst, tfc::deviation(bound(ex.relative_left),
                                                   bound(ex.relative_right)));
        }
        CHECK(worst <= 1e-9);
    }
    SUBCASE("gf4 example, exact") {
        const auto ex = tfc::examples::build_gf4_example();
        for (int s = 0; s < 100; ++s) {
            auto bound = ex.expression.bind(tfc::examples::random_gf4_free_function(rng));
            CHECK(bound(ex.value_point) == ex.value_target);
            CHECK(bound(ex.difference_left) - bound(ex.difference_right) ==
                  ex.difference_target);
        }
    }
}

TEST_CASE("gf4 example, exhaustive over constant free functions") {
    const auto ex = tfc::examples::build_gf4_example();
    for (GF4 a : GF4::elements())
        for (GF4 b : GF4::elements())
            for (GF4 c : GF4::elements())
                for (GF4 d : GF4::elements()) {
                    const auto table = Gf4Function::from_values({a, b, c, d});
                    auto bound =
                        ex.expression.bind([table](const GF4&) { return table; });
                    CHECK(bound(ex.value_point) == ex.value_target);
                    CHECK(bound(ex.difference_left) - bound(ex.difference_right) ==
                          ex.difference_target);
                }
}

TEST_CASE("a satisfying free function passes through unchanged") {
    tfc::Rng rng(77);
    const auto ex = tfc::examples::build_matrix_example();
    // u(., g) satisfies the constraints, so re-embedding it must be a no-op.
    auto first = ex.expression.bind(tfc::examples::random_matrix_free_function(rng));
    auto second = ex.expression.bind(first);
    for (const auto& rho : second.projections())
        CHECK(tfc::deviation(rho, Vec2r::zero()) <= 1e-9);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
        const auto point = tfc::examples::random_matrix_point(rng);
        worst = std::max(worst, tfc::deviation(second(point), first(point)));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("free-function irrelevance at constraint points") {
    tfc::Rng rng(78);
    const auto ex = tfc::examples::build_string_example();
    auto b1 = ex.expression.bind(tfc::examples::random_string_free_function(rng));
    auto b2 = ex.expression.bind(tfc::examples::random_string_free_function(rng));
    CHECK(tfc::deviation(b1(ex.value_point), b2(ex.value_point)) <= 1e-9);
    CHECK(tfc::deviation(b1(ex.relative_left) - b1(ex.relative_right),
                         b2(ex.relative_left) - b2(ex.relative_right)) <= 1e-9);
}

TEST_CASE("bound expressions cache the projections") {
    tfc::Rng rng(79);
    const auto ex = tfc::examples::build_gf4_example();
    auto g = tfc::examples::random_gf4_free_function(rng);
    auto bound = ex.expression.bind(g);
    REQUIRE(bound.projections().size() == 2);
    // Cached values equal direct recomputation.
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(bound.projections()[i] == ex.expression.constraints()[i].projection(g));
    // evaluate() agrees with the bound callable.
    for (GF4 x : GF4::elements())
        CHECK(ex.expression.evaluate(x, g) == bound(x));
}

TEST_CASE("free-function failures propagate out of evaluate") {
    const auto ex = tfc::examples::build_string_example();
    auto g = [](const std::string&) -> Vec2c { throw std::runtime_error("boom"); };
    CHECK_THROWS_AS(ex.expression.evaluate("tfc", g), std::runtime_error);
}

TEST_CASE("one bound expression can be evaluated from many threads") {
    tfc::Rng rng(80);
    const auto ex = tfc::examples::build_matrix_example();
    const auto bound = ex.expression.bind(tfc::examples::random_matrix_free_function(rng));

    std::vector<Matrix<double>> points;
    std::vector<Vec2r> serial;
    for (int i = 0; i < 64; ++i) {
        points.push_back(tfc::examples::random_matrix_point(rng));
        serial.push_back(bound(points.back()));
    }

    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = 0; i < points.size(); ++i)
                if (tfc::deviation(bound(points[i]), serial[i]) != 0.0) ++mismatches;
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}
