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
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "tfc/constraint.hpp"
#include "tfc/errors.hpp"
#include "tfc/expression.hpp"
#include "tfc/field.hpp"

namespace tfc {

namespace detail {

/// Coordinate tuple with slot K removed.
template <std::size_t K, typename... As>
auto drop_slot(const std::tuple<As...>& t) {
    static_assert(K < sizeof...(As));
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::make_tuple(std::get<(I < K) ? I : I + 1>(t)...);
    }(std::make_index_sequence<sizeof...(As) - 1>{});
}

/// Inverse of drop_slot: put p back at slot K.
template <std::size_t K, typename P, typename... Rs>
auto insert_slot(const std::tuple<Rs...>& rest, const P& p) {
    static_assert(K <= sizeof...(Rs));
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
        auto pick = [&]<std::size_t J>(std::integral_constant<std::size_t, J>)
            -> decltype(auto) {
            if constexpr (J < K)
                return std::get<J>(rest);
            else if constexpr (J == K)
                return (p);
            else
                return std::get<J - 1>(rest);
        };
        return std::make_tuple(pick(std::integral_constant<std::size_t, I>{})...);
    }(std::make_index_sequence<sizeof...(Rs) + 1>{});
}

}  // namespace detail

/// A constraint that acts along dimension K of an n-dimensional input: a
/// finite combination of evaluations at points of A_K, with a target that is
/// a function of the remaining coordinates. Targets stay functions even when
/// constant, so every dimension is handled uniformly.
template <std::size_t K, typename V, Field F, typename... As>
    requires VectorOver<V, F>
struct PartialConstraint {
    static_assert(K < sizeof...(As), "dimension index out of range");

    using Coords = std::tuple<As...>;
    using Point = std::tuple_element_t<K, Coords>;
    using Remaining = decltype(detail::drop_slot<K>(std::declval<Coords>()));

    std::vector<Term<F, Point>> terms;
    std::function<V(const Remaining&)> target;
    std::string label;

    PartialConstraint(std::vector<Term<F, Point>> t,
                      std::function<V(const Remaining&)> k, std::string l = "")
        : terms(std::move(t)), target(std::move(k)), label(std::move(l)) {
        if (terms.empty())
            throw InvalidInputError("partial constraint needs at least one term");
    }

    static PartialConstraint value_at(Point p, std::function<V(const Remaining&)> k,
                                      std::string label = "") {
        return PartialConstraint({{field_traits<F>::one(), std::move(p)}}, std::move(k),
                                 std::move(label));
    }
};

/// C[f] for a dimension-K constraint: collapses slot K, leaving a function
/// of the remaining coordinates. f may map into V or into the field.
template <std::size_t K, typename V, Field F, typename... As, typename Fn>
auto apply_partial_constraint(const PartialConstraint<K, V, F, As...>& c, Fn f) {
    using Constraint = PartialConstraint<K, V, F, As...>;
    using Remaining = typename Constraint::Remaining;
    using W = std::remove_cvref_t<decltype(f(std::declval<typename Constraint::Coords>()))>;
    auto terms = c.terms;
    return std::function<W(const Remaining&)>(
        [terms, f = std::move(f)](const Remaining& rest) {
            return linear_combination(terms, [&](const typename Constraint::Point& p) {
                return f(detail::insert_slot<K>(rest, p));
            });
        });
}

/// One dimension's constraints and supports. Supports take the dimension's
/// own coordinate; their images under the constraints must be field values
/// for the support matrix to exist.
template <std::size_t K, typename V, Field F, typename... As>
struct Dimension {
    std::vector<PartialConstraint<K, V, F, As...>> constraints;
    std::vector<SupportFunction<typename PartialConstraint<K, V, F, As...>::Point, F>>
        supports;
};

/// Recursively composed constrained expression over an n-dimensional input.
///
/// Each dimension contributes an embedding that maps a free function of all
/// coordinates to one satisfying that dimension's constraints. Dimensions
/// are applied in `order`; the output of one embedding is the free function
/// of the next, and the result satisfies all constraints of all dimensions
/// when the constraints are orthogonal across dimensions. Orthogonality is
/// not checked here (there is no general test); order-independence of the
/// composition is the usable proxy, exercised by with_order.
template <typename V, Field F, typename... As>
class MultivariateExpression {
public:
    using Coords = std::tuple<As...>;
    using FreeFunction = std::function<V(const Coords&)>;
    using Embedding = std::function<FreeFunction(FreeFunction)>;

    MultivariateExpression(std::vector<Embedding> embeddings,
                           std::vector<Matrix<F>> alphas)
        : embeddings_(std::move(embeddings)),
          alphas_(std::move(alphas)),
          order_(embeddings_.size()) {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
    }

    static constexpr std::size_t dimensions() { return sizeof...(As); }

    /// Per-dimension inverted support matrices (empty matrix for dimensions
    /// with no constraints).
    const std::vector<Matrix<F>>& alphas() const { return alphas_; }
    const std::vector<std::size_t>& order() const { return order_; }

    /// Same expression with dimensions applied in a different order; used to
    /// probe that orthogonal constraints compose commutatively.
    MultivariateExpression with_order(std::vector<std::size_t> order) const {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expected(embeddings_.size());
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        if (sorted != expected)
            throw InvalidInputError("order must be a permutation of the dimensions");
        MultivariateExpression copy = *this;
        copy.order_ = std::move(order);
        return copy;
    }

    /// Sequentially embed g through every dimension; the result is the full
    /// constrained expression with g as its free function.
    FreeFunction embed(FreeFunction g) const {
        FreeFunction f = std::move(g);
        for (std::size_t idx : order_) f = embeddings_[idx](std::move(f));
        return f;
    }

    V evaluate(const Coords& coords, FreeFunction g) const {
        return embed(std::move(g))(coords);
    }

private:
    std::vector<Embedding> embeddings_;
    std::vector<Matrix<F>> alphas_;
    std::vector<std::size_t> order_;
};

namespace detail {

template <std::size_t K, typename V, Field F, typename... As>
std::pair<std::function<std::function<V(const std::tuple<As...>&)>(
              std::function<V(const std::tuple<As...>&)>)>,
          Matrix<F>>
make_embedding(const Dimension<K, V, F, As...>& dim) {
    using Coords = std::tuple<As...>;
    using FreeFunction = std::function<V(const Coords&)>;
    using Constraint = PartialConstraint<K, V, F, As...>;

    // A dimension without constraints embeds as the identity.
    if (dim.constraints.empty())
        return {[](FreeFunction f) { return f; }, Matrix<F>()};

    std::vector<std::vector<Term<F, typename Constraint::Point>>> terms;
    terms.reserve(dim.constraints.size());
    for (const auto& c : dim.constraints) terms.push_back(c.terms);

    Matrix<F> alpha;
    try {
        alpha = alpha_from_terms(terms, dim.supports);
    } catch (const Error& e) {
        throw SingularSupportError("dimension " + std::to_string(K) + ": " + e.what());
    }
    SwitchingSet<typename Constraint::Point, F> switching(dim.supports, alpha);

    auto constraints = dim.constraints;
    auto embedding = [constraints, switching](FreeFunction f) -> FreeFunction {
        return [constraints, switching, f](const Coords& coords) -> V {
            const auto& xk = std::get<K>(coords);
            const auto rest = drop_slot<K>(coords);
            V acc = f(coords);
            for (std::size_t i = 0; i < constraints.size(); ++i) {
                // rho_i at the remaining coordinates: target_i - C_i[f].
                V rho = constraints[i].target(rest) -
                        linear_combination(constraints[i].terms,
                                           [&](const typename Constraint::Point& p) {
                                               return f(insert_slot<K>(rest, p));
                                           });
                acc = axpy(switching.value(i, xk), rho, acc);
            }
            return acc;
        };
    };
    return {std::move(embedding), std::move(alpha)};
}

template <typename V, Field F, typename... As, std::size_t... Ks>
MultivariateExpression<V, F, As...> build_multivariate_impl(
    std::index_sequence<Ks...>, const Dimension<Ks, V, F, As...>&... dims) {
    using Expr = MultivariateExpression<V, F, As...>;
    std::vector<typename Expr::Embedding> embeddings;
    std::vector<Matrix<F>> alphas;
    (
        [&](auto&& pair) {
            embeddings.push_back(std::move(pair.first));
            alphas.push_back(std::move(pair.second));
        }(make_embedding(dims)),
        ...);
    return Expr(std::move(embeddings), std::move(alphas));
}

}  // namespace detail

/// Build the composed expression from one Dimension<K, ...> per coordinate,
/// given in ascending dimension order (also the default application order).
template <typename V, Field F, typename... As, std::size_t... Ks>
MultivariateExpression<V, F, As...> build_multivariate(
    const Dimension<Ks, V, F, As...>&... dims) {
    static_assert(sizeof...(Ks) == sizeof...(As),
                  "need exactly one dimension description per coordinate");
    static_assert(std::is_same_v<std::index_sequence<Ks...>,
                                 std::make_index_sequence<sizeof...(Ks)>>,
                  "dimension descriptions must be passed as 0, 1, ..., n-1");
    return detail::build_multivariate_impl(std::index_sequence<Ks...>{}, dims...);
}

}  // namespace tfc
