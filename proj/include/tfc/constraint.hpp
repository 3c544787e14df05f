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

#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tfc/errors.hpp"
#include "tfc/field.hpp"

namespace tfc {

/// One summand of a constraint functional: coefficient times an evaluation
/// of the unknown function at a point. Points are opaque; nothing is
/// required of X beyond being accepted by the functions under test.
template <Field F, typename X>
struct Term {
    F coefficient;
    X point;
};

/// Sum coefficient_m * f(point_m). The fold starts from the first term, so
/// no zero element of the codomain is ever needed; constraints guarantee at
/// least one term. Works for any codomain that is a vector space over F,
/// including F itself (support functions).
template <Field F, typename X, typename Fn>
auto linear_combination(const std::vector<Term<F, X>>& terms, Fn&& f) {
    using W = std::remove_cvref_t<decltype(f(terms.front().point))>;
    static_assert(VectorOver<W, F>,
                  "functional codomain must be a vector space over the field");
    W acc = terms.front().coefficient * f(terms.front().point);
    for (std::size_t m = 1; m < terms.size(); ++m)
        acc = acc + terms[m].coefficient * f(terms[m].point);
    return acc;
}

/// A linear constraint on an unknown function u : X -> V, written as a
/// finite combination of point evaluations with a target value:
///
///     sum_m coefficient_m * u(point_m) = target
template <typename X, typename V, Field F>
    requires VectorOver<V, F>
class LinearConstraint {
public:
    LinearConstraint(std::vector<Term<F, X>> terms, V target, std::string label = "")
        : terms_(std::move(terms)), target_(std::move(target)), label_(std::move(label)) {
        if (terms_.empty())
            throw InvalidInputError("constraint needs at least one term");
    }

    /// u(point) = target.
    static LinearConstraint value_at(X point, V target, std::string label = "") {
        return LinearConstraint({{field_traits<F>::one(), std::move(point)}},
                                std::move(target), std::move(label));
    }

    /// u(a) = u(b), stored as u(a) - u(b) = zero.
    static LinearConstraint relative(X a, X b, V zero = V{}, std::string label = "") {
        return LinearConstraint({{field_traits<F>::one(), std::move(a)},
                                 {-field_traits<F>::one(), std::move(b)}},
                                std::move(zero), std::move(label));
    }

    const std::vector<Term<F, X>>& terms() const { return terms_; }
    const V& target() const { return target_; }
    const std::string& label() const { return label_; }

    /// C[f] for any f whose codomain is a vector space over F; the codomain
    /// may be V or the field itself (the support-matrix case).
    template <typename Fn>
    auto apply(Fn&& f) const {
        return linear_combination(terms_, std::forward<Fn>(f));
    }

    /// rho(g) = target - C[g], the defect of a candidate free function.
    template <typename Fn>
    V projection(Fn&& g) const {
        return target_ - apply(std::forward<Fn>(g));
    }

    /// Two-argument form matching the functional's declared signature; the
    /// point argument is unused because the defect never depends on it.
    template <typename Fn>
    V projection(const X& /*x*/, Fn&& g) const {
        return projection(std::forward<Fn>(g));
    }

private:
    std::vector<Term<F, X>> terms_;
    V target_;
    std::string label_;
};

}  // namespace tfc
