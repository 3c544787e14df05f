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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tfc/constraint.hpp"
#include "tfc/errors.hpp"
#include "tfc/field.hpp"
#include "tfc/linalg.hpp"
#include "tfc/matrix.hpp"

namespace tfc {

/// User-chosen scalar-valued function s : X -> F. Supports always map into
/// the field, never into the codomain space.
template <typename X, Field F>
struct SupportFunction {
    std::function<F(const X&)> evaluate;
    std::string label;
};

namespace detail {

/// alpha = M^-1 where M[j][i] = sum_m coeff_{j,m} * s_i(point_{j,m}).
/// Failure names the support set, since a singular support matrix means the
/// supports cannot resolve these constraints.
template <typename X, Field F>
Matrix<F> alpha_from_terms(const std::vector<std::vector<Term<F, X>>>& constraint_terms,
                           const std::vector<SupportFunction<X, F>>& supports) {
    const std::size_t k = constraint_terms.size();
    if (supports.size() != k)
        throw CountMismatchError("need exactly one support function per constraint (" +
                                 std::to_string(k) + " constraints, " +
                                 std::to_string(supports.size()) + " supports)");
    if (k == 0) throw CountMismatchError("need at least one constraint");

    Matrix<F> support_matrix(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            support_matrix(j, i) =
                linear_combination(constraint_terms[j], supports[i].evaluate);

    try {
        return inverse(support_matrix);
    } catch (const SingularSupportError& e) {
        std::string names;
        for (const auto& s : supports) {
            if (!names.empty()) names += ", ";
            names += s.label.empty() ? std::string("<unnamed>") : s.label;
        }
        throw SingularSupportError(std::string(e.what()) + " (support set: " + names + ")");
    }
}

}  // namespace detail

/// The support functions of an expression together with the inverted support
/// matrix. Row/column orientation is pinned by the duality property
/// C_j[phi_i] = delta_ji: alpha(j, i) multiplies s_j inside phi_i.
template <typename X, Field F>
class SwitchingSet {
public:
    SwitchingSet(std::vector<SupportFunction<X, F>> supports, Matrix<F> alpha)
        : supports_(std::move(supports)), alpha_(std::move(alpha)) {}

    std::size_t size() const { return supports_.size(); }
    const Matrix<F>& alpha() const { return alpha_; }
    const std::vector<SupportFunction<X, F>>& supports() const { return supports_; }

    /// phi_i(x) = sum_j s_j(x) * alpha(j, i).
    F value(std::size_t i, const X& x) const {
        F acc = supports_[0].evaluate(x) * alpha_(0, i);
        for (std::size_t j = 1; j < supports_.size(); ++j)
            acc = acc + supports_[j].evaluate(x) * alpha_(j, i);
        return acc;
    }

    /// phi_i as a standalone callable.
    std::function<F(const X&)> switching_function(std::size_t i) const {
        return [copy = *this, i](const X& x) { return copy.value(i, x); };
    }

private:
    std::vector<SupportFunction<X, F>> supports_;
    Matrix<F> alpha_;
};

template <typename X, typename V, Field F>
SwitchingSet<X, F> derive_switching_set(
    const std::vector<LinearConstraint<X, V, F>>& constraints,
    std::vector<SupportFunction<X, F>> supports) {
    std::vector<std::vector<Term<F, X>>> terms;
    terms.reserve(constraints.size());
    for (const auto& c : constraints) terms.push_back(c.terms());
    Matrix<F> alpha = detail::alpha_from_terms(terms, supports);
    return SwitchingSet<X, F>(std::move(supports), std::move(alpha));
}

/// u(x, g) = g(x) + sum_i phi_i(x) * rho_i(g): satisfies every constraint
/// for any admissible free function g.
///
/// Immutable once built; evaluation is pure, so expressions and bindings may
/// be shared across threads freely. Binding a free function computes the
/// projection values rho_i once, eagerly, since they do not depend on x.
template <typename X, typename V, Field F>
class ConstrainedExpression {
    struct Core {
        std::vector<LinearConstraint<X, V, F>> constraints;
        SwitchingSet<X, F> switching;
    };

public:
    using FreeFunction = std::function<V(const X&)>;

    ConstrainedExpression(std::vector<LinearConstraint<X, V, F>> constraints,
                          SwitchingSet<X, F> switching)
        : core_(std::make_shared<const Core>(
              Core{std::move(constraints), std::move(switching)})) {
        if (core_->constraints.size() != core_->switching.size())
            throw CountMismatchError("constraint and switching-function counts differ");
    }

    const std::vector<LinearConstraint<X, V, F>>& constraints() const {
        return core_->constraints;
    }
    const SwitchingSet<X, F>& switching() const { return core_->switching; }

    /// The expression with its free function fixed; itself a plain X -> V
    /// callable, which is what makes recursive composition possible.
    class Bound {
    public:
        V operator()(const X& x) const {
            V acc = g_(x);
            for (std::size_t i = 0; i < rho_.size(); ++i)
                acc = axpy(core_->switching.value(i, x), rho_[i], acc);
            return acc;
        }

        /// The cached defects rho_i = target_i - C_i[g].
        const std::vector<V>& projections() const { return rho_; }

    private:
        friend class ConstrainedExpression;
        Bound(std::shared_ptr<const Core> core, FreeFunction g, std::vector<V> rho)
            : core_(std::move(core)), g_(std::move(g)), rho_(std::move(rho)) {}

        std::shared_ptr<const Core> core_;
        FreeFunction g_;
        std::vector<V> rho_;
    };

    Bound bind(FreeFunction g) const {
        std::vector<V> rho;
        rho.reserve(core_->constraints.size());
        for (const auto& c : core_->constraints) rho.push_back(c.projection(g));
        return Bound(core_, std::move(g), std::move(rho));
    }

    V evaluate(const X& x, FreeFunction g) const { return bind(std::move(g))(x); }

private:
    std::shared_ptr<const Core> core_;
};

template <typename X, typename V, Field F>
ConstrainedExpression<X, V, F> build_expression(
    std::vector<LinearConstraint<X, V, F>> constraints,
    std::vector<SupportFunction<X, F>> supports) {
    auto switching = derive_switching_set(constraints, std::move(supports));
    return ConstrainedExpression<X, V, F>(std::move(constraints), std::move(switching));
}

}  // namespace tfc
