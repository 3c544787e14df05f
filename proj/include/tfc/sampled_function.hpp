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
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "tfc/field.hpp"

namespace tfc {

/// A real function of one real variable, used as a vector-space element.
///
/// Arithmetic wraps the evaluators pointwise. Equality cannot be decided for
/// opaque callables, so each value carries a probe grid and equals_within
/// means agreement at every probe point of both operands: grid equality, not
/// full extensional equality.
class SampledFunction {
public:
    /// The zero function on the default probe grid.
    SampledFunction()
        : eval_([](double) { return 0.0; }), probes_(default_probe_grid()) {}

    explicit SampledFunction(std::function<double(double)> eval,
                             std::vector<double> probes = default_probe_grid())
        : eval_(std::move(eval)), probes_(std::move(probes)) {}

    /// 17 evenly spaced probe points spanning [-2*pi, 2*pi].
    static const std::vector<double>& default_probe_grid() {
        static const std::vector<double> grid = [] {
            constexpr int n = 17;
            const double lo = -2.0 * std::numbers::pi;
            const double hi = 2.0 * std::numbers::pi;
            std::vector<double> g(n);
            for (int i = 0; i < n; ++i)
                g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
            return g;
        }();
        return grid;
    }

    double operator()(double t) const { return eval_(t); }
    const std::vector<double>& probes() const { return probes_; }

    // Binary results keep the left operand's probe grid.
    friend SampledFunction operator+(const SampledFunction& u, const SampledFunction& v) {
        auto ue = u.eval_, ve = v.eval_;
        return SampledFunction([ue, ve](double t) { return ue(t) + ve(t); }, u.probes_);
    }
    friend SampledFunction operator-(const SampledFunction& u, const SampledFunction& v) {
        auto ue = u.eval_, ve = v.eval_;
        return SampledFunction([ue, ve](double t) { return ue(t) - ve(t); }, u.probes_);
    }
    SampledFunction operator-() const {
        auto e = eval_;
        return SampledFunction([e](double t) { return -e(t); }, probes_);
    }
    friend SampledFunction operator*(double s, const SampledFunction& u) {
        auto e = u.eval_;
        return SampledFunction([s, e](double t) { return s * e(t); }, u.probes_);
    }

private:
    std::function<double(double)> eval_;
    std::vector<double> probes_;
};

/// Largest pointwise gap over the union of both probe grids, which keeps the
/// comparison symmetric when grids differ.
inline double deviation(const SampledFunction& u, const SampledFunction& v) {
    double worst = 0.0;
    for (double t : u.probes()) worst = std::max(worst, std::abs(u(t) - v(t)));
    for (double t : v.probes()) worst = std::max(worst, std::abs(u(t) - v(t)));
    return worst;
}

inline SampledFunction zero_like(const SampledFunction& u) {
    return SampledFunction([](double) { return 0.0; }, u.probes());
}

/// Random polynomial of degree <= 4 with coefficients uniform in [-5, 5],
/// on the exemplar's probe grid.
inline SampledFunction random_like(Rng& rng, const SampledFunction& u) {
    std::vector<double> coeff(5);
    for (double& c : coeff) c = rng.uniform(-5.0, 5.0);
    return SampledFunction(
        [coeff](double t) {
            double acc = 0.0;
            for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * t + coeff[k];
            return acc;
        },
        u.probes());
}

}  // namespace tfc
