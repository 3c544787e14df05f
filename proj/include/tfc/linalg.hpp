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

#include <cstddef>
#include <utility>

#include "tfc/errors.hpp"
#include "tfc/field.hpp"
#include "tfc/matrix.hpp"

namespace tfc {

template <Field F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("multiply: inner dimensions differ");
    Matrix<F> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
    return r;
}

/// Gauss-Jordan inverse using field operations only.
///
/// Pivot choice: approximate fields take the largest pivot_magnitude in the
/// column (partial pivoting) and reject columns whose best candidate is at or
/// below pivot_tolerance; exact fields take the first nonzero candidate.
/// Invertibility is decided here, during elimination; no separate determinant
/// path exists to disagree with it.
template <Field F>
Matrix<F> inverse(const Matrix<F>& m, double pivot_tolerance = kSingularityTolerance) {
    if (m.rows() != m.cols())
        throw NonSquareError("inverse: matrix is not square");
    const std::size_t n = m.rows();

    // Augmented [m | I], reduced in place.
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = field_traits<F>::one();
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        bool found = false;
        if constexpr (ApproximateField<F>) {
            double best = pivot_tolerance;
            for (std::size_t r = col; r < n; ++r) {
                const double mag = field_traits<F>::pivot_magnitude(aug(r, col));
                if (mag > best) {
                    best = mag;
                    pivot_row = r;
                    found = true;
                }
            }
        } else {
            for (std::size_t r = col; r < n; ++r) {
                if (!field_traits<F>::equals(aug(r, col), field_traits<F>::zero())) {
                    pivot_row = r;
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw SingularSupportError("inverse: no admissible pivot in column " +
                                       std::to_string(col));

        if (pivot_row != col)
            for (std::size_t j = 0; j < 2 * n; ++j)
                std::swap(aug(col, j), aug(pivot_row, j));

        const F scale = field_traits<F>::invert(aug(col, col));
        for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) = scale * aug(col, j);

        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const F factor = aug(r, col);
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug(r, j) = aug(r, j) - factor * aug(col, j);
        }
    }

    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace tfc
