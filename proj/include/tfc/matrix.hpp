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
#include <initializer_list>
#include <span>
#include <vector>

#include "tfc/errors.hpp"
#include "tfc/field.hpp"

namespace tfc {

/// Dense row-major matrix over a field. Doubles as a vector-space instance
/// (matrices of a fixed shape under entrywise operations) and as the carrier
/// for support-matrix inversion.
template <Field F>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, field_traits<F>::zero()) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<F>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw DimensionMismatchError("from_rows: ragged row lengths");
            std::size_t j = 0;
            for (const F& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field_traits<F>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "add");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "subtract");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
        return r;
    }

private:
    void require_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatchError(std::string("matrix ") + what +
                                         ": shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// row' * m * col, the entry-extraction form used by support functions whose
/// inputs are matrices.
template <Field F>
F bilinear_form(std::span<const F> row, const Matrix<F>& m, std::span<const F> col) {
    if (row.size() != m.rows() || col.size() != m.cols())
        throw DimensionMismatchError("bilinear_form: selector lengths differ from shape");
    F acc = field_traits<F>::zero();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc = acc + row[i] * m(i, j) * col[j];
    return acc;
}

template <Field F>
double deviation(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, deviation(a(i, j), b(i, j)));
    return worst;
}

template <Field F>
Matrix<F> zero_like(const Matrix<F>& m) {
    return Matrix<F>(m.rows(), m.cols());
}

template <Field F>
Matrix<F> random_like(Rng& rng, const Matrix<F>& m) {
    Matrix<F> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = field_traits<F>::sample(rng);
    return r;
}

}  // namespace tfc
