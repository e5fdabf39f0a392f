// SPDX-License-Identifier: Apache-2.0
//
// beamsat: multi-user mmWave beam steering simulation and analytic SE bounds
// Copyright (C) 2026 The beamsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BEAMSAT_MATRIX_HPP
#define BEAMSAT_MATRIX_HPP

#include "beamsat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace beamsat
{

using cplx = std::complex<double>;

// Extended-precision complex scalar used by the digital precoding layer.
using cplx_ext = std::complex<long double>;

using CVector = std::vector<cplx>;

// Dense row-major matrix. Sized for the handful-of-users problems in this library,
// not for large-scale linear algebra.
template <class T>
class Matrix
{
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, std::span<const T> values)
    {
        if (values.size() != rows_)
            throw ParameterError("Matrix::set_column: length mismatch");
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = values[r];
    }

    std::span<const T> data() const noexcept { return data_; }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using CMatrix = Matrix<cplx>;
using CMatrixExt = Matrix<cplx_ext>;

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From> &m)
{
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = static_cast<To>(m(r, c));
    return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b)
{
    if (a.cols() != b.rows())
        throw ParameterError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const T aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

template <class T>
Matrix<T> conj_transpose(const Matrix<T> &a)
{
    Matrix<T> out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(c, r) = std::conj(a(r, c));
    return out;
}

// Largest entry magnitude.
template <class T>
auto max_abs(const Matrix<T> &a)
{
    decltype(std::abs(T{})) best{0};
    for (const T &v : a.data())
        best = std::max(best, std::abs(v));
    return best;
}

template <class T>
auto column_norm(const Matrix<T> &a, std::size_t c)
{
    decltype(std::abs(T{})) sum{0};
    for (std::size_t r = 0; r < a.rows(); ++r)
        sum += std::norm(a(r, c));
    return std::sqrt(sum);
}

// Inverse of a square matrix: LU factorization with partial pivoting, then one
// forward/back substitution per column of the identity, so that a * inverse - I
// is small relative to |a| |inverse|. Returns nullopt when a pivot magnitude falls
// below relative_tolerance * max|a_ij| of the input.
template <class T>
std::optional<Matrix<T>> invert(Matrix<T> a, double relative_tolerance)
{
    if (a.rows() != a.cols())
        throw ParameterError("invert: matrix is not square");
    const std::size_t n = a.rows();
    using Real = decltype(std::abs(T{}));
    const Real threshold = static_cast<Real>(relative_tolerance) * max_abs(a);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;

    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col)))
                pivot = r;
        if (!(std::abs(a(pivot, col)) > threshold))
            return std::nullopt;
        if (pivot != col)
        {
            std::swap(perm[col], perm[pivot]);
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(col, c), a(pivot, c));
        }
        for (std::size_t r = col + 1; r < n; ++r)
        {
            const T factor = a(r, col) / a(col, col);
            a(r, col) = factor;
            for (std::size_t c = col + 1; c < n; ++c)
                a(r, c) -= factor * a(col, c);
        }
    }

    Matrix<T> inv(n, n);
    std::vector<T> x(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        // L y = P e_j
        for (std::size_t r = 0; r < n; ++r)
        {
            T acc = perm[r] == j ? T{1} : T{};
            for (std::size_t c = 0; c < r; ++c)
                acc -= a(r, c) * x[c];
            x[r] = acc;
        }
        // U x = y
        for (std::size_t r = n; r-- > 0;)
        {
            T acc = x[r];
            for (std::size_t c = r + 1; c < n; ++c)
                acc -= a(r, c) * x[c];
            x[r] = acc / a(r, r);
        }
        for (std::size_t r = 0; r < n; ++r)
            inv(r, j) = x[r];
    }
    return inv;
}

} // namespace beamsat

#endif
