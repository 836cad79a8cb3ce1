// Copyright 2026 The qflip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qflip {

using Complex = std::complex<double>;

/// Absolute tolerance used by the approximate checks in this library.
struct Tolerance {
    double abs_eps = 1e-10;

    constexpr Tolerance() = default;
    explicit Tolerance(double eps);
};

/// Dense row-major complex matrix. Entries are always finite: the
/// constructors reject NaN and Inf.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><w| for column vectors v, w.
    static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);
    /// |i><j| in dimension n.
    static ComplexMatrix basis_outer(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max |a_ij|
    double max_abs() const;
    bool all_finite() const;
    bool is_zero() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    /// Exact entrywise equality.
    bool operator==(const ComplexMatrix &other) const = default;

    /// Entrywise |a - b| <= tol.abs_eps, dimensions equal.
    bool approx_equal(const ComplexMatrix &other, Tolerance tol = {}) const;

    std::string to_string(int precision = 6) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
std::vector<Complex> operator*(const ComplexMatrix &m, std::span<const Complex> v);

/// Largest entrywise absolute difference; throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Integer power of a square matrix, n >= 0.
ComplexMatrix matrix_power(const ComplexMatrix &m, unsigned n);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |m - m†| over entries. Throws NotSquare.
double hermiticity_deviation(const ComplexMatrix &m);

/// Eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi).
/// Throws NotSquare, or NotHermitian when hermiticity_deviation(m) > tol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, Tolerance tol = {});

/// Trace norm of a Hermitian matrix: sum of |eigenvalue|.
double trace_norm(const ComplexMatrix &m, Tolerance tol = {});

}  // namespace qflip
