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

#include "qflip/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qflip/errors.hpp"

namespace qflip {

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::NonFinite, "matrix entry is NaN or Inf");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

Tolerance::Tolerance(double eps) : abs_eps(eps) {
    if (!(eps > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidDimension, "matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidDimension, "matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw Error(ErrorCode::InvalidDimension, "matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::DimensionMismatch, "ragged initializer rows");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    require_finite(m.entries());
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    }
    require_finite(m.entries());
    return m;
}

ComplexMatrix ComplexMatrix::basis_outer(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index outside dimension " + std::to_string(n));
    }
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) z = std::conj(z);
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : entries_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

bool ComplexMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) { return z == Complex{}; });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &z : entries_) z *= scalar;
    return *this;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix &other, Tolerance tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (std::abs(entries_[k] - other.entries_[k]) > tol.abs_eps) return false;
    }
    return true;
}

std::string ComplexMatrix::to_string(int precision) const {
    std::string out;
    char buf[96];
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Complex z = (*this)(r, c);
            // Avoid printing "-0.000000" for values that round to zero.
            const double re = std::abs(z.real()) < 0.5 * std::pow(10.0, -precision) ? 0.0 : z.real();
            const double im = std::abs(z.imag()) < 0.5 * std::pow(10.0, -precision) ? 0.0 : z.imag();
            std::snprintf(buf, sizeof buf, "%s%.*f%+.*fi", c == 0 ? "" : "  ", precision, re, precision, im);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

std::vector<Complex> operator*(const ComplexMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector product dimensions differ");
    }
    std::vector<Complex> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
    return m;
}

ComplexMatrix matrix_power(const ComplexMatrix &m, unsigned n) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "matrix_power of non-square matrix");
    ComplexMatrix out = ComplexMatrix::identity(m.rows());
    for (unsigned k = 0; k < n; ++k) out = out * m;
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

double hermiticity_deviation(const ComplexMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "hermiticity check on non-square matrix");
    double dev = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            dev = std::max(dev, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return dev;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, Tolerance tol) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "eigenvalues of non-square matrix");
    const double dev = hermiticity_deviation(m);
    if (dev > tol.abs_eps) {
        throw Error(ErrorCode::NotHermitian, "max |m - m^dagger| = " + std::to_string(dev));
    }

    const std::size_t n = m.rows();
    // Work on the exactly Hermitian part.
    ComplexMatrix a = m;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    const double scale = a.frobenius_norm();
    const double target = 1e-14 * scale;
    auto off_diagonal_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * std::norm(a(r, c));
        }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0 && off_diagonal_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // Phase D = diag(1, e^{-i phi}) makes the (p,q) block real symmetric,
                // then a real rotation [[c, s], [-s, c]] diagonalizes it.
                const Complex phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // U restricted to (p,q): [[c, s], [-s conj(phase), c conj(phase)]].
                const Complex upp = c;
                const Complex upq = s;
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
    std::sort(values.begin(), values.end());
    return values;
}

double trace_norm(const ComplexMatrix &m, Tolerance tol) {
    double s = 0.0;
    for (double v : hermitian_eigenvalues(m, tol)) s += std::abs(v);
    return s;
}

}  // namespace qflip
