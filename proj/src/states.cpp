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

#include "qflip/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qflip/errors.hpp"

namespace qflip {

namespace {

void check_shape(const ComplexMatrix &m, const std::vector<std::size_t> &dims) {
    if (!m.is_square()) throw Error(ErrorCode::InvalidDensityMatrix, "density matrix must be square");
    if (dims.empty()) throw Error(ErrorCode::InvalidDensityMatrix, "subsystem dimensions missing");
    for (std::size_t d : dims) {
        if (d == 0) throw Error(ErrorCode::InvalidDensityMatrix, "zero subsystem dimension");
    }
    const std::size_t product = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
    if (product != m.rows()) {
        throw Error(ErrorCode::InvalidDensityMatrix, "subsystem dimensions multiply to " + std::to_string(product) +
                                                         ", matrix is " + std::to_string(m.rows()));
    }
}

double vector_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims, TrustedTag)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    check_shape(matrix_, dims_);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims)
    : DensityMatrix(std::move(matrix), std::move(dims), TrustedTag{}) {
    const double herm = hermiticity_deviation(matrix_);
    if (herm > kDensityHermitianTol) {
        throw Error(ErrorCode::InvalidDensityMatrix, "not Hermitian, deviation " + std::to_string(herm));
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex{1.0}) > kDensityTraceTol) {
        throw Error(ErrorCode::InvalidDensityMatrix, "trace is not 1");
    }
    const auto eig = hermitian_eigenvalues(matrix_, Tolerance{kDensityHermitianTol});
    if (eig.front() < -kDensityPositivityTol) {
        throw Error(ErrorCode::InvalidDensityMatrix, "negative eigenvalue " + std::to_string(eig.front()));
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, std::vector<std::size_t>{matrix.rows()}) {}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix, std::vector<std::size_t> dims) {
    return DensityMatrix(std::move(matrix), std::move(dims), TrustedTag{});
}

DensityMatrix pure_density(std::span<const Complex> psi, std::vector<std::size_t> dims) {
    const double norm = vector_norm(psi);
    if (std::abs(norm - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::NotNormalized, "state vector norm " + std::to_string(norm));
    }
    return DensityMatrix(ComplexMatrix::outer(psi, psi), std::move(dims));
}

StateVector phi_plus(std::size_t d_A, std::size_t d_B) {
    if (d_A < 2 || d_B < 2) throw Error(ErrorCode::InvalidDimension, "phi_plus needs d_A, d_B >= 2");
    const std::size_t m = std::min(d_A, d_B);
    const double amp = 1.0 / std::sqrt(static_cast<double>(m));
    StateVector psi(d_A * d_B);
    for (std::size_t i = 0; i < m; ++i) psi[i * d_B + i] = amp;
    return psi;
}

WernerSpec WernerSpec::with_phi_plus(std::size_t d_A, std::size_t d_B, double a) {
    return WernerSpec{d_A, d_B, a, phi_plus(d_A, d_B)};
}

DensityMatrix werner(const WernerSpec &spec) {
    if (spec.d_A < 2 || spec.d_B < 2) throw Error(ErrorCode::InvalidDimension, "Werner state needs d_A, d_B >= 2");
    if (!(spec.a >= 0.0 && spec.a <= 1.0)) {
        throw Error(ErrorCode::ProbabilityOutOfRange, "Werner mixing parameter a must lie in [0, 1]");
    }
    const std::size_t n = spec.d_A * spec.d_B;
    if (spec.psi.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "psi length " + std::to_string(spec.psi.size()) + " != d_A*d_B");
    }
    const double norm = vector_norm(spec.psi);
    if (std::abs(norm - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::NotNormalized, "psi norm " + std::to_string(norm));
    }
    ComplexMatrix rho = spec.a * ComplexMatrix::outer(spec.psi, spec.psi);
    const double mixed = (1.0 - spec.a) / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) rho(k, k) += mixed;
    return DensityMatrix(std::move(rho), {spec.d_A, spec.d_B});
}

}  // namespace qflip
