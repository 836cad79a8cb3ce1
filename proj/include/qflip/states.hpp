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

// Density matrices and the bipartite states used in the entanglement study.
//
// Composite index convention: |ij> of a (d_A, d_B) system has flat index
// i * d_B + j. Partial transpose and subsystem lifting both rely on it.

#include <cstddef>
#include <span>
#include <vector>

#include "qflip/complex_matrix.hpp"

namespace qflip {

using StateVector = std::vector<Complex>;

/// Tolerances applied when validating a DensityMatrix.
inline constexpr double kDensityHermitianTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kDensityPositivityTol = 1e-10;
inline constexpr double kNormalizationTol = 1e-12;

class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace and positivity, and that the
    /// product of `dims` equals the matrix dimension. Throws InvalidDensityMatrix.
    DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims);
    /// Single-system state; dims = {matrix.rows()}.
    explicit DensityMatrix(ComplexMatrix matrix);

    /// Skips the spectral checks (shape checks still apply). For results of
    /// operations that preserve the density-matrix properties by construction.
    static DensityMatrix trusted(ComplexMatrix matrix, std::vector<std::size_t> dims);

    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    const std::vector<std::size_t> &dims() const noexcept { return dims_; }
    std::size_t dimension() const noexcept { return matrix_.rows(); }
    bool is_bipartite() const noexcept { return dims_.size() == 2; }

  private:
    struct TrustedTag {};
    DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims, TrustedTag);

    ComplexMatrix matrix_;
    std::vector<std::size_t> dims_;
};

/// |ψ><ψ|. Throws NotNormalized if | ||ψ|| - 1 | > 1e-12.
DensityMatrix pure_density(std::span<const Complex> psi, std::vector<std::size_t> dims);

/// (1/√m) Σ_{i<m} |ii> with m = min(d_A, d_B).
StateVector phi_plus(std::size_t d_A, std::size_t d_B);

struct WernerSpec {
    std::size_t d_A = 2;
    std::size_t d_B = 3;
    double a = 1.0;
    /// Maximally entangled component; must be normalized, length d_A * d_B.
    StateVector psi;

    /// Spec with psi = phi_plus(d_A, d_B).
    static WernerSpec with_phi_plus(std::size_t d_A, std::size_t d_B, double a);
};

/// a |ψ><ψ| + (1 - a)/(d_A d_B) 𝟙.
DensityMatrix werner(const WernerSpec &spec);

}  // namespace qflip
