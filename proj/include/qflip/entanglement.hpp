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

#include <vector>

#include "qflip/channels.hpp"
#include "qflip/complex_matrix.hpp"
#include "qflip/states.hpp"

namespace qflip {

/// Eigenvalues of the partial transpose with magnitude below this are
/// treated as zero when collecting negative eigenvalues.
inline constexpr double kNegativeEigenvalueCutoff = 1e-12;

struct NegativityResult {
    /// ½ Σ (|λ| - λ) over the partial-transpose spectrum, i.e. Σ |negative λ|.
    double raw = 0.0;
    /// (||ρ^pt||₁ - 1) / (d - 1), d = min(d_A, d_B).
    double normalized = 0.0;
    std::vector<double> negative_eigenvalues;
};

/// Transposes the indices of one subsystem: <in|ρ^{T_B}|mj> = <ij|ρ|mn>.
/// Throws NotBipartite unless rho carries two subsystem dimensions.
ComplexMatrix partial_transpose(const DensityMatrix &rho, Subsystem target = Subsystem::B);

/// Both negativity forms from one eigendecomposition of the partial transpose.
NegativityResult negativity(const DensityMatrix &rho, Subsystem target = Subsystem::B);

}  // namespace qflip
