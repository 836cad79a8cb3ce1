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

#include "qflip/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "qflip/errors.hpp"

namespace qflip {

ComplexMatrix partial_transpose(const DensityMatrix &rho, Subsystem target) {
    if (!rho.is_bipartite()) throw Error(ErrorCode::NotBipartite, "partial transpose needs a bipartite state");
    const std::size_t dA = rho.dims()[0];
    const std::size_t dB = rho.dims()[1];
    const ComplexMatrix &m = rho.matrix();
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < dA; ++i) {
        for (std::size_t j = 0; j < dB; ++j) {
            for (std::size_t k = 0; k < dA; ++k) {
                for (std::size_t l = 0; l < dB; ++l) {
                    const Complex v = m(i * dB + j, k * dB + l);
                    if (target == Subsystem::B) {
                        out(i * dB + l, k * dB + j) = v;
                    } else {
                        out(k * dB + j, i * dB + l) = v;
                    }
                }
            }
        }
    }
    return out;
}

NegativityResult negativity(const DensityMatrix &rho, Subsystem target) {
    const ComplexMatrix pt = partial_transpose(rho, target);
    const std::size_t d = std::min(rho.dims()[0], rho.dims()[1]);
    if (d < 2) throw Error(ErrorCode::NotBipartite, "negativity needs both subsystem dimensions >= 2");
    const auto spectrum = hermitian_eigenvalues(pt, Tolerance{kDensityHermitianTol});

    NegativityResult result;
    double norm1 = 0.0;
    for (double lambda : spectrum) {
        norm1 += std::abs(lambda);
        if (lambda < -kNegativeEigenvalueCutoff) {
            result.negative_eigenvalues.push_back(lambda);
            result.raw -= lambda;
        }
    }
    if (!result.negative_eigenvalues.empty()) result.normalized = std::max(0.0, (norm1 - 1.0) / static_cast<double>(d - 1));
    return result;
}

}  // namespace qflip
