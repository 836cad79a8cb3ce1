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

// Test-only generators: random density matrices, Hermitian matrices and
// unitaries built from composed Givens rotations. Deliberately independent of
// the library's own sampling code in src/cli/validate.cpp.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qflip/complex_matrix.hpp"
#include "qflip/states.hpp"

namespace qflip::testing {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

  private:
    std::mt19937_64 engine_;
};

/// Ginibre ensemble: G G† / tr(G G†).
inline ComplexMatrix random_density_matrix(Rng &rng, std::size_t n) {
    ComplexMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) g(r, c) = Complex{rng.normal(), rng.normal()};
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

inline DensityMatrix random_state(Rng &rng, std::vector<std::size_t> dims) {
    std::size_t n = 1;
    for (std::size_t d : dims) n *= d;
    return DensityMatrix(random_density_matrix(rng, n), std::move(dims));
}

inline ComplexMatrix random_hermitian(Rng &rng, std::size_t n) {
    ComplexMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = rng.normal();
        for (std::size_t c = r + 1; c < n; ++c) {
            h(r, c) = Complex{rng.normal(), rng.normal()};
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

/// Product of random complex Givens rotations and a random diagonal phase.
inline ComplexMatrix random_unitary(Rng &rng, std::size_t n, std::size_t rotations = 0) {
    if (rotations == 0) rotations = 4 * n * n;
    ComplexMatrix u = ComplexMatrix::identity(n);
    for (std::size_t k = 0; k < rotations; ++k) {
        const std::size_t p = rng.index(n);
        std::size_t q = rng.index(n - 1);
        if (q >= p) ++q;
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        ComplexMatrix g = ComplexMatrix::identity(n);
        g(p, p) = std::cos(theta);
        g(q, q) = std::cos(theta);
        g(p, q) = -std::sin(theta) * std::polar(1.0, phi);
        g(q, p) = std::sin(theta) * std::polar(1.0, -phi);
        u = g * u;
    }
    ComplexMatrix phases(n, n);
    for (std::size_t i = 0; i < n; ++i) phases(i, i) = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    return phases * u;
}

}  // namespace qflip::testing
