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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "qflip/channels.hpp"
#include "qflip/entanglement.hpp"
#include "qflip/errors.hpp"
#include "qflip/qudit_ops.hpp"
#include "support/random.hpp"

using namespace qflip;
using qflip::testing::Rng;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected qflip::Error");
    return ErrorCode::InvalidConfig;
}

DensityMatrix werner_state(std::size_t dA, std::size_t dB, double a) { return werner(WernerSpec::with_phi_plus(dA, dB, a)); }

// Werner pt spectrum is a·λ + (1-a)/(dA dB) with λ the pt spectrum of the
// projector: {1/2 x3, -1/2, 0 x2} for (2,3) and {1/3 x6, -1/3 x3} for (3,3).
double werner_raw_oracle(std::size_t dA, double a) {
    if (dA == 2) return std::max(0.0, -(-0.5 * a + (1.0 - a) / 6.0));
    return std::max(0.0, -3.0 * (-a / 3.0 + (1.0 - a) / 9.0));
}

}  // namespace

TEST_CASE("partial_transpose") {
    Rng rng(1);

    SUBCASE("product states: ρ_A ⊗ ρ_B^T with the same spectrum") {
        for (int trial = 0; trial < 20; ++trial) {
            const auto ra = qflip::testing::random_density_matrix(rng, 2);
            const auto rb = qflip::testing::random_density_matrix(rng, 3);
            const DensityMatrix rho(kron(ra, rb), {2, 3});
            const auto pt = partial_transpose(rho);
            CHECK(max_abs_diff(pt, kron(ra, rb.transpose())) < 1e-15);
            CHECK(max_abs_diff(partial_transpose(rho, Subsystem::A), kron(ra.transpose(), rb)) < 1e-15);
            const auto e1 = hermitian_eigenvalues(pt);
            const auto e0 = hermitian_eigenvalues(rho.matrix());
            for (std::size_t k = 0; k < e0.size(); ++k) CHECK(std::abs(e1[k] - e0[k]) < 1e-12);
        }
    }

    SUBCASE("Φ+_23 projector") {
        const auto ev = hermitian_eigenvalues(partial_transpose(pure_density(phi_plus(2, 3), {2, 3})));
        const std::vector<double> expected{-0.5, 0.0, 0.0, 0.5, 0.5, 0.5};
        for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(ev[k] - expected[k]) < 1e-14);
    }

    SUBCASE("involution, Hermitian, unit trace") {
        for (int trial = 0; trial < 50; ++trial) {
            const auto dims = trial % 2 ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{3, 3};
            const auto rho = qflip::testing::random_state(rng, dims);
            for (auto target : {Subsystem::A, Subsystem::B}) {
                const auto pt = partial_transpose(rho, target);
                CHECK(hermiticity_deviation(pt) < 1e-15);
                CHECK(std::abs(pt.trace() - Complex{1.0}) < 1e-14);
                CHECK(partial_transpose(DensityMatrix::trusted(pt, dims), target) == rho.matrix());
            }
        }
    }

    CHECK(code_of([] { partial_transpose(DensityMatrix(0.25 * ComplexMatrix::identity(4))); }) == ErrorCode::NotBipartite);
}

TEST_CASE("negativity examples") {
    Rng rng(2);
    const auto product = DensityMatrix(kron(qflip::testing::random_density_matrix(rng, 2), qflip::testing::random_density_matrix(rng, 3)), {2, 3});
    const auto np = negativity(product);
    CHECK(np.raw == 0.0);
    CHECK(np.normalized < 1e-14);
    CHECK(np.negative_eigenvalues.empty());

    for (int k = 0; k <= 100; ++k) {
        const double a = k / 100.0;
        const auto n23 = negativity(werner_state(2, 3, a));
        CHECK(std::abs(n23.raw - std::max(0.0, (4 * a - 1) / 6)) < 1e-10);
        CHECK(std::abs(n23.raw - werner_raw_oracle(2, a)) < 1e-12);
        const auto n33 = negativity(werner_state(3, 3, a));
        CHECK(std::abs(n33.raw - werner_raw_oracle(3, a)) < 1e-10);
    }

    const auto pure33 = negativity(werner_state(3, 3, 1.0));
    CHECK(std::abs(pure33.normalized - 1.0) < 1e-12);
    CHECK(std::abs(pure33.raw - 1.0) < 1e-12);
    CHECK(pure33.negative_eigenvalues.size() == 3);

    // For min(dA,dB) = 2 the forms differ by a factor 2.
    const auto pure23 = negativity(werner_state(2, 3, 1.0));
    CHECK(std::abs(pure23.raw - 0.5) < 1e-12);
    CHECK(std::abs(pure23.normalized - 1.0) < 1e-12);
}

TEST_CASE("negativity invariants") {
    Rng rng(3);

    SUBCASE("raw equals the sum of the collected negative eigenvalues") {
        for (int trial = 0; trial < 100; ++trial) {
            const auto rho = qflip::testing::random_state(rng, {2, 3});
            const auto n = negativity(rho);
            double s = 0.0;
            for (double v : n.negative_eigenvalues) {
                CHECK(v < -kNegativeEigenvalueCutoff);
                s -= v;
            }
            CHECK(std::abs(n.raw - s) < 1e-12);
            CHECK(n.raw >= 0.0);
            CHECK(n.normalized >= 0.0);
        }
    }

    SUBCASE("separability threshold at a = 1/4") {
        for (std::size_t dA : {2u, 3u}) {
            for (int k = 0; k <= 200; ++k) {
                const double a = k / 200.0;
                const auto n = negativity(werner_state(dA, 3, a));
                if (a <= 0.25) {
                    CHECK(n.raw == 0.0);
                } else if (a > 0.25 + 1e-6) {
                    CHECK(n.raw > 0.0);
                }
            }
        }
    }

    SUBCASE("raw and normalized coincide when min dimension is 3") {
        for (int trial = 0; trial < 50; ++trial) {
            const auto n = negativity(qflip::testing::random_state(rng, {3, 3}));
            CHECK(std::abs(n.raw - n.normalized) < 1e-12);
        }
    }

    SUBCASE("independent of the transposed subsystem") {
        for (int trial = 0; trial < 50; ++trial) {
            const auto rho = qflip::testing::random_state(rng, {2, 3});
            CHECK(std::abs(negativity(rho, Subsystem::A).raw - negativity(rho, Subsystem::B).raw) < 1e-12);
        }
    }

    SUBCASE("local unitary invariance") {
        for (int trial = 0; trial < 50; ++trial) {
            const auto rho = trial % 2 ? werner_state(2, 3, rng.uniform()) : qflip::testing::random_state(rng, {2, 3});
            const auto u = kron(qflip::testing::random_unitary(rng, 2), qflip::testing::random_unitary(rng, 3));
            const auto rotated = DensityMatrix::trusted(u * rho.matrix() * u.adjoint(), {2, 3});
            CHECK(std::abs(negativity(rotated).raw - negativity(rho).raw) < 1e-10);
        }
    }

    CHECK(code_of([] { negativity(DensityMatrix(0.5 * ComplexMatrix::identity(2))); }) == ErrorCode::NotBipartite);
}

TEST_CASE("idf negativity symmetric under p -> 1 - p") {
    Rng rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const bool qubit_qutrit = trial % 2 == 0;
        const std::vector<std::size_t> dims = qubit_qutrit ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{3, 3};
        const auto rho = trial % 3 == 0 ? qflip::testing::random_state(rng, dims) : werner(WernerSpec::with_phi_plus(dims[0], dims[1], rng.uniform()));
        const std::size_t i = rng.index(3);
        const std::size_t j = (i + 1 + rng.index(2)) % 3;
        const double p = rng.uniform();
        const auto lp = lift_to_subsystem(idf_channel(3, i, j, p), dims[0], dims[1], Subsystem::B);
        const auto lq = lift_to_subsystem(idf_channel(3, i, j, 1.0 - p), dims[0], dims[1], Subsystem::B);
        CHECK(std::abs(negativity(apply(lp, rho)).raw - negativity(apply(lq, rho)).raw) < 1e-10);
    }
}

TEST_CASE("shift negativity symmetric under f <-> b on real symmetric states") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dA = trial % 2 ? 2 : 3;
        const auto rho = werner(WernerSpec::with_phi_plus(dA, 3, rng.uniform()));
        const double p = rng.uniform();
        const double f = rng.uniform();
        const auto fb = lift_to_subsystem(shift_channel(3, p, f, 1.0 - f), dA, 3, Subsystem::B);
        const auto bf = lift_to_subsystem(shift_channel(3, p, 1.0 - f, f), dA, 3, Subsystem::B);
        const auto n1 = negativity(apply(fb, rho));
        const auto n2 = negativity(apply(bf, rho));
        CHECK(std::abs(n1.raw - n2.raw) < 1e-10);
        CHECK(std::abs(n1.normalized - n2.normalized) < 1e-10);
    }
}

TEST_CASE("local channels never increase negativity") {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dA = trial % 2 ? 2 : 3;
        const auto rho = werner(WernerSpec::with_phi_plus(dA, 3, rng.uniform()));
        const double before = negativity(rho).raw;
        const double p = rng.uniform();
        const double f = rng.uniform();
        FlipProbabilities probs(3);
        probs.set(0, 1, p / 3).set(0, 2, p / 3).set(1, 2, p / 3);
        for (const auto &c : {idf_channel(3, 0, 2, p), su_idf_channel(3, 1, 2, p), full_flip_channel(probs),
                              su_full_flip_channel(probs), shift_channel(3, p, f, 1 - f),
                              damped_shift_channel(3, p, f / 2, f / 2, f), shuffled_shift_channel(3, p, {f, 1 - f})}) {
            const auto out = apply(lift_to_subsystem(c, dA, 3, Subsystem::B), rho);
            CHECK(negativity(out).raw <= before + 1e-10);
        }
    }
}
