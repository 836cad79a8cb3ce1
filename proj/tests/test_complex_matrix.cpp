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

#include "qflip/complex_matrix.hpp"
#include "qflip/errors.hpp"
#include "qflip/qudit_ops.hpp"
#include "support/random.hpp"

using namespace qflip;
using qflip::testing::Rng;

namespace {

const Complex I{0.0, 1.0};

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected qflip::Error");
    return ErrorCode::InvalidConfig;
}

// Definition-by-loops oracle for the Kronecker product.
ComplexMatrix kron_oracle(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

}  // namespace

TEST_CASE("construction rejects bad shapes and non-finite entries") {
    CHECK(code_of([] { ComplexMatrix(0, 3); }) == ErrorCode::InvalidDimension);
    CHECK(code_of([] { ComplexMatrix(2, 2, std::vector<Complex>(3)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { ComplexMatrix(1, 1, {Complex{NAN, 0.0}}); }) == ErrorCode::NonFinite);
    CHECK(code_of([] { ComplexMatrix({{1.0, 2.0}, {3.0}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("kron") {
    SUBCASE("identity times identity") { CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6)); }

    SUBCASE("sigma_x times identity is the block anti-diagonal permutation") {
        const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
        const ComplexMatrix expected{{0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}};
        CHECK(kron(sx, ComplexMatrix::identity(2)) == expected);
    }

    SUBCASE("lambda1 times lambda6 against the loop oracle") {
        const auto gm = gellmann_matrices(3);
        CHECK(kron(gm[0], gm[5]) == kron_oracle(gm[0], gm[5]));
        CHECK(kron(gm[1], gm[6]) == kron_oracle(gm[1], gm[6]));
    }

    SUBCASE("rectangular operands") {
        const ComplexMatrix row{{1.0, I}};
        const ComplexMatrix col{{2.0}, {3.0}, {-I}};
        const auto k = kron(row, col);
        CHECK(k.rows() == 3);
        CHECK(k.cols() == 2);
        CHECK(k == kron_oracle(row, col));
    }
}

TEST_CASE("kron properties on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = qflip::testing::random_hermitian(rng, 2);
        const auto b = qflip::testing::random_unitary(rng, 3);
        const auto c = qflip::testing::random_density_matrix(rng, 2);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("hermitian_eigenvalues") {
    SUBCASE("diagonal") {
        const auto ev = hermitian_eigenvalues(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
        REQUIRE(ev.size() == 2);
        CHECK(ev[0] == doctest::Approx(-1.0));
        CHECK(ev[1] == doctest::Approx(1.0));
    }

    SUBCASE("lambda8") {
        const auto ev = hermitian_eigenvalues(gellmann_matrices(3)[7]);
        const double s3 = std::sqrt(3.0);
        CHECK(std::abs(ev[0] + 2.0 / s3) < 1e-14);
        CHECK(std::abs(ev[1] - 1.0 / s3) < 1e-14);
        CHECK(std::abs(ev[2] - 1.0 / s3) < 1e-14);
    }

    SUBCASE("random 2x2 against the characteristic polynomial roots") {
        Rng rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            const auto h = qflip::testing::random_hermitian(rng, 2);
            const double a = h(0, 0).real();
            const double d = h(1, 1).real();
            const double off = std::norm(h(0, 1));
            // λ² - (a+d)λ + (ad - |b|²) = 0
            const double mean = 0.5 * (a + d);
            const double radius = std::sqrt(0.25 * (a - d) * (a - d) + off);
            const auto ev = hermitian_eigenvalues(h);
            CHECK(std::abs(ev[0] - (mean - radius)) < 1e-12);
            CHECK(std::abs(ev[1] - (mean + radius)) < 1e-12);
        }
    }

    SUBCASE("sum equals trace") {
        Rng rng(8);
        for (std::size_t n = 1; n <= 9; ++n) {
            const auto h = qflip::testing::random_hermitian(rng, n);
            const auto ev = hermitian_eigenvalues(h);
            CHECK(std::is_sorted(ev.begin(), ev.end()));
            double s = 0.0;
            for (double v : ev) s += v;
            CHECK(std::abs(s - h.trace().real()) < 1e-9 * static_cast<double>(n));
        }
    }

    SUBCASE("errors") {
        CHECK(code_of([] { hermitian_eigenvalues(ComplexMatrix(2, 3)); }) == ErrorCode::NotSquare);
        CHECK(code_of([] { hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }) == ErrorCode::NotHermitian);
        // Deviation within the tolerance is accepted.
        CHECK_NOTHROW(hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {1.0 + 1e-12, 0.0}}));
        CHECK(code_of([] { hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {1.0 + 1e-6, 0.0}}, Tolerance{1e-8}); }) ==
              ErrorCode::NotHermitian);
    }
}

TEST_CASE("conjugated spectra are recovered") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.index(8);
        std::vector<double> lambda(n);
        for (auto &x : lambda) x = rng.uniform(-2.0, 2.0);
        // Force a degeneracy now and then, as in Werner spectra.
        if (trial % 3 == 0) lambda[1] = lambda[0];
        const auto u = qflip::testing::random_unitary(rng, n);
        const auto m = u * ComplexMatrix::diagonal(lambda) * u.adjoint();
        auto ev = hermitian_eigenvalues(m, Tolerance{1e-9});
        std::sort(lambda.begin(), lambda.end());
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ev[k] - lambda[k]) < 1e-8);
    }
}

TEST_CASE("trace_norm") {
    CHECK(trace_norm(ComplexMatrix::identity(4)) == doctest::Approx(4.0));
    CHECK(trace_norm(ComplexMatrix::zeros(3, 3)) == 0.0);

    // Partial transpose of |Φ+_33><Φ+_33| is SWAP / 3; its eigenvalues are ±1/3.
    ComplexMatrix swap_over_3(9, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) swap_over_3(i * 3 + j, j * 3 + i) = 1.0 / 3.0;
    CHECK(std::abs(trace_norm(swap_over_3) - 3.0) < 1e-12);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = qflip::testing::random_hermitian(rng, 1 + rng.index(6));
        CHECK(trace_norm(h) >= std::abs(h.trace().real()) - 1e-12);
    }
}

TEST_CASE("matrix helpers") {
    const ComplexMatrix m{{1.0, I}, {2.0, 3.0}};
    CHECK(m.adjoint() == ComplexMatrix{{1.0, 2.0}, {-I, 3.0}});
    CHECK(m.transpose() == ComplexMatrix{{1.0, 2.0}, {I, 3.0}});
    CHECK(m.trace() == Complex{4.0});
    CHECK(matrix_power(m, 0) == ComplexMatrix::identity(2));
    CHECK(matrix_power(m, 2) == m * m);
    CHECK(code_of([&] { (void)(m * ComplexMatrix(3, 3)); }) == ErrorCode::DimensionMismatch);
    CHECK(m.approx_equal(m + 1e-12 * ComplexMatrix::identity(2)));
    CHECK_FALSE(m.approx_equal(m + 1e-6 * ComplexMatrix::identity(2)));
}
