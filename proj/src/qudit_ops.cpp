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

#include "qflip/qudit_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qflip/errors.hpp"

namespace qflip {

namespace {

void require_dimension(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::InvalidDimension, "qudit dimension must be >= 2, got " + std::to_string(d));
}

void require_pair(std::size_t d, std::size_t i, std::size_t j) {
    require_dimension(d);
    if (i >= d || j >= d) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "indices (" + std::to_string(i) + ", " + std::to_string(j) + ") outside dimension " +
                        std::to_string(d));
    }
    if (i == j) throw Error(ErrorCode::EqualIndices, "a flip needs two distinct basis indices");
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    if (map_.empty()) throw Error(ErrorCode::InvalidPermutation, "empty permutation");
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw Error(ErrorCode::InvalidPermutation, "map is not a bijection on {0..d-1}");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t d) {
    std::vector<std::size_t> map(d);
    std::iota(map.begin(), map.end(), std::size_t{0});
    return Permutation(std::move(map));
}

Permutation Permutation::compose(const Permutation &other) const {
    if (other.dimension() != dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "composing permutations of different size");
    }
    std::vector<std::size_t> out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) out[i] = map_[other.map_[i]];
    return Permutation(std::move(out));
}

std::size_t Permutation::order() const {
    const Permutation id = identity(dimension());
    Permutation power = *this;
    std::size_t k = 1;
    while (!(power == id)) {
        power = power.compose(*this);
        ++k;
    }
    return k;
}

bool Permutation::is_single_cycle() const {
    std::size_t len = 1;
    for (std::size_t i = map_[0]; i != 0; i = map_[i]) ++len;
    return len == dimension();
}

ComplexMatrix pairwise_flip_operator(std::size_t d, std::size_t i, std::size_t j) {
    require_pair(d, i, j);
    ComplexMatrix f = ComplexMatrix::identity(d);
    f(i, i) = 0.0;
    f(j, j) = 0.0;
    f(i, j) = 1.0;
    f(j, i) = 1.0;
    return f;
}

ComplexMatrix gamma_operator(std::size_t d, std::size_t i, std::size_t j) {
    require_pair(d, i, j);
    ComplexMatrix g(d, d);
    g(i, j) = 1.0;
    g(j, i) = 1.0;
    return g;
}

std::vector<ComplexMatrix> gellmann_matrices(std::size_t d) {
    require_dimension(d);
    const Complex I{0.0, 1.0};
    std::vector<ComplexMatrix> out;
    out.reserve(d * d - 1);
    for (std::size_t k = 1; k < d; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            out.push_back(gamma_operator(d, j, k));
            ComplexMatrix anti(d, d);
            anti(j, k) = -I;
            anti(k, j) = I;
            out.push_back(std::move(anti));
        }
        const double norm = std::sqrt(2.0 / static_cast<double>(k * (k + 1)));
        ComplexMatrix diag(d, d);
        for (std::size_t m = 0; m < k; ++m) diag(m, m) = norm;
        diag(k, k) = -static_cast<double>(k) * norm;
        out.push_back(std::move(diag));
    }
    return out;
}

std::size_t successor(std::size_t d, std::size_t i) {
    require_dimension(d);
    if (i >= d) throw Error(ErrorCode::IndexOutOfRange, "basis index outside dimension");
    return i + 1 < d ? i + 1 : 0;
}

std::size_t predecessor(std::size_t d, std::size_t i) {
    require_dimension(d);
    if (i >= d) throw Error(ErrorCode::IndexOutOfRange, "basis index outside dimension");
    return i > 0 ? i - 1 : d - 1;
}

ComplexMatrix forward_operator(std::size_t d) {
    require_dimension(d);
    ComplexMatrix f(d, d);
    for (std::size_t i = 0; i < d; ++i) f(successor(d, i), i) = 1.0;
    return f;
}

ComplexMatrix backward_operator(std::size_t d) {
    require_dimension(d);
    ComplexMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i) b(predecessor(d, i), i) = 1.0;
    return b;
}

ComplexMatrix permutation_operator(const Permutation &p) {
    const std::size_t d = p.dimension();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(p(i), i) = 1.0;
    return m;
}

std::vector<Permutation> enumerate_d_cycles(std::size_t d, std::size_t max_d) {
    require_dimension(d);
    if (d > max_d) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "cycle enumeration limited to d <= " + std::to_string(max_d) + ", got " + std::to_string(d));
    }
    std::vector<std::size_t> tail(d - 1);
    std::iota(tail.begin(), tail.end(), std::size_t{1});

    std::vector<Permutation> cycles;
    do {
        std::vector<std::size_t> map(d);
        std::size_t from = 0;
        for (std::size_t to : tail) {
            map[from] = to;
            from = to;
        }
        map[from] = 0;
        cycles.emplace_back(std::move(map));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return cycles;
}

}  // namespace qflip
