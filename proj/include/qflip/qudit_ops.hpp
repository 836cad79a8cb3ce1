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

// Single-qudit operators. Basis convention: |i> is the i-th standard
// coordinate vector, so |i><j| has a single 1 at row i, column j.

#include <cstddef>
#include <vector>

#include "qflip/complex_matrix.hpp"

namespace qflip {

/// Largest dimension accepted by enumerate_d_cycles by default; (d-1)! grows fast.
inline constexpr std::size_t kMaxCycleDimension = 7;

/// A bijection on {0, ..., d-1}. Construction validates the map.
class Permutation {
  public:
    explicit Permutation(std::vector<std::size_t> map);

    static Permutation identity(std::size_t d);

    std::size_t dimension() const noexcept { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_.at(i); }
    const std::vector<std::size_t> &map() const noexcept { return map_; }

    /// (this ∘ other)(i) = this(other(i))
    Permutation compose(const Permutation &other) const;
    /// Smallest k >= 1 with this^k = identity.
    std::size_t order() const;
    bool is_single_cycle() const;

    bool operator==(const Permutation &) const = default;

  private:
    std::vector<std::size_t> map_;
};

/// F_ij = |i><j| + |j><i| + sum_{k != i,j} |k><k|.
ComplexMatrix pairwise_flip_operator(std::size_t d, std::size_t i, std::size_t j);

/// Γ_ij = |i><j| + |j><i|.
ComplexMatrix gamma_operator(std::size_t d, std::size_t i, std::size_t j);

/// Generalized Gell-Mann matrices, d^2 - 1 of them. Order: for each k = 1..d-1,
/// the symmetric and antisymmetric pairs (j, k) for j < k, then the k-th
/// diagonal generator. For d = 3 this is exactly λ1..λ8; for d = 2 the Paulis.
std::vector<ComplexMatrix> gellmann_matrices(std::size_t d);

/// Cyclic successor index (i + 1) mod d.
std::size_t successor(std::size_t d, std::size_t i);
/// Cyclic predecessor index (i - 1) mod d.
std::size_t predecessor(std::size_t d, std::size_t i);

/// sum_i |succ(i)><i|, so forward|i> = |i+1 mod d>.
ComplexMatrix forward_operator(std::size_t d);
/// sum_i |pred(i)><i|, so backward|i> = |i-1 mod d>.
ComplexMatrix backward_operator(std::size_t d);

/// sum_i |p(i)><i|.
ComplexMatrix permutation_operator(const Permutation &p);

/// All (d-1)! single d-cycles on {0..d-1}. Each is written as a cycle
/// (0 c1 c2 ... c_{d-1}) and the list is ordered lexicographically by
/// (c1, ..., c_{d-1}); for d = 3 this yields {forward, backward}.
std::vector<Permutation> enumerate_d_cycles(std::size_t d, std::size_t max_d = kMaxCycleDimension);

}  // namespace qflip
