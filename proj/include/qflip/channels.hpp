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

// Kraus channels and the qudit flip families.
//
// Parameter validation is strict: out-of-domain parameters throw rather
// than being clamped. Kraus operators that vanish for a given parameter
// choice (e.g. √p F at p = 0) stay in the list so that the shape of a
// family's channel never depends on its parameters.

#include <cstddef>
#include <string>
#include <vector>

#include "qflip/complex_matrix.hpp"
#include "qflip/states.hpp"

namespace qflip {

/// Tolerance on the closure relation enforced by apply().
inline constexpr double kApplyClosureTol = 1e-8;
/// Tolerance on parameter constraints such as f + b = 1.
inline constexpr double kParameterConstraintTol = 1e-12;

class KrausChannel {
  public:
    /// Throws EmptyChannel for an empty list, DimensionMismatch if any
    /// operator is not dim x dim.
    KrausChannel(std::size_t dim, std::vector<ComplexMatrix> operators, std::string label = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ComplexMatrix> &operators() const noexcept { return operators_; }
    const std::string &label() const noexcept { return label_; }

  private:
    std::size_t dim_;
    std::vector<ComplexMatrix> operators_;
    std::string label_;
};

/// Symmetric table of flip probabilities p_ij, 0 <= i < j < d, each in [0, 1].
class FlipProbabilities {
  public:
    explicit FlipProbabilities(std::size_t d);

    std::size_t dimension() const noexcept { return d_; }
    /// Sets p_ij (= p_ji). Throws IndexOutOfRange, EqualIndices, ProbabilityOutOfRange.
    FlipProbabilities &set(std::size_t i, std::size_t j, double p);
    double get(std::size_t i, std::size_t j) const;

    /// Σ_{i<j} p_ij
    double total() const;
    /// Σ_{k != i} p_ik
    double row_sum(std::size_t i) const;

  private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t d_;
    std::vector<double> upper_;
};

enum class Subsystem { A, B };

/// max |Σ K†K - 𝟙| over entries.
double validate_closure(const KrausChannel &c);

/// Λ(ρ) = Σ K ρ K†. Throws DimensionMismatch, or ClosureViolation when the
/// closure deviation exceeds kApplyClosureTol. Zero operators are skipped.
DensityMatrix apply(const KrausChannel &c, const DensityMatrix &rho);

/// Each K becomes 𝟙_A ⊗ K (target B) or K ⊗ 𝟙_B (target A).
KrausChannel lift_to_subsystem(const KrausChannel &c, std::size_t d_A, std::size_t d_B, Subsystem target);

KrausChannel identity_channel(std::size_t d);

/// Individual dit flip: {√(1-p) 𝟙, √p F_ij}.
KrausChannel idf_channel(std::size_t d, std::size_t i, std::size_t j, double p);

/// su(d)-based individual flip: {T_ij, √p Γ_ij} with
/// T_ij = √(1-p) Γ_ij² + Σ_{k != i,j} |k><k|.
KrausChannel su_idf_channel(std::size_t d, std::size_t i, std::size_t j, double p);

/// Full dit flip: {√(1 - Σ p_ij) 𝟙} ∪ {√p_ij F_ij : i < j}.
/// Throws ProbabilityBudgetExceeded if Σ p_ij > 1.
KrausChannel full_flip_channel(const FlipProbabilities &probs);

/// su(d)-based full flip: {Σ_i √(1 - Σ_{k != i} p_ik) |i><i|} ∪ {√p_ij Γ_ij : i < j}.
/// Throws RowBudgetExceeded if some row sum exceeds 1.
KrausChannel su_full_flip_channel(const FlipProbabilities &probs);

/// Shift dit flip: {√(1-p) 𝟙, √(pf) F, √(pb) B}; requires f + b = 1.
KrausChannel shift_channel(std::size_t d, double p, double f, double b);

/// Damped shift dit flip: {√(1-tp) 𝟙, √(pf) F, √(pb) B}; requires f + b = t.
KrausChannel damped_shift_channel(std::size_t d, double p, double f, double b, double t);

/// Shuffled shift: {√(1-p) 𝟙} ∪ {√(p w_j) P_j} over the d-cycles P_j in
/// enumerate_d_cycles order; requires (d-1)! non-negative weights summing to 1.
KrausChannel shuffled_shift_channel(std::size_t d, double p, const std::vector<double> &weights,
                                    std::size_t max_d = 7);

}  // namespace qflip
