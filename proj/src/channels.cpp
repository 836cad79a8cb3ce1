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

#include "qflip/channels.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qflip/errors.hpp"
#include "qflip/qudit_ops.hpp"

namespace qflip {

namespace {

void require_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ProbabilityOutOfRange, std::string(name) + " = " + std::to_string(p) + " not in [0, 1]");
    }
}

std::string format_label(const char *fmt, auto... args) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

// sqrt that tolerates rounding just below zero, e.g. 1 - Σp with Σp = 1 + ε.
double safe_sqrt(double x) { return std::sqrt(x > 0.0 ? x : 0.0); }

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> operators, std::string label)
    : dim_(dim), operators_(std::move(operators)), label_(std::move(label)) {
    if (operators_.empty()) throw Error(ErrorCode::EmptyChannel, "a channel needs at least one Kraus operator");
    for (const auto &k : operators_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "Kraus operator is not " + std::to_string(dim_) + "x" +
                                                          std::to_string(dim_));
        }
    }
}

FlipProbabilities::FlipProbabilities(std::size_t d) : d_(d), upper_(d * (d - 1) / 2, 0.0) {
    if (d < 2) throw Error(ErrorCode::InvalidDimension, "flip probabilities need d >= 2");
}

std::size_t FlipProbabilities::index(std::size_t i, std::size_t j) const {
    if (i >= d_ || j >= d_) throw Error(ErrorCode::IndexOutOfRange, "flip index outside dimension");
    if (i == j) throw Error(ErrorCode::EqualIndices, "p_ii is not a flip probability");
    if (i > j) std::swap(i, j);
    // Row-major packing of the strict upper triangle.
    return i * d_ - i * (i + 1) / 2 + (j - i - 1);
}

FlipProbabilities &FlipProbabilities::set(std::size_t i, std::size_t j, double p) {
    const std::size_t k = index(i, j);
    require_probability(p, "p_ij");
    upper_[k] = p;
    return *this;
}

double FlipProbabilities::get(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }

double FlipProbabilities::total() const {
    double s = 0.0;
    for (double p : upper_) s += p;
    return s;
}

double FlipProbabilities::row_sum(std::size_t i) const {
    double s = 0.0;
    for (std::size_t k = 0; k < d_; ++k) {
        if (k != i) s += get(i, k);
    }
    return s;
}

double validate_closure(const KrausChannel &c) {
    ComplexMatrix sum = ComplexMatrix::zeros(c.dim(), c.dim());
    for (const auto &k : c.operators()) sum += k.adjoint() * k;
    return max_abs_diff(sum, ComplexMatrix::identity(c.dim()));
}

DensityMatrix apply(const KrausChannel &c, const DensityMatrix &rho) {
    if (rho.dimension() != c.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "channel dimension " + std::to_string(c.dim()) +
                                                      " vs state dimension " + std::to_string(rho.dimension()));
    }
    const double closure = validate_closure(c);
    if (closure > kApplyClosureTol) {
        throw Error(ErrorCode::ClosureViolation, "sum K^dagger K deviates from identity by " + std::to_string(closure));
    }
    ComplexMatrix out = ComplexMatrix::zeros(c.dim(), c.dim());
    for (const auto &k : c.operators()) {
        if (k.is_zero()) continue;
        out += k * rho.matrix() * k.adjoint();
    }
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix::trusted(std::move(out), rho.dims());
}

KrausChannel lift_to_subsystem(const KrausChannel &c, std::size_t d_A, std::size_t d_B, Subsystem target) {
    const std::size_t expected = target == Subsystem::A ? d_A : d_B;
    if (c.dim() != expected) {
        throw Error(ErrorCode::DimensionMismatch, "channel dimension " + std::to_string(c.dim()) +
                                                      " does not match target subsystem dimension " +
                                                      std::to_string(expected));
    }
    const ComplexMatrix other = ComplexMatrix::identity(target == Subsystem::A ? d_B : d_A);
    std::vector<ComplexMatrix> lifted;
    lifted.reserve(c.operators().size());
    for (const auto &k : c.operators()) {
        lifted.push_back(target == Subsystem::A ? kron(k, other) : kron(other, k));
    }
    return KrausChannel(d_A * d_B, std::move(lifted), c.label() + (target == Subsystem::A ? " (x) 1" : " on B"));
}

KrausChannel identity_channel(std::size_t d) {
    return KrausChannel(d, {ComplexMatrix::identity(d)}, "identity(d=" + std::to_string(d) + ")");
}

KrausChannel idf_channel(std::size_t d, std::size_t i, std::size_t j, double p) {
    require_probability(p, "p");
    ComplexMatrix flip = pairwise_flip_operator(d, i, j);
    return KrausChannel(d, {std::sqrt(1.0 - p) * ComplexMatrix::identity(d), std::sqrt(p) * flip},
                        format_label("idf(d=%zu,i=%zu,j=%zu,p=%g)", d, i, j, p));
}

KrausChannel su_idf_channel(std::size_t d, std::size_t i, std::size_t j, double p) {
    require_probability(p, "p");
    const ComplexMatrix gamma = gamma_operator(d, i, j);
    ComplexMatrix t = std::sqrt(1.0 - p) * (gamma * gamma);
    for (std::size_t k = 0; k < d; ++k) {
        if (k != i && k != j) t(k, k) = 1.0;
    }
    return KrausChannel(d, {std::move(t), std::sqrt(p) * gamma},
                        format_label("su_idf(d=%zu,i=%zu,j=%zu,p=%g)", d, i, j, p));
}

KrausChannel full_flip_channel(const FlipProbabilities &probs) {
    const std::size_t d = probs.dimension();
    const double total = probs.total();
    if (total > 1.0 + kParameterConstraintTol) {
        throw Error(ErrorCode::ProbabilityBudgetExceeded, "sum of p_ij = " + std::to_string(total) + " exceeds 1");
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(1 + d * (d - 1) / 2);
    ops.push_back(safe_sqrt(1.0 - total) * ComplexMatrix::identity(d));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            ops.push_back(std::sqrt(probs.get(i, j)) * pairwise_flip_operator(d, i, j));
        }
    }
    return KrausChannel(d, std::move(ops), format_label("full(d=%zu,sum_p=%g)", d, total));
}

KrausChannel su_full_flip_channel(const FlipProbabilities &probs) {
    const std::size_t d = probs.dimension();
    ComplexMatrix k0(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const double row = probs.row_sum(i);
        if (row > 1.0 + kParameterConstraintTol) {
            throw Error(ErrorCode::RowBudgetExceeded,
                        "sum_k p_" + std::to_string(i) + "k = " + std::to_string(row) + " exceeds 1");
        }
        k0(i, i) = safe_sqrt(1.0 - row);
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(1 + d * (d - 1) / 2);
    ops.push_back(std::move(k0));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            ops.push_back(std::sqrt(probs.get(i, j)) * gamma_operator(d, i, j));
        }
    }
    return KrausChannel(d, std::move(ops), format_label("su_full(d=%zu)", d));
}

KrausChannel shift_channel(std::size_t d, double p, double f, double b) {
    require_probability(p, "p");
    require_probability(f, "f");
    require_probability(b, "b");
    if (std::abs(f + b - 1.0) >= kParameterConstraintTol) {
        throw Error(ErrorCode::ClosureParameterViolation, "shift channel needs f + b = 1, got " + std::to_string(f + b));
    }
    return KrausChannel(d,
                        {std::sqrt(1.0 - p) * ComplexMatrix::identity(d), std::sqrt(p * f) * forward_operator(d),
                         std::sqrt(p * b) * backward_operator(d)},
                        format_label("shift(d=%zu,p=%g,f=%g,b=%g)", d, p, f, b));
}

KrausChannel damped_shift_channel(std::size_t d, double p, double f, double b, double t) {
    require_probability(p, "p");
    require_probability(t, "t");
    if (!(f >= 0.0) || !(b >= 0.0)) {
        throw Error(ErrorCode::ProbabilityOutOfRange, "f and b must be non-negative");
    }
    if (std::abs(f + b - t) >= kParameterConstraintTol) {
        throw Error(ErrorCode::ClosureParameterViolation,
                    "damped shift channel needs f + b = t, got f + b = " + std::to_string(f + b) +
                        ", t = " + std::to_string(t));
    }
    return KrausChannel(d,
                        {safe_sqrt(1.0 - t * p) * ComplexMatrix::identity(d), std::sqrt(p * f) * forward_operator(d),
                         std::sqrt(p * b) * backward_operator(d)},
                        format_label("damped_shift(d=%zu,p=%g,f=%g,b=%g,t=%g)", d, p, f, b, t));
}

KrausChannel shuffled_shift_channel(std::size_t d, double p, const std::vector<double> &weights, std::size_t max_d) {
    require_probability(p, "p");
    const auto cycles = enumerate_d_cycles(d, max_d);
    if (weights.size() != cycles.size()) {
        throw Error(ErrorCode::WeightNormalizationViolation,
                    "expected " + std::to_string(cycles.size()) + " weights, got " + std::to_string(weights.size()));
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw Error(ErrorCode::WeightNormalizationViolation, "weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) >= kParameterConstraintTol) {
        throw Error(ErrorCode::WeightNormalizationViolation, "weights sum to " + std::to_string(sum) + ", not 1");
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(1 + cycles.size());
    ops.push_back(std::sqrt(1.0 - p) * ComplexMatrix::identity(d));
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        ops.push_back(std::sqrt(p * weights[k]) * permutation_operator(cycles[k]));
    }
    return KrausChannel(d, std::move(ops), format_label("shuffled(d=%zu,p=%g)", d, p));
}

}  // namespace qflip
