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

#include "qflip/errors.hpp"

namespace qflip {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EqualIndices: return "EqualIndices";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
        case ErrorCode::ProbabilityBudgetExceeded: return "ProbabilityBudgetExceeded";
        case ErrorCode::RowBudgetExceeded: return "RowBudgetExceeded";
        case ErrorCode::ClosureParameterViolation: return "ClosureParameterViolation";
        case ErrorCode::WeightNormalizationViolation: return "WeightNormalizationViolation";
        case ErrorCode::ClosureViolation: return "ClosureViolation";
        case ErrorCode::EmptyChannel: return "EmptyChannel";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

}  // namespace qflip
