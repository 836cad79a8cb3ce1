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

#include <string>

#include "qflip/cli.hpp"
#include "qflip/errors.hpp"
#include "qflip/qudit_ops.hpp"

namespace qflip::cli {

namespace {

struct FamilyName {
    ChannelFamily family;
    std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {ChannelFamily::Identity, "identity"}, {ChannelFamily::Idf, "idf"},
    {ChannelFamily::SuIdf, "su_idf"},      {ChannelFamily::Full, "full"},
    {ChannelFamily::SuFull, "su_full"},    {ChannelFamily::Shift, "shift"},
    {ChannelFamily::DampedShift, "damped_shift"}, {ChannelFamily::Shuffled, "shuffled"},
};

std::size_t factorial(std::size_t n) {
    std::size_t out = 1;
    for (std::size_t k = 2; k <= n; ++k) out *= k;
    return out;
}

}  // namespace

ChannelFamily parse_family(std::string_view name) {
    for (const auto &entry : kFamilyNames) {
        if (entry.name == name) return entry.family;
    }
    throw Error(ErrorCode::UnknownFamily, "unknown channel family '" + std::string(name) + "'");
}

std::string_view family_name(ChannelFamily family) {
    for (const auto &entry : kFamilyNames) {
        if (entry.family == family) return entry.name;
    }
    return "?";
}

std::vector<ChannelFamily> flip_families() {
    return {ChannelFamily::Idf,   ChannelFamily::SuIdf,       ChannelFamily::Full,    ChannelFamily::SuFull,
            ChannelFamily::Shift, ChannelFamily::DampedShift, ChannelFamily::Shuffled};
}

KrausChannel make_channel(ChannelFamily family, std::size_t d, double p, const ChannelParams &params) {
    switch (family) {
        case ChannelFamily::Identity:
            return identity_channel(d);
        case ChannelFamily::Idf:
            return idf_channel(d, params.i, params.j, p);
        case ChannelFamily::SuIdf:
            return su_idf_channel(d, params.i, params.j, p);
        case ChannelFamily::Full:
        case ChannelFamily::SuFull: {
            FlipProbabilities probs(d);
            const double share = family == ChannelFamily::Full ? p / static_cast<double>(d * (d - 1) / 2)
                                                               : p / static_cast<double>(d - 1);
            for (std::size_t i = 0; i + 1 < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) probs.set(i, j, share);
            }
            return family == ChannelFamily::Full ? full_flip_channel(probs) : su_full_flip_channel(probs);
        }
        case ChannelFamily::Shift: {
            double f = 0.5;
            double b = 0.5;
            if (params.f && params.b) {
                f = *params.f;
                b = *params.b;
            } else if (params.f) {
                f = *params.f;
                b = 1.0 - f;
            } else if (params.b) {
                b = *params.b;
                f = 1.0 - b;
            }
            return shift_channel(d, p, f, b);
        }
        case ChannelFamily::DampedShift: {
            const double t = params.t;
            double f = 0.5 * t;
            double b = 0.5 * t;
            if (params.f && params.b) {
                f = *params.f;
                b = *params.b;
            } else if (params.f) {
                f = *params.f;
                b = t - f;
            } else if (params.b) {
                b = *params.b;
                f = t - b;
            }
            return damped_shift_channel(d, p, f, b, t);
        }
        case ChannelFamily::Shuffled: {
            if (!params.weights.empty()) return shuffled_shift_channel(d, p, params.weights);
            if (d > kMaxCycleDimension) {
                throw Error(ErrorCode::DimensionTooLarge, "shuffled channel limited to d <= 7");
            }
            const std::size_t count = factorial(d - 1);
            return shuffled_shift_channel(d, p, std::vector<double>(count, 1.0 / static_cast<double>(count)));
        }
    }
    throw Error(ErrorCode::UnknownFamily, "unhandled channel family");
}

}  // namespace qflip::cli
