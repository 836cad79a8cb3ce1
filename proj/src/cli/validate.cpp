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

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>

#include "qflip/cli.hpp"
#include "qflip/errors.hpp"
#include "qflip/qudit_ops.hpp"

namespace qflip::cli {

namespace {

// Draws are built from raw engine output so reports are identical across
// standard libraries (distribution objects are implementation-defined).
class Draw {
  public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  private:
    std::mt19937_64 engine_;
};

std::vector<double> random_simplex(Draw &draw, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto &x : w) {
        x = draw.unit() + 1e-3;
        sum += x;
    }
    for (auto &x : w) x /= sum;
    return w;
}

KrausChannel random_channel(ChannelFamily family, std::size_t d, Draw &draw) {
    switch (family) {
        case ChannelFamily::Identity:
            return identity_channel(d);
        case ChannelFamily::Idf:
        case ChannelFamily::SuIdf: {
            const std::size_t i = draw.below(d);
            const std::size_t j = (i + 1 + draw.below(d - 1)) % d;
            const double p = draw.unit();
            return family == ChannelFamily::Idf ? idf_channel(d, i, j, p) : su_idf_channel(d, i, j, p);
        }
        case ChannelFamily::Full:
        case ChannelFamily::SuFull: {
            const auto shares = random_simplex(draw, d * (d - 1) / 2);
            const double budget = draw.unit();
            FlipProbabilities probs(d);
            std::size_t k = 0;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) probs.set(i, j, budget * shares[k++]);
            }
            if (family == ChannelFamily::Full) return full_flip_channel(probs);
            // Rescale so the largest row sum equals the budget.
            double max_row = 0.0;
            for (std::size_t i = 0; i < d; ++i) max_row = std::max(max_row, probs.row_sum(i));
            if (max_row > 0.0) {
                const double scale = budget / max_row;
                for (std::size_t i = 0; i + 1 < d; ++i) {
                    for (std::size_t j = i + 1; j < d; ++j) probs.set(i, j, std::min(1.0, probs.get(i, j) * scale));
                }
            }
            return su_full_flip_channel(probs);
        }
        case ChannelFamily::Shift: {
            const double p = draw.unit();
            const double f = draw.unit();
            return shift_channel(d, p, f, 1.0 - f);
        }
        case ChannelFamily::DampedShift: {
            const double p = draw.unit();
            const double t = draw.unit();
            const double f = t * draw.unit();
            return damped_shift_channel(d, p, f, t - f, t);
        }
        case ChannelFamily::Shuffled: {
            const double p = draw.unit();
            std::size_t count = 1;
            for (std::size_t k = 2; k < d; ++k) count *= k;
            return shuffled_shift_channel(d, p, random_simplex(draw, count));
        }
    }
    throw Error(ErrorCode::UnknownFamily, "unhandled channel family");
}

}  // namespace

ValidateReport run_validate(const ValidateOptions &options) {
    if (options.samples == 0) throw Error(ErrorCode::InvalidConfig, "samples must be >= 1");
    if (options.families.empty()) throw Error(ErrorCode::InvalidConfig, "no channel families selected");
    for (std::size_t d : options.dims) {
        if (d < 2) throw Error(ErrorCode::InvalidConfig, "dimensions must be >= 2");
    }
    ValidateReport report;
    Draw draw(options.seed);
    for (ChannelFamily family : options.families) {
        for (std::size_t d : options.dims) {
            if (family == ChannelFamily::Shuffled && d > std::min(options.shuffled_max_d, kMaxCycleDimension)) continue;
            double worst = 0.0;
            for (std::size_t s = 0; s < options.samples; ++s) {
                worst = std::max(worst, validate_closure(random_channel(family, d, draw)));
            }
            report.entries.push_back({family, d, options.samples, worst});
            report.worst = std::max(report.worst, worst);
        }
    }
    return report;
}

std::string format_validate_report(const ValidateReport &report) {
    std::string out = "family,d,samples,max_closure_deviation,status\n";
    char buf[128];
    for (const auto &e : report.entries) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.3e,%s\n", std::string(family_name(e.family)).c_str(), e.d,
                      e.samples, e.max_deviation, e.max_deviation < kValidateThreshold ? "ok" : "FAIL");
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "# worst %.3e against threshold %.0e: %s\n", report.worst, kValidateThreshold,
                  report.passed() ? "PASS" : "FAIL");
    out += buf;
    return out;
}

int cmd_validate(const ValidateOptions &options, std::ostream &out, std::ostream &err) {
    try {
        const auto report = run_validate(options);
        out << format_validate_report(report);
        return report.passed() ? kExitOk : kExitValidationFailure;
    } catch (const Error &e) {
        err << "validate: " << e.what() << '\n';
        return kExitConfigError;
    }
}

}  // namespace qflip::cli
