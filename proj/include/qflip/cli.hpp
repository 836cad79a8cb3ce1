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

// Library side of the `qflip` command-line tool: channel-family dispatch,
// the closure audit, the (a, p) negativity sweep and single applications.
// The executable in tools/ only parses flags and calls into here.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qflip/channels.hpp"
#include "qflip/entanglement.hpp"

namespace qflip::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Closure deviation that cmd_validate treats as a failure.
inline constexpr double kValidateThreshold = 1e-10;

enum class ChannelFamily { Identity, Idf, SuIdf, Full, SuFull, Shift, DampedShift, Shuffled };

/// Throws UnknownFamily.
ChannelFamily parse_family(std::string_view name);
std::string_view family_name(ChannelFamily family);
/// The seven flip families (everything except Identity), in a fixed order.
std::vector<ChannelFamily> flip_families();

/// Family-specific parameters other than the swept probability p.
///
/// Unset f/b are resolved as follows. shift: the missing one is 1 minus the
/// other, both missing gives f = b = 1/2. damped_shift: the missing one is
/// t minus the other, both missing gives f = b = t/2. Empty weights for
/// shuffled means uniform weights 1/(d-1)!.
///
/// full and su_full take the single scalar p and spread it uniformly:
/// full uses p_ij = p / (d(d-1)/2), so Σ p_ij = p; su_full uses
/// p_ij = p / (d-1), so every row sums to p.
struct ChannelParams {
    std::size_t i = 0;
    std::size_t j = 1;
    std::optional<double> f;
    std::optional<double> b;
    double t = 1.0;
    std::vector<double> weights;
};

KrausChannel make_channel(ChannelFamily family, std::size_t d, double p, const ChannelParams &params);

struct SweepConfig {
    ChannelFamily family = ChannelFamily::Idf;
    ChannelParams params;
    /// Explicit channel dimension; must equal the target subsystem's when set.
    std::optional<std::size_t> d;
    std::size_t d_A = 2;
    std::size_t d_B = 3;
    Subsystem target = Subsystem::B;
    /// Empty means a uniform grid of `grid` points on [0, 1].
    std::vector<double> a_values;
    std::vector<double> p_values;
    std::size_t grid = 101;
    /// "" or "-" writes to stdout.
    std::string output_path;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// k / (n - 1) for k = 0..n-1. Throws InvalidConfig for n < 2.
std::vector<double> uniform_grid(std::size_t n);

/// Reads a JSON config document. Keys mirror the long flags: family, d, i,
/// j, p, f, b, t, weights, dims, a, grid, target, out, threads. `p` and `a`
/// accept a number or an array; `dims` accepts [d_A, d_B] or "d_AxD_B".
/// Throws InvalidConfig / UnknownFamily.
SweepConfig sweep_config_from_json(const nlohmann::json &doc);
nlohmann::json sweep_config_to_json(const SweepConfig &config);

/// Parses "2x3" or "2,3". Throws InvalidConfig.
std::pair<std::size_t, std::size_t> parse_dims(std::string_view text);
/// Parses a comma separated list of reals. Throws InvalidConfig.
std::vector<double> parse_real_list(std::string_view text);

/// Checks grids, dimensions and that a channel can be built for every p.
/// Throws InvalidConfig naming the violated constraint.
void check_sweep_config(const SweepConfig &config);

struct SweepRow {
    double a = 0.0;
    double p = 0.0;
    double negativity_raw = 0.0;
    double negativity_normalized = 0.0;
};

/// Rows in lexicographic (a, p) order. Grid points are evaluated on up to
/// `config.threads` workers; the result does not depend on the worker count.
std::vector<SweepRow> run_sweep(const SweepConfig &config);

/// Comment lines (`# ...`), the header `a,p,negativity_raw,negativity_normalized`
/// (no p column for the identity family), then one row per grid point.
void write_sweep_csv(std::ostream &out, const SweepConfig &config, const std::vector<SweepRow> &rows);

/// Runs the sweep and writes the CSV. Returns an exit code; diagnostics go to `err`.
int cmd_sweep(const SweepConfig &config, std::ostream &err);

struct ValidateOptions {
    std::vector<ChannelFamily> families = flip_families();
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims = {2, 3, 4, 5, 6};
    /// Dimensions above this are skipped for the shuffled family.
    std::size_t shuffled_max_d = 6;
};

struct ValidateEntry {
    ChannelFamily family;
    std::size_t d;
    std::size_t samples;
    double max_deviation;
};

struct ValidateReport {
    std::vector<ValidateEntry> entries;
    double worst = 0.0;
    bool passed() const { return worst < kValidateThreshold; }
};

/// Draws `samples` random in-domain parameter sets per (family, d), seeded
/// and reproducible, and records the worst closure deviation.
/// Throws InvalidConfig when samples == 0.
ValidateReport run_validate(const ValidateOptions &options);
std::string format_validate_report(const ValidateReport &report);
int cmd_validate(const ValidateOptions &options, std::ostream &out, std::ostream &err);

struct ApplyResult {
    KrausChannel lifted;
    DensityMatrix input;
    DensityMatrix output;
    NegativityResult negativity;
};

/// Applies the configured channel (exactly one p value; Identity needs none)
/// to the Werner state with exactly one a value (defaults to a = 1).
ApplyResult run_apply(const SweepConfig &config);
int cmd_apply(const SweepConfig &config, std::ostream &out, std::ostream &err);

}  // namespace qflip::cli
