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

// qflip: closure audits, single channel applications and negativity sweeps
// over Werner states for the qudit flip channel families.
//
//   qflip validate [--family idf,shift] [--d 2,3,4] [--samples 1000] [--seed 7]
//   qflip sweep --family idf --dims 2x3 --i 0 --j 1 --grid 101 --out itf_23.csv
//   qflip apply --family su_idf --dims 2x3 --i 0 --j 2 --p 1 --a 1
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qflip/cli.hpp"
#include "qflip/errors.hpp"

namespace {

using namespace qflip;
using namespace qflip::cli;

struct ExperimentFlags {
    std::string config_path;
    std::string family;
    std::size_t d = 0;
    std::size_t i = 0;
    std::size_t j = 1;
    std::string p;
    double f = 0.0;
    double b = 0.0;
    double t = 1.0;
    std::string weights;
    std::string dims;
    std::string a;
    std::size_t grid = 101;
    std::string target;
    std::string out;
    unsigned threads = 0;
};

void add_experiment_flags(CLI::App *cmd, ExperimentFlags &flags) {
    cmd->add_option("--config", flags.config_path, "JSON config document; flags override its values");
    cmd->add_option("--family", flags.family, "identity|idf|su_idf|full|su_full|shift|damped_shift|shuffled");
    cmd->add_option("--d", flags.d, "channel dimension (must match the target subsystem)");
    cmd->add_option("--i", flags.i, "first flipped basis index");
    cmd->add_option("--j", flags.j, "second flipped basis index");
    cmd->add_option("--p", flags.p, "channel probability: a value or comma separated list (default: grid)");
    cmd->add_option("--f", flags.f, "forward coefficient");
    cmd->add_option("--b", flags.b, "backward coefficient");
    cmd->add_option("--t", flags.t, "damping scale for damped_shift");
    cmd->add_option("--weights", flags.weights, "comma separated shuffled-shift weights, (d-1)! of them");
    cmd->add_option("--dims", flags.dims, "subsystem dimensions, e.g. 2x3");
    cmd->add_option("--a", flags.a, "Werner parameter: a value or comma separated list (default: grid)");
    cmd->add_option("--grid", flags.grid, "grid resolution on [0, 1]");
    cmd->add_option("--target", flags.target, "subsystem the channel acts on: A or B");
    cmd->add_option("--out", flags.out, "CSV output path ('-' for stdout)");
    cmd->add_option("--threads", flags.threads, "worker threads (0 = hardware concurrency)");
}

SweepConfig resolve(const CLI::App *cmd, const ExperimentFlags &flags) {
    SweepConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) throw Error(ErrorCode::InvalidConfig, "cannot read config '" + flags.config_path + "'");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorCode::InvalidConfig, std::string("malformed JSON config: ") + e.what());
        }
        config = sweep_config_from_json(doc);
    }
    auto given = [&](const char *name) { return cmd->count(name) > 0; };
    if (given("--family")) config.family = parse_family(flags.family);
    if (given("--d")) config.d = flags.d;
    if (given("--i")) config.params.i = flags.i;
    if (given("--j")) config.params.j = flags.j;
    if (given("--p")) config.p_values = parse_real_list(flags.p);
    if (given("--f")) config.params.f = flags.f;
    if (given("--b")) config.params.b = flags.b;
    if (given("--t")) config.params.t = flags.t;
    if (given("--weights")) config.params.weights = parse_real_list(flags.weights);
    if (given("--dims")) std::tie(config.d_A, config.d_B) = parse_dims(flags.dims);
    if (given("--a")) config.a_values = parse_real_list(flags.a);
    if (given("--grid")) config.grid = flags.grid;
    if (given("--target")) {
        if (flags.target == "A") {
            config.target = Subsystem::A;
        } else if (flags.target == "B") {
            config.target = Subsystem::B;
        } else {
            throw Error(ErrorCode::InvalidConfig, "--target must be A or B");
        }
    }
    if (given("--out")) config.output_path = flags.out;
    if (given("--threads")) config.threads = flags.threads;
    return config;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qudit flip channels: closure audits, applications and negativity sweeps"};
    app.require_subcommand(1);

    auto *validate = app.add_subcommand("validate", "closure audit over seeded random parameter draws");
    std::string families = "all";
    std::string dims = "2,3,4,5,6";
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    validate->add_option("--family", families, "comma separated families, or 'all'");
    validate->add_option("--d", dims, "comma separated qudit dimensions");
    validate->add_option("--samples", samples, "random draws per family and dimension");
    validate->add_option("--seed", seed, "RNG seed");

    ExperimentFlags sweep_flags;
    auto *sweep = app.add_subcommand("sweep", "negativity over an (a, p) grid, written as CSV");
    add_experiment_flags(sweep, sweep_flags);

    ExperimentFlags apply_flags;
    auto *apply_cmd = app.add_subcommand("apply", "apply one channel to one Werner state");
    add_experiment_flags(apply_cmd, apply_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*validate) {
            ValidateOptions options;
            options.samples = samples;
            options.seed = seed;
            if (families != "all") {
                options.families.clear();
                std::string_view rest = families;
                while (true) {
                    const auto comma = rest.find(',');
                    options.families.push_back(parse_family(rest.substr(0, comma)));
                    if (comma == std::string_view::npos) break;
                    rest.remove_prefix(comma + 1);
                }
            }
            options.dims.clear();
            for (double d : parse_real_list(dims)) {
                if (d < 2 || d != static_cast<double>(static_cast<std::size_t>(d))) {
                    throw Error(ErrorCode::InvalidConfig, "--d entries must be integers >= 2");
                }
                options.dims.push_back(static_cast<std::size_t>(d));
            }
            return cmd_validate(options, std::cout, std::cerr);
        }
        if (*sweep) return cmd_sweep(resolve(sweep, sweep_flags), std::cerr);
        if (*apply_cmd) return cmd_apply(resolve(apply_cmd, apply_flags), std::cout, std::cerr);
    } catch (const Error &e) {
        std::cerr << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitConfigError;
}
