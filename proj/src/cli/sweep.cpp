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
#include <charconv>
#include <fstream>
#include <iostream>
#include <thread>

#include "qflip/cli.hpp"
#include "qflip/errors.hpp"

namespace qflip::cli {

namespace {

std::string shortest(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    check_sweep_config(config);
    const std::size_t target_dim = config.target == Subsystem::A ? config.d_A : config.d_B;
    const auto as = config.a_values.empty() ? uniform_grid(config.grid) : config.a_values;
    std::vector<double> ps;
    if (config.family == ChannelFamily::Identity) {
        ps = {0.0};
    } else {
        ps = config.p_values.empty() ? uniform_grid(config.grid) : config.p_values;
    }

    std::vector<DensityMatrix> states;
    states.reserve(as.size());
    for (double a : as) states.push_back(werner(WernerSpec::with_phi_plus(config.d_A, config.d_B, a)));
    std::vector<KrausChannel> channels;
    channels.reserve(ps.size());
    for (double p : ps) {
        channels.push_back(lift_to_subsystem(make_channel(config.family, target_dim, p, config.params), config.d_A,
                                             config.d_B, config.target));
    }

    std::vector<SweepRow> rows(as.size() * ps.size());
    auto evaluate = [&](std::size_t idx) {
        const std::size_t ai = idx / ps.size();
        const std::size_t pi = idx % ps.size();
        const auto n = negativity(apply(channels[pi], states[ai]));
        rows[idx] = SweepRow{as[ai], ps[pi], n.raw, n.normalized};
    };

    unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, rows.size()));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < rows.size(); ++idx) evaluate(idx);
        return rows;
    }
    // Each worker writes a disjoint stride of `rows`, so row order is fixed.
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t idx = w; idx < rows.size(); idx += workers) evaluate(idx);
        });
    }
    pool.clear();
    return rows;
}

void write_sweep_csv(std::ostream &out, const SweepConfig &config, const std::vector<SweepRow> &rows) {
    const bool with_p = config.family != ChannelFamily::Identity;
    out << "# qflip " << kToolVersion << " sweep\n";
    out << "# config: " << sweep_config_to_json(config).dump() << '\n';
    out << (with_p ? "a,p,negativity_raw,negativity_normalized\n" : "a,negativity_raw,negativity_normalized\n");
    for (const auto &row : rows) {
        out << shortest(row.a) << ',';
        if (with_p) out << shortest(row.p) << ',';
        out << shortest(row.negativity_raw) << ',' << shortest(row.negativity_normalized) << '\n';
    }
}

int cmd_sweep(const SweepConfig &config, std::ostream &err) {
    std::vector<SweepRow> rows;
    try {
        rows = run_sweep(config);
    } catch (const Error &e) {
        err << "sweep: " << e.what() << '\n';
        return kExitConfigError;
    }
    if (config.output_path.empty() || config.output_path == "-") {
        write_sweep_csv(std::cout, config, rows);
        return std::cout ? kExitOk : kExitConfigError;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        err << "sweep: cannot open '" << config.output_path << "' for writing\n";
        return kExitConfigError;
    }
    write_sweep_csv(file, config, rows);
    file.close();
    if (!file) {
        err << "sweep: failed writing '" << config.output_path << "'\n";
        return kExitConfigError;
    }
    return kExitOk;
}

}  // namespace qflip::cli
