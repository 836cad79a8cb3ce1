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

#include <cstdio>
#include <ostream>

#include "qflip/cli.hpp"
#include "qflip/errors.hpp"

namespace qflip::cli {

ApplyResult run_apply(const SweepConfig &config) {
    if (config.a_values.size() > 1) throw Error(ErrorCode::InvalidConfig, "apply takes a single --a value");
    if (config.family != ChannelFamily::Identity && config.p_values.size() != 1) {
        throw Error(ErrorCode::InvalidConfig, "apply takes exactly one --p value");
    }
    SweepConfig single = config;
    single.a_values = {config.a_values.empty() ? 1.0 : config.a_values.front()};
    if (config.family == ChannelFamily::Identity) single.p_values.clear();
    check_sweep_config(single);

    const std::size_t target_dim = config.target == Subsystem::A ? config.d_A : config.d_B;
    const double p = single.p_values.empty() ? 0.0 : single.p_values.front();
    KrausChannel lifted = lift_to_subsystem(make_channel(config.family, target_dim, p, config.params), config.d_A,
                                            config.d_B, config.target);
    DensityMatrix input = werner(WernerSpec::with_phi_plus(config.d_A, config.d_B, single.a_values.front()));
    DensityMatrix output = apply(lifted, input);
    NegativityResult n = negativity(output);
    return ApplyResult{std::move(lifted), std::move(input), std::move(output), std::move(n)};
}

int cmd_apply(const SweepConfig &config, std::ostream &out, std::ostream &err) {
    try {
        const auto result = run_apply(config);
        char buf[160];
        out << "# channel: " << result.lifted.label() << '\n';
        std::snprintf(buf, sizeof buf, "# state: werner(d_A=%zu,d_B=%zu,a=%g)\n", config.d_A, config.d_B,
                      config.a_values.empty() ? 1.0 : config.a_values.front());
        out << buf;
        out << "output density matrix (" << result.output.dimension() << "x" << result.output.dimension() << "):\n";
        out << result.output.matrix().to_string(6);
        std::snprintf(buf, sizeof buf, "negativity_raw = %.6f\nnegativity_normalized = %.6f\n", result.negativity.raw,
                      result.negativity.normalized);
        out << buf;
        return kExitOk;
    } catch (const Error &e) {
        err << "apply: " << e.what() << '\n';
        return kExitConfigError;
    }
}

}  // namespace qflip::cli
