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

#include <charconv>
#include <string>

#include "qflip/cli.hpp"
#include "qflip/errors.hpp"
#include "qflip/qudit_ops.hpp"

namespace qflip::cli {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string &what) { throw Error(ErrorCode::InvalidConfig, what); }

double parse_real(std::string_view text) {
    // std::from_chars does not accept a leading '+'.
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        invalid("'" + std::string(text) + "' is not a number");
    }
    return value;
}

std::size_t parse_count(std::string_view text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        invalid("'" + std::string(text) + "' is not a non-negative integer");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double json_real(const json &value, const char *key) {
    if (!value.is_number()) invalid(std::string("'") + key + "' must be a number");
    return value.get<double>();
}

std::size_t json_count(const json &value, const char *key) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        invalid(std::string("'") + key + "' must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

std::vector<double> json_real_list(const json &value, const char *key) {
    if (value.is_number()) return {value.get<double>()};
    if (!value.is_array()) invalid(std::string("'") + key + "' must be a number or an array of numbers");
    std::vector<double> out;
    for (const auto &v : value) out.push_back(json_real(v, key));
    return out;
}

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

std::vector<double> uniform_grid(std::size_t n) {
    if (n < 2) invalid("grid resolution must be >= 2, got " + std::to_string(n));
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(n - 1);
    return grid;
}

std::pair<std::size_t, std::size_t> parse_dims(std::string_view text) {
    const auto sep = text.find_first_of("x,");
    if (sep == std::string_view::npos) invalid("dims must look like '2x3', got '" + std::string(text) + "'");
    return {parse_count(trim(text.substr(0, sep))), parse_count(trim(text.substr(sep + 1)))};
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_real(trim(text.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

SweepConfig sweep_config_from_json(const json &doc) {
    if (!doc.is_object()) invalid("config document must be a JSON object");
    SweepConfig config;
    for (const auto &[key, value] : doc.items()) {
        if (key == "family") {
            if (!value.is_string()) invalid("'family' must be a string");
            config.family = parse_family(value.get<std::string>());
        } else if (key == "d") {
            config.d = json_count(value, "d");
        } else if (key == "i") {
            config.params.i = json_count(value, "i");
        } else if (key == "j") {
            config.params.j = json_count(value, "j");
        } else if (key == "p") {
            config.p_values = json_real_list(value, "p");
        } else if (key == "f") {
            config.params.f = json_real(value, "f");
        } else if (key == "b") {
            config.params.b = json_real(value, "b");
        } else if (key == "t") {
            config.params.t = json_real(value, "t");
        } else if (key == "weights") {
            config.params.weights = json_real_list(value, "weights");
        } else if (key == "dims") {
            if (value.is_string()) {
                std::tie(config.d_A, config.d_B) = parse_dims(value.get<std::string>());
            } else if (value.is_array() && value.size() == 2) {
                config.d_A = json_count(value[0], "dims");
                config.d_B = json_count(value[1], "dims");
            } else {
                invalid("'dims' must be \"d_Axd_B\" or [d_A, d_B]");
            }
        } else if (key == "a") {
            config.a_values = json_real_list(value, "a");
        } else if (key == "grid") {
            config.grid = json_count(value, "grid");
        } else if (key == "target") {
            const std::string t = value.is_string() ? value.get<std::string>() : "";
            if (t == "A") {
                config.target = Subsystem::A;
            } else if (t == "B") {
                config.target = Subsystem::B;
            } else {
                invalid("'target' must be \"A\" or \"B\"");
            }
        } else if (key == "out") {
            if (!value.is_string()) invalid("'out' must be a string");
            config.output_path = value.get<std::string>();
        } else if (key == "threads") {
            config.threads = static_cast<unsigned>(json_count(value, "threads"));
        } else {
            invalid("unknown config key '" + key + "'");
        }
    }
    return config;
}

json sweep_config_to_json(const SweepConfig &config) {
    json doc;
    doc["family"] = std::string(family_name(config.family));
    if (config.d) doc["d"] = *config.d;
    doc["i"] = config.params.i;
    doc["j"] = config.params.j;
    if (config.params.f) doc["f"] = *config.params.f;
    if (config.params.b) doc["b"] = *config.params.b;
    doc["t"] = config.params.t;
    if (!config.params.weights.empty()) doc["weights"] = config.params.weights;
    doc["dims"] = json::array({config.d_A, config.d_B});
    doc["target"] = config.target == Subsystem::A ? "A" : "B";
    if (!config.a_values.empty()) doc["a"] = config.a_values;
    if (!config.p_values.empty()) doc["p"] = config.p_values;
    doc["grid"] = config.grid;
    return doc;
}

void check_sweep_config(const SweepConfig &config) {
    if (config.d_A < 2 || config.d_B < 2) invalid("subsystem dimensions must be >= 2");
    if (config.grid < 2) invalid("grid resolution must be >= 2");
    const std::size_t target_dim = config.target == Subsystem::A ? config.d_A : config.d_B;
    if (config.d && *config.d != target_dim) {
        invalid("--d " + std::to_string(*config.d) + " does not match the target subsystem dimension " +
                std::to_string(target_dim));
    }
    for (double a : config.a_values) {
        if (!in_unit_interval(a)) invalid("state parameter a = " + std::to_string(a) + " outside [0, 1]");
    }
    for (double p : config.p_values) {
        if (!in_unit_interval(p)) invalid("channel parameter p = " + std::to_string(p) + " outside [0, 1]");
    }
    const auto ps = config.p_values.empty() ? uniform_grid(config.grid) : config.p_values;
    try {
        for (double p : ps) make_channel(config.family, target_dim, p, config.params);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::InvalidConfig) throw;
        invalid(std::string("channel parameters rejected: ") + e.what());
    }
}

}  // namespace qflip::cli
