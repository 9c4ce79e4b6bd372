// Copyright 2026 The distqec Authors
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


#include "distqec/config.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace distqec;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    std::string v(trim(value));
    char *end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d)) {
        throw ConfigError("key '" + std::string(key) + "': expected a number, got '" + v + "'");
    }
    return d;
}

double parse_probability(std::string_view key, std::string_view value) {
    double d = parse_double(key, value);
    if (d < 0 || d > 1) {
        throw ConfigError("key '" + std::string(key) + "': must lie in [0, 1], got '" + std::string(trim(value)) +
                          "'");
    }
    return d;
}

double parse_nonnegative(std::string_view key, std::string_view value) {
    double d = parse_double(key, value);
    if (d < 0) {
        throw ConfigError("key '" + std::string(key) + "': must be non-negative, got '" + std::string(trim(value)) +
                          "'");
    }
    return d;
}

uint64_t parse_count(std::string_view key, std::string_view value) {
    double d = parse_double(key, value);
    if (d < 0 || d != std::floor(d) || d > 1e18) {
        throw ConfigError("key '" + std::string(key) + "': expected a non-negative integer, got '" +
                          std::string(trim(value)) + "'");
    }
    return static_cast<uint64_t>(d);
}

const std::vector<std::string> kNumeric = {
    "p_success", "t_attempt", "bell_error", "p_mem",     "p1",        "p2",      "p_meas",  "p",
    "ec_cycle_time", "max_attempts", "fixed_ec_cycles", "swap_error", "swap_time", "detectors", "seed", "trials",
    "workers"};

}  // namespace

const std::vector<std::string> &distqec::config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k = {"name", "code", "node_preset", "ec_mode", "records", "summary", "sweep_out"};
        k.insert(k.end(), kNumeric.begin(), kNumeric.end());
        return k;
    }();
    return keys;
}

bool distqec::is_numeric_config_key(std::string_view key) {
    return std::find(kNumeric.begin(), kNumeric.end(), key) != kNumeric.end();
}

void distqec::set_config_key(ExperimentConfig &c, std::string_view key, std::string_view raw) {
    std::string value(trim(raw));
    auto &s = c.setup;
    try {
        if (key == "name") {
            c.name = value;
        } else if (key == "code") {
            s.code = code_by_name(value).name;
        } else if (key == "node_preset") {
            s.preset = node_preset_by_name(value);
        } else if (key == "ec_mode") {
            s.ec_mode = ec_mode_by_name(value);
        } else if (key == "records") {
            c.records_path = value;
        } else if (key == "summary") {
            c.summary_path = value;
        } else if (key == "sweep_out") {
            c.sweep_path = value;
        } else if (key == "p_success") {
            s.channel.p_success = parse_probability(key, value);
        } else if (key == "t_attempt") {
            s.channel.t_attempt = parse_nonnegative(key, value);
        } else if (key == "bell_error") {
            s.channel.bell_error = parse_probability(key, value);
        } else if (key == "p_mem") {
            s.noise.p_mem = parse_probability(key, value);
        } else if (key == "p1") {
            s.noise.p1 = parse_probability(key, value);
        } else if (key == "p2") {
            s.noise.p2 = parse_probability(key, value);
        } else if (key == "p_meas") {
            s.noise.p_meas = parse_probability(key, value);
        } else if (key == "p") {
            double p = parse_probability(key, value);
            s.noise = ErrorModel::uniform(p);
            s.channel.bell_error = p;
        } else if (key == "ec_cycle_time") {
            s.ec_cycle_time = parse_nonnegative(key, value);
        } else if (key == "max_attempts") {
            s.max_attempts = parse_count(key, value);
        } else if (key == "fixed_ec_cycles") {
            if (value == "none" || value == "auto") {
                s.fixed_ec_cycles.reset();
            } else {
                s.fixed_ec_cycles = parse_count(key, value);
            }
        } else if (key == "swap_error") {
            s.swap_error = parse_probability(key, value);
        } else if (key == "swap_time") {
            s.swap_time = parse_nonnegative(key, value);
        } else if (key == "detectors") {
            c.detectors = parse_count(key, value);
        } else if (key == "seed") {
            c.seed = parse_count(key, value);
        } else if (key == "trials") {
            c.trials = parse_count(key, value);
        } else if (key == "workers") {
            c.workers = parse_count(key, value);
        } else {
            throw ConfigError("unknown key '" + std::string(key) + "'");
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError("key '" + std::string(key) + "': " + e.what());
    }
}

void ExperimentConfig::validate() const {
    if (trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    if (detectors < 1) {
        throw ConfigError("detectors must be at least 1");
    }
    if (axes.size() > 2) {
        throw ConfigError("at most two sweep axes are supported");
    }
    try {
        setup.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

ExperimentConfig distqec::parse_config(std::string_view text, const std::string &source) {
    ExperimentConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        number++;
        auto hash = line.find('#');
        std::string_view body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) {
            continue;
        }
        auto where = source + " line " + std::to_string(number) + ": ";
        auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(where + "expected 'key = value'");
        }
        auto key = trim(body.substr(0, eq));
        auto value = trim(body.substr(eq + 1));
        try {
            if (key.starts_with("sweep.")) {
                auto target = std::string(key.substr(6));
                if (std::find(config_keys().begin(), config_keys().end(), target) == config_keys().end()) {
                    throw ConfigError("sweep over unknown key '" + target + "'");
                }
                if (!is_numeric_config_key(target)) {
                    throw ConfigError("sweep over non-numeric key '" + target + "'");
                }
                SweepAxis axis{target, {}};
                std::string_view rest = value;
                while (!rest.empty()) {
                    auto comma = rest.find(',');
                    auto item = trim(rest.substr(0, comma));
                    axis.values.push_back(parse_double(target, item));
                    // Validate each value against the key's own rules.
                    ExperimentConfig probe = c;
                    set_config_key(probe, target, item);
                    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                }
                if (axis.values.empty()) {
                    throw ConfigError("sweep over '" + target + "' has no values");
                }
                auto same = std::find_if(c.axes.begin(), c.axes.end(),
                                         [&](const SweepAxis &a) { return a.key == target; });
                if (same != c.axes.end()) {
                    *same = axis;
                } else {
                    c.axes.push_back(axis);
                }
                if (c.axes.size() > 2) {
                    throw ConfigError("at most two sweep axes are supported");
                }
            } else {
                set_config_key(c, key, value);
            }
        } catch (const ConfigError &e) {
            throw ConfigError(where + e.what());
        }
    }
    return c;
}

ExperimentConfig distqec::load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

void distqec::apply_env_overrides(ExperimentConfig &config,
                                  const std::function<std::optional<std::string>(const std::string &)> &getenv,
                                  const std::string &prefix) {
    for (const auto &key : config_keys()) {
        std::string var = prefix;
        for (char ch : key) {
            var += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        }
        if (auto v = getenv(var)) {
            try {
                set_config_key(config, key, *v);
            } catch (const ConfigError &e) {
                throw ConfigError("environment " + var + ": " + e.what());
            }
        }
    }
}

void distqec::apply_env_overrides(ExperimentConfig &config, const std::string &prefix) {
    apply_env_overrides(
        config,
        [](const std::string &name) -> std::optional<std::string> {
            const char *v = std::getenv(name.c_str());
            if (!v) {
                return std::nullopt;
            }
            return std::string(v);
        },
        prefix);
}
