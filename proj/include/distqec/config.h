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


#ifndef DISTQEC_CONFIG_H
#define DISTQEC_CONFIG_H

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distqec/distnet.h"

namespace distqec {

/// Bad configuration text or value. Maps to exit code 2.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct SweepAxis {
    std::string key;
    std::vector<double> values;
};

/// Experiment description.
///
/// Text form is one `key = value` per line; '#' starts a comment. Keys:
///
///   name, code, node_preset, ec_mode, p_success, t_attempt, bell_error,
///   p_mem, p1, p2, p_meas, p (sets all five noise rates), ec_cycle_time,
///   max_attempts, fixed_ec_cycles, swap_error, swap_time, detectors, seed,
///   trials, workers, records (JSON-lines path), summary (JSON path),
///   sweep_out (CSV path)
///
/// `sweep.<key> = v1, v2, ...` adds a sweep axis over a numeric key (at most
/// two axes). Later lines override earlier ones.
struct ExperimentConfig {
    std::string name = "experiment";
    BellPrepSetup setup;
    size_t detectors = 1;
    uint64_t seed = 1;
    uint64_t trials = 1000;
    /// Worker threads; 0 picks the hardware concurrency.
    size_t workers = 1;
    std::string records_path;
    std::string summary_path;
    std::string sweep_path;
    std::vector<SweepAxis> axes;

    void validate() const;
};

/// Keys accepted by set_config_key.
const std::vector<std::string> &config_keys();
/// True for keys whose values are numbers (and so may be swept).
bool is_numeric_config_key(std::string_view key);

/// Assigns one key. Throws ConfigError naming the key on unknown keys or bad
/// values.
void set_config_key(ExperimentConfig &config, std::string_view key, std::string_view value);

/// Parses the text form; errors carry "<source> line N: ...".
ExperimentConfig parse_config(std::string_view text, const std::string &source = "config");
ExperimentConfig load_config(const std::string &path);

/// Applies `<prefix><KEY>` variables (key upper-cased, e.g. DISTQEC_P_MEM).
/// `getenv` is injectable for tests.
void apply_env_overrides(ExperimentConfig &config,
                         const std::function<std::optional<std::string>(const std::string &)> &getenv,
                         const std::string &prefix = "DISTQEC_");
void apply_env_overrides(ExperimentConfig &config, const std::string &prefix = "DISTQEC_");

}  // namespace distqec

#endif
