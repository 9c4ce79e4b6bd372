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


#ifndef DISTQEC_HARNESS_H
#define DISTQEC_HARNESS_H

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "distqec/config.h"
#include "distqec/distnet.h"
#include "distqec/noise.h"
#include "distqec/verify.h"

namespace distqec {

struct Interval {
    double low = 0;
    double high = 0;
};

/// Wilson score interval for k successes in n trials at normal quantile z.
Interval wilson_interval(uint64_t k, uint64_t n, double z = 1.959963984540054);

struct SummaryStatistics {
    std::string name;
    uint64_t trials = 0;
    uint64_t aborted = 0;
    uint64_t logical_errors = 0;
    /// Logical errors over completed (non-aborted) trials.
    double logical_error_rate = 0;
    Interval logical_error_interval;
    double abort_rate = 0;
    double mean_link_wait = 0;
    double p50_link_wait = 0;
    double p90_link_wait = 0;
    double mean_ec_cycles = 0;
    double mean_links = 0;
    /// Failed verifications per trial -> number of trials.
    std::map<size_t, uint64_t> retry_histogram;
};

SummaryStatistics summarize(const std::string &name, const std::vector<TrialRecord> &records);

/// One JSON object per line; fields are listed in the README.
std::string trial_record_json(const TrialRecord &record);
std::string summary_json(const SummaryStatistics &summary);

/// Runs config.trials trials of run_timed_bell_prep, in trial order
/// regardless of the number of workers.
std::vector<TrialRecord> run_trials(const ExperimentConfig &config);

/// Runs the trials, writes records (if `records` is non-null) and returns the
/// summary.
SummaryStatistics run_experiment(const ExperimentConfig &config, std::ostream *records = nullptr);

struct SweepCell {
    std::vector<std::pair<std::string, double>> point;
    SummaryStatistics summary;
};

/// Cross product of the sweep axes (one cell without axes).
std::vector<SweepCell> run_sweep(const ExperimentConfig &config);
void write_sweep_csv(std::ostream &out, const std::vector<SweepCell> &cells);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

/// Registry table: name, n, k, d, reduced logical weights, generators.
std::string codes_table();

/// Campaign protocols by name: ft-syndrome, basic-syndrome, interface,
/// ft-joint. Throws std::invalid_argument for unknown names.
std::vector<std::string> campaign_protocols();
Protocol campaign_protocol(const std::string &name, const std::string &code);

std::string verify_report_json(const VerifyReport &report);

}  // namespace distqec

#endif
