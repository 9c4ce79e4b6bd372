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


// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "distqec/codes.h"
#include "distqec/config.h"
#include "distqec/distnet.h"
#include "distqec/fault_tolerance.h"
#include "distqec/harness.h"
#include "distqec/verify.h"

using namespace distqec;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string first_violation(const VerifyReport &r) {
    std::ostringstream s;
    s << r.checks << " checks, " << r.violations.size() << " violations";
    if (!r.violations.empty()) {
        s << " (" << r.violations[0] << ")";
    }
    for (const auto &n : r.notes) {
        s << "; " << n;
    }
    return s.str();
}

Outcome from_report(const VerifyReport &r) {
    return {r.passed(), first_violation(r)};
}

Outcome five_qubit_code_corrects_single_errors() {
    const auto &code = code_513();
    std::set<uint32_t> syndromes;
    size_t corrected = 0;
    std::vector<uint32_t> data{0, 1, 2, 3, 4};
    for (uint32_t q = 0; q < 5; q++) {
        for (char p : {'X', 'Y', 'Z'}) {
            Rng rng(q * 3 + static_cast<uint32_t>(p));
            Processor proc(6, rng);
            encode_zero(proc, code, data);
            proc.correct(p, q);
            auto rec = ec_cycle_basic(proc, code, data, 5);
            if (rec.bits != 0) {
                syndromes.insert(rec.bits);
            }
            bool ok = proc.peek(on_block(6, code.logical_z[0], data)) == 1;
            for (const auto &g : code.generators) {
                ok = ok && proc.peek(on_block(6, g, data)) == 1;
            }
            corrected += ok;
        }
    }
    std::ostringstream s;
    s << syndromes.size() << " distinct nonzero syndromes, " << corrected << "/15 corrected";
    return {syndromes.size() == 15 && corrected == 15, s.str()};
}

Outcome resource_ledgers() {
    std::vector<size_t> totals{NodeSpec::make(NodePreset::NonFt, "513").ledger_total(),
                               NodeSpec::make(NodePreset::FtLocalSequential, "513").ledger_total(),
                               NodeSpec::make(NodePreset::FullFt, "513").ledger_total(),
                               NodeSpec::make(NodePreset::SteaneChip, "steane713").ledger_total()};
    bool ok = totals == std::vector<size_t>{7, 10, 14, 39};
    ok = ok && ancilla_count(3, 1) == 4 && ancilla_count(3, 2) == 10;

    BellPrepSetup setup;
    setup.preset = NodePreset::FullFt;
    setup.ec_mode = EcMode::Ft;
    size_t checked = 0, bad = 0;
    for (double p : {0.0, 0.01}) {
        setup.noise = ErrorModel::uniform(p);
        setup.channel.bell_error = p;
        for (uint64_t t = 0; t < 300; t++) {
            auto r = run_timed_bell_prep(setup, 41, t);
            if (r.aborted) {
                continue;
            }
            checked++;
            size_t attempts = r.joint_repetitions.size() + r.verification_retries;
            bad += r.links_consumed != 2 * attempts;
            if (p == 0) {
                bad += r.verification_retries != 0;
            }
        }
    }
    ok = ok && checked > 0 && bad == 0;
    std::ostringstream s;
    s << "ions " << totals[0] << "/" << totals[1] << "/" << totals[2] << "/" << totals[3] << ", ancilla_count "
      << ancilla_count(3, 1) << "," << ancilla_count(3, 2) << ", 2 links per interface attempt in " << checked - bad
      << "/" << checked << " trials";
    return {ok, s.str()};
}

Outcome distance_three_scaling() {
    const std::vector<double> ps{1e-3, 3e-3, 1e-2};
    std::vector<double> rates;
    std::ostringstream s;
    for (double p : ps) {
        auto c = parse_config(
            "node_preset = full-ft\n"
            "ec_mode = ft\n"
            "p_success = 1\n"
            "t_attempt = 1\n"
            "ec_cycle_time = 10\n"
            "trials = 100000\n"
            "seed = 2026\n");
        std::ostringstream pv;
        pv << p;
        set_config_key(c, "p", pv.str());
        auto summary = run_experiment(c);
        rates.push_back(summary.logical_error_rate);
        s << "p=" << p << " rate=" << summary.logical_error_rate << " [" << summary.logical_error_interval.low << ", "
          << summary.logical_error_interval.high << "]; ";
    }
    for (double r : rates) {
        if (r <= 0) {
            s << "zero rate, slope undefined";
            return {false, s.str()};
        }
    }
    double slope = log_log_slope(ps, rates);
    s << "slope " << slope;
    return {slope >= 1.8, s.str()};
}

Outcome link_statistics() {
    auto c = parse_config(
        "p_success = 0.01\n"
        "t_attempt = 1\n"
        "ec_cycle_time = 1000000\n"
        "trials = 100000\n"
        "seed = 8\n");
    std::ostringstream first, second;
    auto s1 = run_experiment(c, &first);
    auto s2 = run_experiment(c, &second);
    bool identical = first.str() == second.str() && summary_json(s1) == summary_json(s2);
    double expected = c.setup.channel.t_attempt / c.setup.channel.p_success;
    double rel = std::abs(s1.mean_link_wait - expected) / expected;
    std::ostringstream s;
    s << "mean wait " << s1.mean_link_wait << " vs " << expected << " (" << rel * 100 << "%), reruns "
      << (identical ? "identical" : "differ");
    return {rel <= 0.05 && identical, s.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "five-qubit code single-error correction", 1, five_qubit_code_corrects_single_errors},
        {2, "CZ by operator measurement", 10, [] { return from_report(verify_cz()); }},
        {3, "encoded Bell preparation", 1, [] { return from_report(verify_bellprep()); }},
        {4, "interface ancilla soundness", 30, [] { return from_report(verify_interface()); }},
        {5, "fault-tolerant syndrome extraction", 300, [] { return from_report(verify_ft_syndrome()); }},
        {6, "resource ledgers", 60, resource_ledgers},
        {7, "distance-3 noise scaling", 600, distance_three_scaling},
        {8, "link-channel statistics", 60, link_statistics},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.budget_seconds;
        bool pass = out.pass && in_time;
        failures += !pass;
        std::printf("criterion %d %s: %s (%.2fs of %.0fs%s) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                    c.budget_seconds, in_time ? "" : ", over budget", out.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
