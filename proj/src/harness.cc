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


#include "distqec/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "distqec/codes.h"
#include "distqec/protocols.h"
#include "json.hpp"

using namespace distqec;
using nlohmann::ordered_json;

Interval distqec::wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        return {0, 1};
    }
    double nn = static_cast<double>(n);
    double phat = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (phat + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    Interval r{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (k == 0) {
        r.low = 0;
    }
    if (k == n) {
        r.high = 1;
    }
    return r;
}

namespace {

double quantile(std::vector<double> v, double q) {
    if (v.empty()) {
        return 0;
    }
    std::sort(v.begin(), v.end());
    size_t idx = static_cast<size_t>(std::ceil(q * static_cast<double>(v.size()))) - 1;
    return v[std::min(idx, v.size() - 1)];
}

}  // namespace

SummaryStatistics distqec::summarize(const std::string &name, const std::vector<TrialRecord> &records) {
    SummaryStatistics s;
    s.name = name;
    s.trials = records.size();
    std::vector<double> waits;
    double ec = 0, links = 0;
    for (const auto &r : records) {
        waits.push_back(r.link_wait_time);
        ec += static_cast<double>(r.ec_cycles);
        links += static_cast<double>(r.links_consumed);
        s.retry_histogram[r.verification_retries]++;
        if (r.aborted) {
            s.aborted++;
        } else if (r.logical_error) {
            s.logical_errors++;
        }
    }
    uint64_t completed = s.trials - s.aborted;
    s.logical_error_rate = completed ? static_cast<double>(s.logical_errors) / static_cast<double>(completed) : 0;
    s.logical_error_interval = wilson_interval(s.logical_errors, completed);
    if (s.trials) {
        double n = static_cast<double>(s.trials);
        s.abort_rate = static_cast<double>(s.aborted) / n;
        double sum = 0;
        for (double w : waits) {
            sum += w;
        }
        s.mean_link_wait = sum / n;
        s.mean_ec_cycles = ec / n;
        s.mean_links = links / n;
    }
    s.p50_link_wait = quantile(waits, 0.5);
    s.p90_link_wait = quantile(waits, 0.9);
    return s;
}

std::string distqec::trial_record_json(const TrialRecord &r) {
    ordered_json j;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["elapsed_time"] = r.elapsed_time;
    j["link_wait_time"] = r.link_wait_time;
    j["link_attempts"] = r.link_attempts;
    j["links_consumed"] = r.links_consumed;
    j["ec_cycles"] = r.ec_cycles;
    j["verification_retries"] = r.verification_retries;
    j["joint_repetitions"] = r.joint_repetitions;
    j["parity"] = r.parity;
    j["syndromes_a"] = r.syndromes_a;
    j["syndromes_b"] = r.syndromes_b;
    j["residual_weight"] = r.residual_weight;
    j["logical_error"] = r.logical_error;
    j["aborted"] = r.aborted;
    if (r.aborted) {
        j["abort_reason"] = r.abort_reason;
    }
    return j.dump();
}

std::string distqec::summary_json(const SummaryStatistics &s) {
    ordered_json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["aborted"] = s.aborted;
    j["logical_errors"] = s.logical_errors;
    j["logical_error_rate"] = s.logical_error_rate;
    j["logical_error_rate_low"] = s.logical_error_interval.low;
    j["logical_error_rate_high"] = s.logical_error_interval.high;
    j["abort_rate"] = s.abort_rate;
    j["mean_link_wait"] = s.mean_link_wait;
    j["p50_link_wait"] = s.p50_link_wait;
    j["p90_link_wait"] = s.p90_link_wait;
    j["mean_ec_cycles"] = s.mean_ec_cycles;
    j["mean_links"] = s.mean_links;
    ordered_json hist = ordered_json::object();
    for (const auto &[k, v] : s.retry_histogram) {
        hist[std::to_string(k)] = v;
    }
    j["retry_histogram"] = hist;
    return j.dump();
}

std::vector<TrialRecord> distqec::run_trials(const ExperimentConfig &config) {
    config.validate();
    std::vector<TrialRecord> records(config.trials);
    size_t workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<size_t>(workers, config.trials);
    std::atomic<uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        try {
            for (uint64_t t = next++; t < config.trials; t = next++) {
                records[t] = run_timed_bell_prep(config.setup, config.seed, t);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            failure = std::current_exception();
            next = config.trials;
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (size_t k = 0; k < workers; k++) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

SummaryStatistics distqec::run_experiment(const ExperimentConfig &config, std::ostream *out) {
    auto records = run_trials(config);
    if (out) {
        for (const auto &r : records) {
            *out << trial_record_json(r) << '\n';
        }
    }
    return summarize(config.name, records);
}

std::vector<SweepCell> distqec::run_sweep(const ExperimentConfig &config) {
    config.validate();
    std::vector<SweepCell> cells;
    std::vector<std::vector<std::pair<std::string, double>>> points{{}};
    for (const auto &axis : config.axes) {
        std::vector<std::vector<std::pair<std::string, double>>> next;
        for (const auto &p : points) {
            for (double v : axis.values) {
                auto q = p;
                q.emplace_back(axis.key, v);
                next.push_back(q);
            }
        }
        points = next;
    }
    for (const auto &point : points) {
        ExperimentConfig c = config;
        c.axes.clear();
        for (const auto &[key, value] : point) {
            std::ostringstream text;
            text << std::setprecision(17) << value;
            set_config_key(c, key, text.str());
        }
        cells.push_back({point, run_experiment(c)});
    }
    return cells;
}

void distqec::write_sweep_csv(std::ostream &out, const std::vector<SweepCell> &cells) {
    if (cells.empty()) {
        return;
    }
    for (const auto &[key, v] : cells[0].point) {
        out << key << ',';
    }
    out << "trials,aborted,logical_errors,logical_error_rate,rate_low,rate_high,abort_rate,mean_link_wait,"
           "p50_link_wait,p90_link_wait,mean_ec_cycles,mean_links\n";
    out << std::setprecision(10);
    for (const auto &c : cells) {
        for (const auto &[key, v] : c.point) {
            out << v << ',';
        }
        const auto &s = c.summary;
        out << s.trials << ',' << s.aborted << ',' << s.logical_errors << ',' << s.logical_error_rate << ','
            << s.logical_error_interval.low << ',' << s.logical_error_interval.high << ',' << s.abort_rate << ','
            << s.mean_link_wait << ',' << s.p50_link_wait << ',' << s.p90_link_wait << ',' << s.mean_ec_cycles
            << ',' << s.mean_links << '\n';
    }
}

double distqec::log_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope needs at least two (x, y) pairs");
    }
    double mx = 0, my = 0;
    for (size_t k = 0; k < x.size(); k++) {
        if (!(x[k] > 0 && y[k] > 0)) {
            throw std::invalid_argument("log-log slope needs positive values");
        }
        mx += std::log(x[k]);
        my += std::log(y[k]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (size_t k = 0; k < x.size(); k++) {
        double dx = std::log(x[k]) - mx;
        sxy += dx * (std::log(y[k]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::string distqec::codes_table() {
    std::ostringstream out;
    out << std::left << std::setw(12) << "name" << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(8) << "d"
        << std::setw(8) << "wt(X)" << std::setw(8) << "wt(Z)"
        << "generators\n";
    for (const auto &name : code_names()) {
        const auto &code = code_by_name(name);
        std::string gens;
        for (const auto &g : code.generators) {
            std::string s = g.str();
            if (!s.empty() && s[0] == '+') {
                s = s.substr(1);
            }
            gens += (gens.empty() ? "" : " ") + s;
        }
        out << std::setw(12) << name << std::setw(4) << code.n << std::setw(4) << code.k << std::setw(8)
            << code.distance_label << std::setw(8) << reduce_logical(code, 'X').weight() << std::setw(8)
            << reduce_logical(code, 'Z').weight() << gens << '\n';
    }
    return out.str();
}

std::vector<std::string> distqec::campaign_protocols() {
    return {"ft-syndrome", "basic-syndrome", "interface", "ft-joint"};
}

Protocol distqec::campaign_protocol(const std::string &name, const std::string &code_name) {
    const auto &code = code_by_name(code_name);
    if (name == "ft-syndrome") {
        return ft_syndrome_protocol(code);
    }
    if (name == "basic-syndrome") {
        return basic_syndrome_protocol(code);
    }
    if (name == "interface") {
        return interface_protocol(code);
    }
    if (name == "ft-joint") {
        return ft_joint_protocol(code);
    }
    throw std::invalid_argument("unknown fault protocol '" + name + "'");
}

std::string distqec::verify_report_json(const VerifyReport &r) {
    ordered_json j;
    j["protocol"] = r.protocol;
    j["passed"] = r.passed();
    j["checks"] = r.checks;
    j["violations"] = r.violations;
    j["notes"] = r.notes;
    return j.dump(2);
}
