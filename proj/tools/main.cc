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


#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "distqec/config.h"
#include "distqec/harness.h"
#include "distqec/state_vector.h"
#include "distqec/verify.h"

using namespace distqec;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResource = 4;

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    return out;
}

ExperimentConfig load_with_overrides(const std::string &path) {
    ExperimentConfig config = load_config(path);
    apply_env_overrides(config);
    return config;
}

int cmd_simulate(const std::string &path, std::optional<uint64_t> seed, std::optional<uint64_t> trials) {
    ExperimentConfig config = load_with_overrides(path);
    if (seed) {
        config.seed = *seed;
    }
    if (trials) {
        config.trials = *trials;
    }
    config.validate();
    SummaryStatistics summary;
    if (config.records_path.empty()) {
        summary = run_experiment(config, &std::cout);
    } else {
        auto out = open_output(config.records_path);
        summary = run_experiment(config, &out);
    }
    std::string json = summary_json(summary);
    if (!config.summary_path.empty()) {
        open_output(config.summary_path) << json << '\n';
    }
    std::cerr << json << '\n';
    return 0;
}

int cmd_sweep(const std::string &path) {
    ExperimentConfig config = load_with_overrides(path);
    auto cells = run_sweep(config);
    if (config.sweep_path.empty()) {
        write_sweep_csv(std::cout, cells);
    } else {
        auto out = open_output(config.sweep_path);
        write_sweep_csv(out, cells);
    }
    return 0;
}

int cmd_verify(const std::string &protocol) {
    VerifyReport report = run_verify(protocol);
    std::cout << verify_report_json(report) << '\n';
    return report.passed() ? 0 : kExitVerification;
}

int cmd_faults(const std::string &protocol, const std::string &code, const std::string &paulis,
               const std::string &out_path, uint64_t seed) {
    PauliClass cls = pauli_class_by_name(paulis);
    FaultCampaign campaign = run_campaign(campaign_protocol(protocol, code), cls, seed);
    auto out = open_output(out_path);
    write_campaign_csv(out, campaign);
    std::cerr << campaign.results.size() << " faults at " << campaign.locations.size() << " locations written to "
              << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distributed quantum error correction simulator"};
    app.require_subcommand(1);

    auto *codes = app.add_subcommand("codes", "Code registry");
    auto *codes_list = codes->add_subcommand("list", "Print the registered codes");
    codes->require_subcommand(1);

    std::string verify_name;
    auto *verify = app.add_subcommand("verify", "Run the exhaustive checks for a protocol");
    verify->add_option("protocol", verify_name, "cz, bellprep, ft-syndrome or interface")->required();

    std::string config_path;
    std::optional<uint64_t> seed, trials;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo timed Bell preparation");
    simulate->add_option("--config", config_path, "Configuration file")->required();
    simulate->add_option("--seed", seed, "Master seed");
    simulate->add_option("--trials", trials, "Number of trials");

    auto *sweep = app.add_subcommand("sweep", "Cross-product parameter sweep to CSV");
    sweep->add_option("--config", config_path, "Configuration file with sweep.<key> axes")->required();

    std::string fault_protocol, fault_out, fault_code = "513", fault_paulis = "XYZ";
    uint64_t fault_seed = 0;
    auto *faults = app.add_subcommand("faults", "Exhaustive single-fault campaign to CSV");
    faults->add_option("protocol", fault_protocol, "ft-syndrome, basic-syndrome, interface or ft-joint")->required();
    faults->add_option("--out", fault_out, "Output CSV path")->required();
    faults->add_option("--code", fault_code, "Code name");
    faults->add_option("--paulis", fault_paulis, "Fault Paulis: X, Z or XYZ");
    faults->add_option("--seed", fault_seed, "Seed for measurement outcomes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (codes_list->parsed()) {
            std::cout << codes_table();
            return 0;
        }
        if (verify->parsed()) {
            return cmd_verify(verify_name);
        }
        if (simulate->parsed()) {
            return cmd_simulate(config_path, seed, trials);
        }
        if (sweep->parsed()) {
            return cmd_sweep(config_path);
        }
        if (faults->parsed()) {
            return cmd_faults(fault_protocol, fault_code, fault_paulis, fault_out, fault_seed);
        }
    } catch (const ResourceError &e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
