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


#include "distqec/noise.h"

#include <cmath>
#include <sstream>

#include "distqec/codes.h"
#include "distqec/residual.h"
#include "gtest/gtest.h"

using namespace distqec;

namespace {

Circuit bell_prep_circuit() {
    // Two encoded |0>_L blocks of the five-qubit code, a Bell pair between
    // them and the transversal coupling of a joint X_L X_L measurement.
    const auto &code = code_513();
    Circuit c(12);
    Circuit enc = encode_zero(code);
    std::vector<uint32_t> a{0, 1, 2, 3, 4}, b{5, 6, 7, 8, 9};
    for (const auto *block : {&a, &b}) {
        for (const auto &s : enc.steps()) {
            Step t = s;
            t.q0 = (*block)[s.q0];
            t.q1 = is_two_qubit(s.gate) ? (*block)[s.q1] : 0;
            c.push(t);
        }
    }
    c.bell(10, 11);
    for (uint32_t k = 0; k < 5; k++) {
        c.gate(GateKind::CNOT, 10, a[k]);
        c.gate(GateKind::CNOT, 11, b[k]);
    }
    c.gate(GateKind::H, 10);
    c.gate(GateKind::H, 11);
    c.measure(10);
    c.measure(11);
    return c;
}

}  // namespace

TEST(apply_stochastic_noise, zero_model_is_identity) {
    Rng rng(1);
    auto c = bell_prep_circuit();
    EXPECT_EQ(apply_stochastic_noise(c, ErrorModel{}, rng), c);
}

TEST(apply_stochastic_noise, certain_single_qubit_noise) {
    Circuit c(2);
    c.gate(GateKind::H, 0);
    c.gate(GateKind::S, 1);
    c.gate(GateKind::H, 1);
    ErrorModel m;
    m.p1 = 1;
    Rng rng(2);
    auto noisy = apply_stochastic_noise(c, m, rng);
    ASSERT_EQ(noisy.steps().size(), 6u);
    for (size_t k = 0; k < 6; k += 2) {
        EXPECT_FALSE(noisy.steps()[k].noise);
        const auto &n = noisy.steps()[k + 1];
        EXPECT_TRUE(n.noise);
        EXPECT_TRUE(is_pauli_gate(n.gate));
        EXPECT_EQ(n.q0, noisy.steps()[k].q0);
    }
    EXPECT_EQ(noisy.without_noise(), c);
}

TEST(apply_stochastic_noise, preserves_circuit_shape) {
    auto c = bell_prep_circuit();
    for (uint64_t seed = 0; seed < 20; seed++) {
        Rng rng(seed);
        auto noisy = apply_stochastic_noise(c, ErrorModel::uniform(0.2), rng);
        EXPECT_EQ(noisy.without_noise(), c);
        EXPECT_EQ(noisy.fault_locations().size(), c.fault_locations().size());
    }
}

TEST(apply_stochastic_noise, measurement_flip_keeps_state) {
    Circuit c(1);
    c.gate(GateKind::X, 0);
    c.measure(0);
    c.measure(0);
    ErrorModel m;
    m.p_meas = 1;
    Rng rng(0);
    auto noisy = apply_stochastic_noise(c, m, rng);
    auto r = oracle_run(noisy, 0);
    EXPECT_EQ(r.records, (std::vector<bool>{false, false}));
    EXPECT_EQ(oracle_run(c, 0).records, (std::vector<bool>{true, true}));
}

TEST(apply_stochastic_noise, two_qubit_fault_frequency) {
    auto c = bell_prep_circuit();
    ErrorModel m;
    m.p2 = 0.01;
    size_t gates = 0;
    for (const auto &s : c.steps()) {
        gates += s.kind == StepKind::Gate && is_two_qubit(s.gate);
    }
    ASSERT_GT(gates, 10u);
    const size_t trials = 100000;
    size_t faults = 0;
    std::vector<size_t> pair_counts(16, 0);
    Rng rng(7);
    for (size_t t = 0; t < trials; t++) {
        auto noisy = apply_stochastic_noise(c, m, rng);
        const auto &steps = noisy.steps();
        for (size_t k = 0; k < steps.size(); k++) {
            if (steps[k].kind == StepKind::Gate && !steps[k].noise && is_two_qubit(steps[k].gate)) {
                faults += k + 1 < steps.size() && steps[k + 1].noise;
            }
        }
    }
    double n = double(trials) * double(gates);
    double mean = n * m.p2;
    double sigma = std::sqrt(n * m.p2 * (1 - m.p2));
    EXPECT_LT(std::abs(double(faults) - mean), 3 * sigma) << faults << " vs " << mean;
}

TEST(apply_stochastic_noise, rejects_invalid_model) {
    Rng rng(0);
    ErrorModel m;
    m.p1 = 1.5;
    EXPECT_THROW(apply_stochastic_noise(Circuit(1), m, rng), std::invalid_argument);
}

TEST(fault_paulis, class_sizes) {
    EXPECT_EQ(fault_paulis(PauliClass::X, 1).size(), 1u);
    EXPECT_EQ(fault_paulis(PauliClass::X, 2).size(), 3u);
    EXPECT_EQ(fault_paulis(PauliClass::Z, 2).size(), 3u);
    EXPECT_EQ(fault_paulis(PauliClass::XYZ, 1).size(), 3u);
    EXPECT_EQ(fault_paulis(PauliClass::XYZ, 2).size(), 15u);
    EXPECT_EQ(fault_paulis(PauliClass::X, 2)[2], PauliString::from_str("XX"));
    EXPECT_EQ(pauli_class_by_name("XYZ"), PauliClass::XYZ);
    EXPECT_THROW(pauli_class_by_name("Q"), std::invalid_argument);
}

TEST(enumerate_single_faults, empty_circuit) {
    auto campaign = enumerate_single_faults(Circuit(3), PauliClass::XYZ);
    EXPECT_TRUE(campaign.locations.empty());
    EXPECT_TRUE(campaign.results.empty());
}

TEST(enumerate_single_faults, covers_every_location_once_per_pauli) {
    Circuit c(2);
    c.gate(GateKind::H, 0);
    c.gate(GateKind::CNOT, 0, 1);
    c.measure(0);
    c.measure(1);
    auto campaign = enumerate_single_faults(c, PauliClass::XYZ);
    ASSERT_EQ(campaign.locations.size(), 4u);
    EXPECT_EQ(campaign.results.size(), 3u + 15u + 3u + 3u);
    for (size_t k = 0; k < campaign.locations.size(); k++) {
        EXPECT_EQ(campaign.locations[k].label(), c.fault_locations()[k].label());
    }
    // An X just before the first measurement breaks the records' agreement.
    for (const auto &r : campaign.results) {
        if (r.site.index == 2 && r.pauli == PauliString::from_str("X")) {
            EXPECT_NE(r.outcome.verification[0], r.outcome.verification[1]);
        }
    }
    auto again = enumerate_single_faults(c, PauliClass::XYZ);
    for (size_t k = 0; k < campaign.results.size(); k++) {
        EXPECT_EQ(campaign.results[k].outcome.verification, again.results[k].outcome.verification);
    }
}

TEST(write_campaign_csv, format) {
    Circuit c(2);
    c.gate(GateKind::CNOT, 0, 1);
    c.measure(1);
    auto campaign = enumerate_single_faults(c, PauliClass::X);
    std::ostringstream out;
    write_campaign_csv(out, campaign);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "fault_location,fault_pauli,verification_outcome,residual_weight,logical_error");
    std::getline(in, line);
    EXPECT_EQ(line, "0:CNOT 0 1,XI,0,0,0");
    std::getline(in, line);
    EXPECT_EQ(line, "0:CNOT 0 1,IX,1,0,0");
    size_t rows = 2;
    while (std::getline(in, line)) {
        rows++;
    }
    EXPECT_EQ(rows, 4u);
}

TEST(residual, coset_weight_matches_brute_force) {
    const auto &code = code_513();
    auto all = [](size_t n) {
        std::vector<PauliString> out;
        for (uint32_t m = 0; m < (1u << (2 * n)); m++) {
            PauliString p(n);
            for (size_t q = 0; q < n; q++) {
                p.set(q, "IXYZ"[(m >> (2 * q)) & 3]);
            }
            out.push_back(p);
        }
        return out;
    };
    auto paulis = all(5);
    for (const auto &e : paulis) {
        size_t best = 99;
        for (const auto &f : paulis) {
            if (f.weight() < best && code.in_group_up_to_sign(e * f)) {
                best = f.weight();
            }
        }
        ASSERT_EQ(coset_weight(code, e), best) << e.str();
    }
}

TEST(residual, reference_readback) {
    const auto &code = code_513();
    std::vector<uint32_t> data{0, 1, 2, 3, 4};
    auto run = [&](const std::vector<std::pair<char, uint32_t>> &errors) {
        Rng rng(0);
        Processor p(6, rng);
        encode_zero(p, code, data);
        attach_reference(p, code, data, 5);
        for (auto [c, q] : errors) {
            p.correct(c, q);
        }
        BlockRef block{&code, data};
        return analyze_residual(p, std::span(&block, 1), reference_targets(6, code, data, 5));
    };
    auto clean = run({});
    EXPECT_EQ(clean.weight, 0u);
    EXPECT_FALSE(clean.logical_error);
    auto one = run({{'Y', 3}});
    EXPECT_EQ(one.weight, 1u);
    EXPECT_FALSE(one.logical_error);
    EXPECT_EQ(one.syndromes[0], code.syndrome_of(PauliString::single(5, 3, 'Y')));
    auto two = run({{'X', 0}, {'Z', 1}});
    EXPECT_EQ(two.weight, 2u);
    EXPECT_TRUE(two.logical_error);
    auto logical = run({{'X', 0}, {'X', 1}, {'X', 2}, {'X', 3}, {'X', 4}});
    EXPECT_EQ(logical.weight, 3u);
    EXPECT_TRUE(logical.logical_error);
    auto stabilizer = run({{'X', 0}, {'Z', 1}, {'Z', 2}, {'X', 3}});
    EXPECT_EQ(stabilizer.weight, 0u);
    EXPECT_FALSE(stabilizer.logical_error);
}

TEST(residual, unreadable_block_counts_as_failure) {
    const auto &code = code_513();
    std::vector<uint32_t> data{0, 1, 2, 3, 4};
    Rng rng(0);
    Processor p(7, rng);
    encode_zero(p, code, data);
    attach_reference(p, code, data, 5);
    p.h(6);
    p.cnot(6, 2);
    BlockRef block{&code, data};
    auto r = analyze_residual(p, std::span(&block, 1), reference_targets(7, code, data, 5));
    EXPECT_EQ(r.weight, 6u);
    EXPECT_TRUE(r.logical_error);
}
