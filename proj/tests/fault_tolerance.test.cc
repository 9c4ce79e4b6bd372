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


#include "distqec/fault_tolerance.h"

#include <set>

#include "distqec/protocols.h"
#include "distqec/residual.h"
#include "gtest/gtest.h"

using namespace distqec;

namespace {

PauliString ops(size_t n, std::initializer_list<std::pair<uint32_t, char>> factors) {
    PauliString p(n);
    for (auto [q, c] : factors) {
        p.set(q, c);
    }
    return p;
}

bool all_plus(const Processor &p, const std::vector<PauliString> &stabilizers) {
    for (const auto &s : stabilizers) {
        if (p.peek(s) != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(ghz, noiseless_verifies_on_first_attempt) {
    Rng rng(1);
    Processor p(5, rng);
    std::vector<uint32_t> anc{0, 1, 2, 3, 4};
    auto block = prepare_verified_ghz4(p, anc);
    EXPECT_TRUE(block.verified);
    EXPECT_EQ(block.verification_attempts, 1u);
    EXPECT_EQ(block.kind, AncillaKind::LocalGhz);
    EXPECT_TRUE(all_plus(p, {ops(5, {{0, 'X'}, {1, 'X'}, {2, 'X'}, {3, 'X'}}), ops(5, {{0, 'Z'}, {1, 'Z'}}),
                             ops(5, {{1, 'Z'}, {2, 'Z'}}), ops(5, {{2, 'Z'}, {3, 'Z'}}), ops(5, {{4, 'Z'}})}));
}

TEST(ghz, x_fault_mid_preparation_forces_retry) {
    Rng rng(1);
    Processor p(5, rng);
    std::vector<FaultSite> log;
    p.set_site_log(&log);
    std::vector<uint32_t> anc{0, 1, 2, 3, 4};
    prepare_verified_ghz4(p, anc);
    // Site order: 5 resets, H, CNOT 0 1, CNOT 1 2, ...
    ASSERT_EQ(log[6].label(), "6:CNOT 0 1");
    Rng rng2(1);
    Processor q(5, rng2);
    q.inject({6, PauliString::from_str("IX")});
    auto block = prepare_verified_ghz4(q, anc);
    EXPECT_EQ(block.verification_attempts, 2u);
}

TEST(ghz, z_fault_passes_verification) {
    Rng rng(1);
    Processor p(5, rng);
    p.inject({6, PauliString::from_str("ZI")});
    std::vector<uint32_t> anc{0, 1, 2, 3, 4};
    auto block = prepare_verified_ghz4(p, anc);
    EXPECT_EQ(block.verification_attempts, 1u);
    EXPECT_EQ(p.peek(ops(5, {{0, 'X'}, {1, 'X'}, {2, 'X'}, {3, 'X'}})), -1);
}

TEST(ghz, exhausted_budget_throws) {
    Rng rng(1);
    Processor p(5, rng);
    std::vector<uint32_t> anc{0, 1, 2, 3, 4};
    EXPECT_THROW(prepare_verified_ghz4(p, anc, 0), VerificationFailure);
    EXPECT_THROW(prepare_verified_ghz4(p, std::span(anc).subspan(0, 4)), std::invalid_argument);
}

TEST(ancilla_count, formula) {
    EXPECT_EQ(ancilla_count(3, 1), 4u);
    EXPECT_EQ(ancilla_count(3, 2), 10u);
    EXPECT_EQ(ancilla_count(1, 0), 2u);
    EXPECT_EQ(ancilla_count(4, 1), 5u);
    EXPECT_THROW(ancilla_count(0, 1), std::invalid_argument);
}

TEST(majority, rules) {
    EXPECT_EQ(resolve_syndromes({5, 5}, MajorityRule::PerBit), 5u);
    EXPECT_EQ(resolve_syndromes({5, 5}, MajorityRule::WholeSyndrome), 5u);
    EXPECT_EQ(resolve_syndromes({0b0000, 0b0011, 0b1011}, MajorityRule::PerBit), 0b0011u);
    EXPECT_EQ(resolve_syndromes({0b0000, 0b0011, 0b1011}, MajorityRule::WholeSyndrome), 0b1011u);
    EXPECT_EQ(resolve_syndromes({0b0110, 0b0011, 0b0110}, MajorityRule::PerBit), 0b0110u);
    EXPECT_THROW(resolve_syndromes({1, 2}, MajorityRule::PerBit), std::invalid_argument);
}

TEST(extract_syndrome_ft, noiseless_two_repetitions) {
    const auto &code = code_513();
    Rng rng(3);
    Processor p(10, rng);
    std::vector<uint32_t> data{0, 1, 2, 3, 4}, anc{5, 6, 7, 8, 9};
    encode_zero(p, code, data);
    auto log = extract_syndrome_ft(p, code, data, anc);
    EXPECT_EQ(log.resolved, 0u);
    ASSERT_EQ(log.syndromes.size(), 2u);
    EXPECT_EQ(log.syndromes[1].repetition_index, 1u);
    EXPECT_EQ(log.syndromes[0].source, SyndromeSource::FaultTolerant);
    EXPECT_EQ(log.ghz_attempts, 8u);
}

TEST(extract_syndrome_ft, corrects_preexisting_error) {
    const auto &code = code_513();
    for (uint32_t q = 0; q < 5; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            Rng rng(q);
            Processor p(10, rng);
            std::vector<uint32_t> data{0, 1, 2, 3, 4}, anc{5, 6, 7, 8, 9};
            encode_zero(p, code, data);
            p.correct(c, q);
            auto log = ec_cycle_ft(p, code, data, anc);
            EXPECT_EQ(log.resolved, code.syndrome_of(PauliString::single(5, q, c)));
            std::vector<PauliString> stab;
            for (const auto &g : code.generators) {
                stab.push_back(on_block(10, g, data));
            }
            stab.push_back(on_block(10, code.logical_z[0], data));
            EXPECT_TRUE(all_plus(p, stab)) << c << q;
        }
    }
    Rng rng(0);
    Processor p(10, rng);
    std::vector<uint32_t> data{0, 1, 2, 3, 4}, anc{5, 6, 7, 8, 9};
    encode_zero(p, code, data);
    p.correct('X', 2);
    EXPECT_EQ(extract_syndrome_ft(p, code, data, anc).syndromes[0].str(), "1100");
}

TEST(extract_syndrome_ft, rejects_short_ancilla_register) {
    Rng rng(0);
    Processor p(9, rng);
    std::vector<uint32_t> data{0, 1, 2, 3, 4}, anc{5, 6, 7, 8};
    EXPECT_THROW(extract_syndrome_ft(p, code_513(), data, anc), std::invalid_argument);
}

class FtSyndromeCampaign : public ::testing::TestWithParam<std::string> {};

TEST_P(FtSyndromeCampaign, single_faults_leave_weight_at_most_one) {
    const auto &code = code_by_name(GetParam());
    auto campaign = run_campaign(ft_syndrome_protocol(code), PauliClass::XYZ);
    ASSERT_FALSE(campaign.results.empty());
    for (const auto &r : campaign.results) {
        EXPECT_LE(r.outcome.residual_weight, 1u) << r.site.label() << " " << r.pauli.str();
        EXPECT_FALSE(r.outcome.logical_error) << r.site.label() << " " << r.pauli.str();
        EXPECT_FALSE(r.outcome.aborted);
    }
}

TEST_P(FtSyndromeCampaign, per_bit_vote_is_not_fault_tolerant) {
    const auto &code = code_by_name(GetParam());
    FtOptions options;
    options.rule = MajorityRule::PerBit;
    auto campaign = run_campaign(ft_syndrome_protocol(code, options), PauliClass::XYZ);
    size_t heavy = 0;
    for (const auto &r : campaign.results) {
        heavy += r.outcome.residual_weight >= 2;
    }
    EXPECT_GT(heavy, 0u);
}

INSTANTIATE_TEST_SUITE_P(codes, FtSyndromeCampaign, ::testing::Values("513", "steane713"));

TEST(ft_syndrome_campaign, seed_independent) {
    auto a = run_campaign(ft_syndrome_protocol(code_513()), PauliClass::X, 0);
    auto b = run_campaign(ft_syndrome_protocol(code_513()), PauliClass::X, 99);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (size_t k = 0; k < a.results.size(); k++) {
        EXPECT_EQ(a.results[k].outcome.residual_weight, b.results[k].outcome.residual_weight);
    }
}

namespace {

struct InterfaceFixture {
    InterfaceLayout a{{0, 1, 2}, 3};
    InterfaceLayout b{{4, 5, 6}, 7};
};

}  // namespace

TEST(interface, noiseless_state) {
    InterfaceFixture f;
    Rng rng(4);
    Processor p(8, rng);
    ImmediateLinks links;
    auto pair = prepare_interface_ancilla(p, f.a, f.b, links);
    EXPECT_TRUE(pair.a.verified && pair.b.verified);
    EXPECT_EQ(pair.a.kind, AncillaKind::Interface);
    EXPECT_EQ(pair.links_consumed, 2u);
    EXPECT_EQ(links.delivered(), 2u);
    ASSERT_EQ(pair.verification_parities.size(), 1u);
    EXPECT_FALSE(pair.verification_parities[0]);
    std::vector<PauliString> stab{ops(8, {{0, 'X'}, {1, 'X'}, {2, 'X'}, {4, 'X'}, {5, 'X'}, {6, 'X'}})};
    for (uint32_t q : {1, 2, 4, 5, 6}) {
        stab.push_back(ops(8, {{0, 'Z'}, {q, 'Z'}}));
    }
    EXPECT_TRUE(all_plus(p, stab));
    EXPECT_EQ(classify_interface_state(p, f.a, f.b), InterfaceFaultClass::Clean);
}

TEST(interface, single_x_faults_are_caught_or_harmless) {
    const auto &code = code_513();
    CampaignNode na, nb;
    layout_campaign_node(nb, layout_campaign_node(na, 0, code, 0, 3), code, 0, 3);
    auto campaign = run_campaign(interface_protocol(code), PauliClass::X);
    size_t verify_b = 0;
    for (const auto &s : campaign.locations) {
        if (s.kind == SiteKind::Measure && s.qubits == std::vector<uint32_t>{nb.node.interface.verifier}) {
            verify_b = s.index;
            break;
        }
    }
    ASSERT_GT(verify_b, 0u);
    std::set<std::string> caught;
    for (const auto &r : campaign.results) {
        bool odd = r.outcome.verification.rfind("odd", 0) == 0;
        if (r.site.index > verify_b) {
            continue;
        }
        EXPECT_TRUE(odd || r.outcome.residual_weight <= 1) << r.site.label() << " " << r.pauli.str();
        EXPECT_FALSE(r.outcome.logical_error) << r.site.label() << " " << r.pauli.str();
        if (odd && r.site.kind != SiteKind::Measure) {
            caught.insert(r.outcome.label);
        }
        if (!odd) {
            EXPECT_TRUE(r.outcome.label == "clean" || r.outcome.label == "undetected") << r.outcome.label;
        }
    }
    EXPECT_EQ(caught, (std::set<std::string>{"verifier-flipped", "node-flipped", "pair-flipped", "end-flipped"}));
}

TEST(interface, z_faults_pass_verification) {
    auto campaign = run_campaign(interface_protocol(code_513()), PauliClass::Z);
    for (const auto &r : campaign.results) {
        EXPECT_EQ(r.outcome.verification.find("odd"), std::string::npos) << r.site.label();
    }
}

namespace {

struct JointFixture {
    CampaignNode a, b;
    size_t n;
    explicit JointFixture(const StabilizerCode &code) {
        n = layout_campaign_node(b, layout_campaign_node(a, 0, code, 5, 3), code, 5, 3);
    }
};

}  // namespace

TEST(measure_joint_logical_ft, noiseless_zz_on_zero_states) {
    const auto &code = code_513();
    JointFixture f(code);
    Rng rng(5);
    Processor p(f.n, rng);
    encode_zero(p, code, f.a.node.data);
    encode_zero(p, code, f.b.node.data);
    ImmediateLinks links;
    auto rz = reduce_logical(code, 'Z');
    auto r = measure_joint_logical_ft(p, code, rz, f.a.node, rz, f.b.node, links);
    EXPECT_EQ(r.eigenvalue, 1);
    EXPECT_EQ(r.repetitions, (std::vector<int>{1, 1}));
    EXPECT_EQ(r.links_consumed, 4u);
    EXPECT_EQ(links.delivered(), 4u);
    std::vector<PauliString> stab;
    for (const auto &g : code.generators) {
        stab.push_back(on_block(f.n, g, f.a.node.data));
        stab.push_back(on_block(f.n, g, f.b.node.data));
    }
    EXPECT_TRUE(all_plus(p, stab));
}

TEST(measure_joint_logical_ft, z_fault_on_interface_is_outvoted) {
    const auto &code = code_513();
    JointFixture f(code);
    auto rz = reduce_logical(code, 'Z');
    auto run = [&](Processor &p) {
        encode_zero(p, code, f.a.node.data);
        encode_zero(p, code, f.b.node.data);
        ImmediateLinks links;
        return measure_joint_logical_ft(p, code, rz, f.a.node, rz, f.b.node, links);
    };
    std::vector<FaultSite> log;
    {
        Rng rng(5);
        Processor p(f.n, rng);
        p.set_site_log(&log);
        run(p);
    }
    size_t target = 0;
    for (const auto &s : log) {
        if (s.kind == SiteKind::Gate && s.qubits.size() == 2 && s.qubits[0] == f.a.node.interface.chain[0]) {
            target = s.index;
            break;
        }
    }
    ASSERT_GT(target, 0u);
    Rng rng(5);
    Processor p(f.n, rng);
    p.inject({target, PauliString::from_str("ZI")});
    auto r = run(p);
    EXPECT_EQ(r.repetitions, (std::vector<int>{-1, 1, 1}));
    EXPECT_EQ(r.eigenvalue, 1);
    EXPECT_EQ(r.links_consumed, 6u);
}

TEST(measure_joint_logical_ft, rejects_heavy_operator) {
    const auto &code = code_513();
    JointFixture f(code);
    Rng rng(0);
    Processor p(f.n, rng);
    ImmediateLinks links;
    EXPECT_THROW(measure_joint_logical_ft(p, code, code.logical_z[0], f.a.node, code.logical_z[0], f.b.node, links),
                 std::invalid_argument);
}

TEST(measure_joint_logical_ft, x_faults_campaign) {
    auto campaign = run_campaign(ft_joint_protocol(code_513()), PauliClass::X);
    for (const auto &r : campaign.results) {
        EXPECT_LE(r.outcome.residual_weight, 1u) << r.site.label() << " " << r.pauli.str();
        EXPECT_FALSE(r.outcome.logical_error) << r.site.label() << " " << r.pauli.str();
    }
}

TEST(prepare_encoded_bell_ft, noiseless_stabilizers) {
    const auto &code = code_513();
    JointFixture f(code);
    for (uint64_t seed = 0; seed < 6; seed++) {
        Rng rng(seed);
        Processor p(f.n, rng);
        encode_zero(p, code, f.a.node.data);
        encode_zero(p, code, f.b.node.data);
        ImmediateLinks links;
        auto r = prepare_encoded_bell_ft(p, code, f.a.node, f.b.node, links);
        EXPECT_EQ(r.corrected, r.parity < 0);
        EXPECT_EQ(r.links_consumed, 2 * r.repetitions.size());
        EXPECT_EQ(r.verification_retries, 0u);
        EXPECT_TRUE(all_plus(p, encoded_bell_stabilizers(f.n, code, f.a.node.data, f.b.node.data)));
    }
}
