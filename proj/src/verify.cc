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


#include "distqec/verify.h"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "distqec/codes.h"
#include "distqec/protocols.h"
#include "distqec/telegates.h"

using namespace distqec;

std::vector<Circuit> distqec::two_qubit_stabilizer_preparations() {
    auto key = [](const Circuit &c) {
        Rng rng(0);
        Processor p(2, rng);
        run_circuit(p, c);
        std::string k;
        for (const auto &r : canonical_form(p.tableau())) {
            k += r.str() + ",";
        }
        return k;
    };
    std::map<std::string, Circuit> seen;
    std::deque<Circuit> queue{Circuit(2)};
    seen[key(Circuit(2))] = Circuit(2);
    const std::pair<GateKind, std::pair<uint32_t, uint32_t>> moves[] = {
        {GateKind::H, {0, 0}}, {GateKind::H, {1, 0}}, {GateKind::S, {0, 0}}, {GateKind::S, {1, 0}},
        {GateKind::CNOT, {0, 1}}};
    while (!queue.empty()) {
        Circuit c = queue.front();
        queue.pop_front();
        for (auto [g, q] : moves) {
            Circuit next = c;
            next.gate(g, q.first, q.second);
            auto k = key(next);
            if (!seen.count(k)) {
                seen[k] = next;
                queue.push_back(next);
            }
        }
    }
    std::vector<Circuit> out;
    for (auto &[k, c] : seen) {
        out.push_back(c);
    }
    return out;
}

namespace {

Processor dense(size_t n, Rng &rng) {
    return Processor(std::make_unique<StateVectorBackend>(n), rng);
}

void zero_if_one(Processor &p, uint32_t q) {
    if (p.peek(PauliString::single(p.num_qubits(), q, 'Z')) == -1) {
        p.correct('X', q);
    }
}

std::vector<uint32_t> range(uint32_t start, uint32_t count) {
    std::vector<uint32_t> out;
    for (uint32_t k = 0; k < count; k++) {
        out.push_back(start + k);
    }
    return out;
}

}  // namespace

VerifyReport distqec::verify_cz() {
    VerifyReport report;
    report.protocol = "cz";
    auto preps = two_qubit_stabilizer_preparations();
    report.notes.push_back(std::to_string(preps.size()) + " stabilizer inputs x 8 branches");
    for (size_t i = 0; i < preps.size(); i++) {
        Circuit wide(3);
        wide.append(preps[i]);
        auto expected = oracle_run(wide, 0).state;
        expected.apply(GateKind::CZ, 0, 1);
        for (int branch = 0; branch < 8; branch++) {
            Rng rng(0);
            auto p = dense(3, rng);
            run_circuit(p, wide);
            ScriptedOutcomes outcomes({bool(branch & 1), bool(branch & 2), bool(branch & 4)});
            p.set_outcome_source(&outcomes);
            cz_by_measurement(p, 0, 1, 2);
            zero_if_one(p, 2);
            report.checks++;
            if (!p.state_vector().equal_up_to_phase(expected, 1e-10) ||
                std::abs(p.state_vector().norm() - 1) > 1e-12) {
                report.violations.push_back("input " + std::to_string(i) + " branch " + std::to_string(branch));
            }
        }
    }
    return report;
}

VerifyReport distqec::verify_bellprep() {
    VerifyReport report;
    report.protocol = "bellprep";
    const auto &code = code_513();
    for (size_t cycles = 0; cycles < 3; cycles++) {
        for (uint64_t seed = 0; seed < 8; seed++) {
            Rng rng(seed);
            Processor p(14, rng);
            NodeLayout na{range(0, 5), {5}, {6}}, nb{range(7, 5), {12}, {13}};
            encode_zero(p, code, na.data);
            encode_zero(p, code, nb.data);
            auto link = deliver_link(p, 6, 13);
            prepare_encoded_bell_nonft(p, code, na, nb, link, cycles);
            report.checks++;
            for (const auto &s : encoded_bell_stabilizers(14, code, na.data, nb.data)) {
                if (p.peek(s) != 1) {
                    report.violations.push_back("513 basic N=" + std::to_string(cycles) + " seed " +
                                                std::to_string(seed) + ": " + s.str() + " is not +1");
                    break;
                }
            }
        }
    }
    for (uint64_t seed = 0; seed < 8; seed++) {
        CampaignNode a, b;
        size_t n = layout_campaign_node(b, layout_campaign_node(a, 0, code, 5, 3), code, 5, 3);
        Rng rng(seed);
        Processor p(n, rng);
        encode_zero(p, code, a.node.data);
        encode_zero(p, code, b.node.data);
        ImmediateLinks links;
        prepare_encoded_bell_ft(p, code, a.node, b.node, links);
        report.checks++;
        for (const auto &s : encoded_bell_stabilizers(n, code, a.node.data, b.node.data)) {
            if (p.peek(s) != 1) {
                report.violations.push_back("513 fault-tolerant seed " + std::to_string(seed) + ": " + s.str() +
                                            " is not +1");
                break;
            }
        }
    }
    const auto &bf = code_bitflip3();
    std::vector<std::complex<double>> expected(1 << 10, 0);
    expected[0] = expected[0b0011100111] = 1 / std::sqrt(2.0);
    for (uint64_t seed = 0; seed < 8; seed++) {
        Rng rng(seed);
        auto p = dense(10, rng);
        NodeLayout na{range(0, 3), {3}, {4}}, nb{range(5, 3), {8}, {9}};
        encode_zero(p, bf, na.data);
        encode_zero(p, bf, nb.data);
        auto link = deliver_link(p, 4, 9);
        prepare_encoded_bell_nonft(p, bf, na, nb, link, 1);
        for (uint32_t q : {3, 4, 8, 9}) {
            zero_if_one(p, q);
        }
        report.checks++;
        if (!p.state_vector().equal_up_to_phase(expected, 1e-10)) {
            report.violations.push_back("bitflip3 oracle mismatch, seed " + std::to_string(seed));
        }
    }
    return report;
}

VerifyReport distqec::verify_ft_syndrome() {
    VerifyReport report;
    report.protocol = "ft-syndrome";
    for (const char *name : {"513", "steane713"}) {
        auto campaign = run_campaign(ft_syndrome_protocol(code_by_name(name)), PauliClass::XYZ);
        for (const auto &r : campaign.results) {
            report.checks++;
            if (r.outcome.residual_weight >= 2 || r.outcome.logical_error || r.outcome.aborted) {
                report.violations.push_back(std::string(name) + " " + r.site.label() + " " + r.pauli.str() +
                                            " residual " + std::to_string(r.outcome.residual_weight));
            }
        }
        report.notes.push_back(std::string(name) + ": " + std::to_string(campaign.locations.size()) +
                               " locations, " + std::to_string(campaign.results.size()) + " faults");
    }
    return report;
}

VerifyReport distqec::verify_interface() {
    VerifyReport report;
    report.protocol = "interface";
    const auto &code = code_513();
    CampaignNode na, nb;
    layout_campaign_node(nb, layout_campaign_node(na, 0, code, 0, 3), code, 0, 3);
    auto campaign = run_campaign(interface_protocol(code), PauliClass::X);
    // Preparation ends with the verification measurement on node B.
    size_t last = 0;
    for (const auto &s : campaign.locations) {
        if (s.kind == SiteKind::Measure && s.qubits == std::vector<uint32_t>{nb.node.interface.verifier}) {
            last = s.index;
            break;
        }
    }
    std::map<std::string, size_t> caught;
    size_t undetected = 0;
    for (const auto &r : campaign.results) {
        if (r.site.index > last) {
            continue;
        }
        report.checks++;
        bool odd = r.outcome.verification.rfind("odd", 0) == 0;
        std::string where = r.site.label() + " " + r.pauli.str();
        if (!odd && (r.outcome.residual_weight > 1 || r.outcome.logical_error)) {
            report.violations.push_back(where + " passes verification with residual weight " +
                                        std::to_string(r.outcome.residual_weight));
        }
        if (odd && r.site.kind != SiteKind::Measure) {
            caught[r.outcome.label]++;
        }
        if (!odd && r.outcome.label == "undetected") {
            undetected++;
        }
    }
    const std::set<std::string> expected{"verifier-flipped", "node-flipped", "pair-flipped", "end-flipped"};
    std::set<std::string> seen;
    for (const auto &[label, count] : caught) {
        seen.insert(label);
        report.notes.push_back("caught " + label + ": " + std::to_string(count));
    }
    report.notes.push_back("undetected, weight <= 1: " + std::to_string(undetected));
    if (seen != expected) {
        std::string got;
        for (const auto &s : seen) {
            got += " " + s;
        }
        report.violations.push_back("caught state classes differ from the four expected forms:" + got);
    }
    return report;
}

std::vector<std::string> distqec::verify_protocols() {
    return {"cz", "bellprep", "ft-syndrome", "interface"};
}

VerifyReport distqec::run_verify(const std::string &protocol) {
    if (protocol == "cz") {
        return verify_cz();
    }
    if (protocol == "bellprep") {
        return verify_bellprep();
    }
    if (protocol == "ft-syndrome") {
        return verify_ft_syndrome();
    }
    if (protocol == "interface") {
        return verify_interface();
    }
    throw std::invalid_argument("unknown protocol '" + protocol + "' (expected cz, bellprep, ft-syndrome or interface)");
}
