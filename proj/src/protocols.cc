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


#include "distqec/protocols.h"

#include <algorithm>
#include <memory>
#include <optional>

#include "distqec/residual.h"

using namespace distqec;

size_t distqec::layout_campaign_node(CampaignNode &out, size_t first, const StabilizerCode &code,
                                     size_t local_ancillas, size_t chain_length) {
    auto next = static_cast<uint32_t>(first);
    out.node = {};
    for (size_t k = 0; k < code.n; k++) {
        out.node.data.push_back(next++);
    }
    out.reference = next++;
    for (size_t k = 0; k < local_ancillas; k++) {
        out.node.local.push_back(next++);
    }
    for (size_t k = 0; k < chain_length; k++) {
        out.node.interface.chain.push_back(next++);
    }
    if (chain_length) {
        out.node.interface.verifier = next++;
    }
    return next;
}

std::string distqec::interface_fault_class_name(InterfaceFaultClass c) {
    switch (c) {
        case InterfaceFaultClass::Clean:
            return "clean";
        case InterfaceFaultClass::VerifierFlipped:
            return "verifier-flipped";
        case InterfaceFaultClass::NodeFlipped:
            return "node-flipped";
        case InterfaceFaultClass::PairFlipped:
            return "pair-flipped";
        case InterfaceFaultClass::EndFlipped:
            return "end-flipped";
        case InterfaceFaultClass::Undetected:
            return "undetected";
        case InterfaceFaultClass::Other:
            return "other";
    }
    return "?";
}

namespace {

size_t max_generator_weight(const StabilizerCode &code) {
    size_t w = 0;
    for (const auto &g : code.generators) {
        w = std::max(w, g.weight());
    }
    return w;
}

}  // namespace

InterfaceFaultClass distqec::classify_interface_state(const Processor &processor, const InterfaceLayout &a,
                                                      const InterfaceLayout &b) {
    size_t nq = processor.num_qubits();
    uint32_t root = a.chain[0];
    auto zz = [&](uint32_t p, uint32_t q) -> std::optional<bool> {
        if (p == q) {
            return false;
        }
        auto op = PauliString::single(nq, p, 'Z') * PauliString::single(nq, q, 'Z');
        auto v = processor.peek(op);
        if (!v) {
            return std::nullopt;
        }
        return *v < 0;
    };
    auto pattern = [&](const InterfaceLayout &node) -> std::optional<std::vector<bool>> {
        std::vector<bool> bits;
        for (auto q : node.chain) {
            auto v = zz(root, q);
            if (!v) {
                return std::nullopt;
            }
            bits.push_back(*v);
        }
        return bits;
    };
    auto pa = pattern(a), pb = pattern(b);
    auto odd = zz(a.verifier, b.verifier);
    if (!pa || !pb || !odd) {
        return InterfaceFaultClass::Other;
    }
    auto uniform = [](const std::vector<bool> &p) {
        for (bool x : p) {
            if (x != p[0]) {
                return false;
            }
        }
        return true;
    };
    auto any = [](const std::vector<bool> &p) {
        for (bool x : p) {
            if (x) {
                return true;
            }
        }
        return false;
    };
    if (!*odd) {
        return any(*pa) || any(*pb) ? InterfaceFaultClass::Undetected : InterfaceFaultClass::Clean;
    }
    bool ua = uniform(*pa), ub = uniform(*pb);
    if (ua && ub) {
        return (*pa)[0] == (*pb)[0] ? InterfaceFaultClass::VerifierFlipped : InterfaceFaultClass::NodeFlipped;
    }
    if (ua == ub || pa->size() != 3) {
        return InterfaceFaultClass::Other;
    }
    std::vector<bool> p = ua ? *pb : *pa;
    if (p[0]) {
        p.flip();
    }
    if (p == std::vector<bool>{false, true, true}) {
        return InterfaceFaultClass::PairFlipped;
    }
    if (p == std::vector<bool>{false, false, true}) {
        return InterfaceFaultClass::EndFlipped;
    }
    return InterfaceFaultClass::Other;
}

namespace {

void prepare_referenced_block(Processor &p, const StabilizerCode &code, const CampaignNode &n) {
    Processor::Ideal ideal(p);
    encode_zero(p, code, n.node.data);
    attach_reference(p, code, n.node.data, n.reference);
}

void reset_ideal(Processor &p, const std::vector<uint32_t> &qubits) {
    Processor::Ideal ideal(p);
    for (auto q : qubits) {
        p.reset(q);
    }
}

std::vector<uint32_t> interface_qubits(const CampaignNode &n) {
    auto out = n.node.interface.chain;
    out.push_back(n.node.interface.verifier);
    return out;
}

PauliString joint_zz(size_t nq, const StabilizerCode &code, const CampaignNode &a, const CampaignNode &b) {
    return on_block(nq, code.logical_z[0], a.node.data) * on_block(nq, code.logical_z[0], b.node.data);
}

/// Targets for two referenced blocks: Z_rA Z_A, Z_rB Z_B and X_rA X_A X_rB X_B.
std::vector<PauliString> pair_targets(size_t nq, const StabilizerCode &code, const CampaignNode &a,
                                      const CampaignNode &b) {
    auto ta = reference_targets(nq, code, a.node.data, a.reference);
    auto tb = reference_targets(nq, code, b.node.data, b.reference);
    return {ta[1], tb[1], ta[0] * tb[0]};
}

void fill_residual(ProtocolOutcome &out, const Processor &p, const StabilizerCode &code, const CampaignNode &a,
                   const CampaignNode &b, int eigenvalue) {
    size_t nq = p.num_qubits();
    std::vector<BlockRef> blocks{{&code, a.node.data}, {&code, b.node.data}};
    auto targets = pair_targets(nq, code, a, b);
    auto data = analyze_residual(p, blocks, targets);
    auto zz = joint_zz(nq, code, a, b);
    if (eigenvalue < 0) {
        zz.set_log_i(zz.log_i() + 2);
    }
    targets.push_back(zz);
    auto full = analyze_residual(p, blocks, targets);
    out.residual_weight = data.weight;
    out.logical_error = data.logical_error || full.logical_error;
}

}  // namespace

Protocol distqec::ft_syndrome_protocol(const StabilizerCode &code, const FtOptions &options) {
    auto node = std::make_shared<CampaignNode>();
    Protocol protocol;
    protocol.name = "ft-syndrome:" + code.name;
    protocol.num_qubits = layout_campaign_node(*node, 0, code, max_generator_weight(code) + 1, 0);
    protocol.run = [node, &code, options](Processor &p) {
        prepare_referenced_block(p, code, *node);
        ProtocolOutcome out;
        try {
            auto log = ec_cycle_ft(p, code, node->node.data, node->node.local, options);
            for (size_t k = 0; k < log.syndromes.size(); k++) {
                out.verification += (k ? "," : "") + log.syndromes[k].str();
            }
            out.verification += ";ghz=" + std::to_string(log.ghz_attempts);
        } catch (const VerificationFailure &) {
            out.aborted = true;
            out.verification = "abort";
        }
        reset_ideal(p, node->node.local);
        BlockRef block{&code, node->node.data};
        auto targets = reference_targets(p.num_qubits(), code, node->node.data, node->reference);
        auto r = analyze_residual(p, std::span(&block, 1), targets);
        out.residual_weight = r.weight;
        out.logical_error = r.logical_error;
        return out;
    };
    return protocol;
}

Protocol distqec::basic_syndrome_protocol(const StabilizerCode &code) {
    auto node = std::make_shared<CampaignNode>();
    Protocol protocol;
    protocol.name = "basic-syndrome:" + code.name;
    protocol.num_qubits = layout_campaign_node(*node, 0, code, 1, 0);
    protocol.run = [node, &code](Processor &p) {
        prepare_referenced_block(p, code, *node);
        ProtocolOutcome out;
        out.verification = ec_cycle_basic(p, code, node->node.data, node->node.local[0]).str();
        reset_ideal(p, node->node.local);
        BlockRef block{&code, node->node.data};
        auto targets = reference_targets(p.num_qubits(), code, node->node.data, node->reference);
        auto r = analyze_residual(p, std::span(&block, 1), targets);
        out.residual_weight = r.weight;
        out.logical_error = r.logical_error;
        return out;
    };
    return protocol;
}

Protocol distqec::interface_protocol(const StabilizerCode &code) {
    auto nodes = std::make_shared<std::pair<CampaignNode, CampaignNode>>();
    size_t chain = reduce_logical(code, 'Z').weight();
    Protocol protocol;
    protocol.name = "interface:" + code.name;
    size_t mid = layout_campaign_node(nodes->first, 0, code, 0, chain);
    protocol.num_qubits = layout_campaign_node(nodes->second, mid, code, 0, chain);
    protocol.run = [nodes, &code](Processor &p) {
        const auto &a = nodes->first;
        const auto &b = nodes->second;
        prepare_referenced_block(p, code, a);
        prepare_referenced_block(p, code, b);
        ProtocolOutcome out;
        bool first = true;
        auto probe = [&](const Processor &state) {
            if (first) {
                out.label = interface_fault_class_name(
                    classify_interface_state(state, a.node.interface, b.node.interface));
                first = false;
            }
        };
        ImmediateLinks links;
        int eigenvalue = 1;
        try {
            auto pair = prepare_interface_ancilla(p, a.node.interface, b.node.interface, links, 10, probe);
            for (size_t k = 0; k < pair.verification_parities.size(); k++) {
                out.verification += std::string(k ? "," : "") + (pair.verification_parities[k] ? "odd" : "even");
            }
            auto rz = reduce_logical(code, 'Z');
            couple_interface(p, rz, a.node.data, a.node.interface.chain);
            couple_interface(p, rz, b.node.data, b.node.interface.chain);
            bool parity = false;
            for (auto q : a.node.interface.chain) {
                parity ^= p.measure_x(q);
            }
            for (auto q : b.node.interface.chain) {
                parity ^= p.measure_x(q);
            }
            eigenvalue = (parity ? -1 : 1) * rz.sign() * rz.sign();
        } catch (const VerificationFailure &) {
            out.aborted = true;
            out.verification = "abort";
        }
        auto ifa = interface_qubits(a), ifb = interface_qubits(b);
        reset_ideal(p, ifa);
        reset_ideal(p, ifb);
        fill_residual(out, p, code, a, b, eigenvalue);
        return out;
    };
    return protocol;
}

Protocol distqec::ft_joint_protocol(const StabilizerCode &code, const FtOptions &options) {
    auto nodes = std::make_shared<std::pair<CampaignNode, CampaignNode>>();
    size_t chain = reduce_logical(code, 'Z').weight();
    size_t local = max_generator_weight(code) + 1;
    Protocol protocol;
    protocol.name = "ft-joint:" + code.name;
    size_t mid = layout_campaign_node(nodes->first, 0, code, local, chain);
    protocol.num_qubits = layout_campaign_node(nodes->second, mid, code, local, chain);
    protocol.run = [nodes, &code, options](Processor &p) {
        const auto &a = nodes->first;
        const auto &b = nodes->second;
        prepare_referenced_block(p, code, a);
        prepare_referenced_block(p, code, b);
        ProtocolOutcome out;
        ImmediateLinks links;
        int eigenvalue = 1;
        try {
            auto rz = reduce_logical(code, 'Z');
            auto r = measure_joint_logical_ft(p, code, rz, a.node, rz, b.node, links, options);
            eigenvalue = r.eigenvalue;
            for (size_t k = 0; k < r.repetitions.size(); k++) {
                out.verification += std::string(k ? "," : "") + (r.repetitions[k] > 0 ? "+1" : "-1");
            }
        } catch (const VerificationFailure &) {
            out.aborted = true;
            out.verification = "abort";
        }
        for (const auto *n : {&a, &b}) {
            reset_ideal(p, n->node.local);
            reset_ideal(p, interface_qubits(*n));
        }
        fill_residual(out, p, code, a, b, eigenvalue);
        return out;
    };
    return protocol;
}
