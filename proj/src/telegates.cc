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


#include "distqec/telegates.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace distqec;

BellLink distqec::deliver_link(Processor &processor, uint32_t a, uint32_t b) {
    processor.deliver_bell_pair(a, b);
    return BellLink{a, b, true, false};
}

CzResult distqec::cz_by_measurement(Processor &processor, const CzOperands &ops, const OperatorMeasurement &measure) {
    if (!processor.has_noise()) {
        auto plus = processor.peek(ops.x_anc);
        if (!plus || *plus != 1) {
            throw std::logic_error("cz_by_measurement: ancilla is not in the +1 eigenstate of its X operator");
        }
    }
    CzResult r;
    r.zz.eigenvalue = measure(ops.z_a * ops.z_anc);
    if (r.zz.eigenvalue < 0) {
        processor.correct(ops.x_anc);
        r.zz.applied_correction = ops.x_anc;
    }
    r.zx.eigenvalue = measure(ops.z_b * ops.x_anc);
    if (r.zx.eigenvalue < 0) {
        processor.correct(ops.z_a);
        r.zx.applied_correction = ops.z_a;
    }
    r.anc.eigenvalue = measure(ops.z_anc);
    if (r.anc.eigenvalue < 0) {
        processor.correct(ops.z_b);
        r.anc.applied_correction = ops.z_b;
    }
    return r;
}

CzResult distqec::cz_by_measurement(Processor &processor, uint32_t a, uint32_t b, uint32_t anc) {
    size_t n = processor.num_qubits();
    if (a == b || a == anc || b == anc) {
        throw std::invalid_argument("cz_by_measurement: qubits must be distinct");
    }
    processor.reset(anc);
    processor.h(anc);
    CzOperands ops{PauliString::single(n, a, 'Z'), PauliString::single(n, b, 'Z'), PauliString::single(n, anc, 'Z'),
                   PauliString::single(n, anc, 'X')};
    return cz_by_measurement(processor, ops,
                             [&](const PauliString &p) { return processor.measure_pauli(p).eigenvalue; });
}

CzResult distqec::cz_by_measurement(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> a,
                                    std::span<const uint32_t> b, std::span<const uint32_t> anc) {
    size_t n = processor.num_qubits();
    CzOperands ops{on_block(n, code.logical_z[0], a), on_block(n, code.logical_z[0], b),
                   on_block(n, code.logical_z[0], anc), on_block(n, code.logical_x[0], anc)};
    return cz_by_measurement(processor, ops,
                             [&](const PauliString &p) { return processor.measure_pauli(p).eigenvalue; });
}

std::string JointMeasurementPlan::str(size_t num_qubits) const {
    Circuit c(num_qubits);
    c.bell(bell_a, bell_b);
    for (const auto &k : coupling) {
        c.gate(k.gate, k.control, k.target);
    }
    c.gate(GateKind::H, bell_a);
    c.gate(GateKind::H, bell_b);
    c.measure(bell_a);
    c.measure(bell_b);
    return c.str();
}

JointMeasurementPlan distqec::make_joint_plan(size_t num_qubits, const PauliString &local_a,
                                              std::span<const uint32_t> block_a, const PauliString &local_b,
                                              std::span<const uint32_t> block_b, const BellLink &link) {
    if (!local_a.is_hermitian() || !local_b.is_hermitian()) {
        throw std::invalid_argument("joint measurement operators must be Hermitian");
    }
    JointMeasurementPlan plan;
    plan.operator_a = PauliString::embed(num_qubits, local_a, block_a);
    plan.operator_b = PauliString::embed(num_qubits, local_b, block_b);
    plan.block_a.assign(block_a.begin(), block_a.end());
    plan.block_b.assign(block_b.begin(), block_b.end());
    plan.bell_a = link.a;
    plan.bell_b = link.b;
    auto add = [&](const PauliString &local, std::span<const uint32_t> block, uint32_t control) {
        std::vector<std::pair<uint32_t, char>> factors;
        for (size_t k = 0; k < block.size(); k++) {
            char c = local.get(k);
            if (c != 'I') {
                factors.emplace_back(block[k], c);
            }
        }
        std::sort(factors.begin(), factors.end());
        for (auto [q, c] : factors) {
            plan.coupling.push_back({control, q, controlled_pauli_gate(c)});
        }
    };
    add(local_a, block_a, link.a);
    add(local_b, block_b, link.b);
    return plan;
}

int distqec::measure_joint_logical(Processor &processor, const JointMeasurementPlan &plan, BellLink &link) {
    if (!link.delivered) {
        throw std::invalid_argument("joint measurement: Bell link was never delivered");
    }
    if (link.consumed) {
        throw std::invalid_argument("joint measurement: Bell link already consumed");
    }
    if (link.a != plan.bell_a || link.b != plan.bell_b) {
        throw std::invalid_argument("joint measurement: plan was built for a different link");
    }
    auto inside = [](const PauliString &op, const std::vector<uint32_t> &block) {
        for (auto q : op.support()) {
            if (std::find(block.begin(), block.end(), q) == block.end()) {
                return false;
            }
        }
        return true;
    };
    if (!inside(plan.operator_a, plan.block_a) || !inside(plan.operator_b, plan.block_b)) {
        throw std::invalid_argument("joint measurement: operator acts outside its block");
    }
    for (auto q : {plan.bell_a, plan.bell_b}) {
        if (std::find(plan.block_a.begin(), plan.block_a.end(), q) != plan.block_a.end() ||
            std::find(plan.block_b.begin(), plan.block_b.end(), q) != plan.block_b.end()) {
            throw std::invalid_argument("joint measurement: Bell half overlaps a data block");
        }
    }
    std::vector<uint32_t> touched;
    for (const auto &c : plan.coupling) {
        if (c.control != plan.bell_a && c.control != plan.bell_b) {
            throw std::invalid_argument("joint measurement: couplings must be controlled by Bell halves");
        }
        if (std::find(touched.begin(), touched.end(), c.target) != touched.end()) {
            throw std::invalid_argument("joint measurement: data qubit coupled twice");
        }
        touched.push_back(c.target);
    }
    link.consumed = true;
    for (const auto &c : plan.coupling) {
        processor.gate(c.gate, c.control, c.target);
    }
    bool j = processor.measure_x(plan.bell_a);
    bool k = processor.measure_x(plan.bell_b);
    int sign = plan.operator_a.sign() * plan.operator_b.sign();
    return (j ^ k) ? -sign : sign;
}

BellPrepResult distqec::prepare_encoded_bell_nonft(Processor &processor, const StabilizerCode &code,
                                                   const NodeLayout &a, const NodeLayout &b, BellLink &link,
                                                   size_t ec_cycles) {
    if (!link.delivered || link.consumed) {
        throw std::invalid_argument("encoded Bell preparation: no Bell link available");
    }
    BellPrepResult r;
    for (size_t c = 0; c < ec_cycles; c++) {
        r.syndromes_a.push_back(ec_cycle_basic(processor, code, a.data, a.local.at(0)));
        r.syndromes_a.back().repetition_index = c;
        r.syndromes_b.push_back(ec_cycle_basic(processor, code, b.data, b.local.at(0)));
        r.syndromes_b.back().repetition_index = c;
    }
    auto plan = make_joint_plan(processor.num_qubits(), code.logical_x[0], a.data, code.logical_x[0], b.data, link);
    r.parity = measure_joint_logical(processor, plan, link);
    r.repetitions = {r.parity};
    if (r.parity < 0) {
        processor.correct(on_block(processor.num_qubits(), code.logical_z[0], b.data));
        r.corrected = true;
    }
    return r;
}

std::vector<PauliString> distqec::encoded_bell_stabilizers(size_t num_qubits, const StabilizerCode &code,
                                                           std::span<const uint32_t> a, std::span<const uint32_t> b) {
    std::vector<PauliString> out;
    for (const auto &g : code.generators) {
        out.push_back(on_block(num_qubits, g, a));
    }
    for (const auto &g : code.generators) {
        out.push_back(on_block(num_qubits, g, b));
    }
    out.push_back(on_block(num_qubits, code.logical_x[0], a) * on_block(num_qubits, code.logical_x[0], b));
    out.push_back(on_block(num_qubits, code.logical_z[0], a) * on_block(num_qubits, code.logical_z[0], b));
    return out;
}
