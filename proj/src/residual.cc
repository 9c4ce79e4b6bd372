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


#include "distqec/residual.h"

#include <algorithm>
#include <limits>
#include <optional>

using namespace distqec;

size_t distqec::coset_weight(const StabilizerCode &code, const PauliString &error) {
    size_t best = std::numeric_limits<size_t>::max();
    for (uint32_t mask = 0; mask < (uint32_t{1} << code.num_generators()); mask++) {
        best = std::min(best, (error * code.group_element(mask)).weight());
    }
    return best;
}

namespace {

bool anticommutes(const PauliString &a, const PauliString &b) {
    return !a.commutes(b);
}

}  // namespace

ResidualReport distqec::analyze_residual(const Processor &processor, std::span<const BlockRef> blocks,
                                         std::span<const PauliString> targets) {
    size_t nq = processor.num_qubits();
    ResidualReport report;
    std::vector<PauliString> corrections;
    bool unreadable = false;
    for (const auto &b : blocks) {
        const auto &code = *b.code;
        uint32_t s = 0;
        for (size_t i = 0; i < code.num_generators(); i++) {
            auto v = processor.peek(on_block(nq, code.generators[i], b.data));
            if (!v) {
                unreadable = true;
                break;
            }
            if (*v < 0) {
                s |= uint32_t{1} << i;
            }
        }
        report.syndromes.push_back(s);
        corrections.push_back(code.decode(s));
    }
    auto worst_case = [&]() {
        size_t w = 0;
        for (const auto &b : blocks) {
            w = std::max(w, b.code->n + 1);
        }
        report.weight = w;
        report.logical_error = true;
        return report;
    };
    if (unreadable) {
        return worst_case();
    }

    // Flip bit of each target once the decoder's correction is applied.
    PauliString total_correction(nq);
    for (size_t k = 0; k < blocks.size(); k++) {
        total_correction *= on_block(nq, corrections[k], blocks[k].data);
    }
    std::vector<bool> flips;
    for (const auto &t : targets) {
        auto v = processor.peek(t);
        if (!v) {
            return worst_case();
        }
        bool f = *v < 0;
        f ^= anticommutes(total_correction, t);
        flips.push_back(f);
    }

    // Logical representatives per block: I, X, Y, Z.
    std::vector<std::vector<PauliString>> reps;
    for (const auto &b : blocks) {
        const auto &code = *b.code;
        PauliString lx = code.logical_x[0], lz = code.logical_z[0];
        reps.push_back({PauliString(code.n), lx, lx * lz, lz});
    }
    size_t combos = size_t{1} << (2 * blocks.size());
    std::optional<size_t> best;
    bool identity_consistent = false;
    for (size_t c = 0; c < combos; c++) {
        PauliString logical(nq);
        for (size_t k = 0; k < blocks.size(); k++) {
            logical *= on_block(nq, reps[k][(c >> (2 * k)) & 3], blocks[k].data);
        }
        bool ok = true;
        for (size_t t = 0; t < targets.size() && ok; t++) {
            ok = anticommutes(logical, targets[t]) == flips[t];
        }
        if (!ok) {
            continue;
        }
        if (c == 0) {
            identity_consistent = true;
        }
        size_t w = 0;
        for (size_t k = 0; k < blocks.size(); k++) {
            w = std::max(w, coset_weight(*blocks[k].code, corrections[k] * reps[k][(c >> (2 * k)) & 3]));
        }
        if (!best || w < *best) {
            best = w;
        }
    }
    if (!best) {
        return worst_case();
    }
    report.weight = *best;
    report.logical_error = !identity_consistent;
    return report;
}

void distqec::attach_reference(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                               uint32_t reference) {
    Processor::Ideal ideal(processor);
    processor.reset(reference);
    processor.h(reference);
    const auto &lx = code.logical_x[0];
    for (uint32_t k = 0; k < code.n; k++) {
        char c = lx.get(k);
        if (c != 'I') {
            processor.controlled_pauli(c, reference, data[k]);
        }
    }
    if (lx.sign() < 0) {
        processor.gate(GateKind::Z, reference);
    }
}

std::vector<PauliString> distqec::reference_targets(size_t num_qubits, const StabilizerCode &code,
                                                    std::span<const uint32_t> data, uint32_t reference) {
    std::vector<PauliString> out;
    for (const auto &l : {code.logical_x[0], code.logical_z[0]}) {
        auto t = on_block(num_qubits, l, data);
        t *= PauliString::single(num_qubits, reference, l == code.logical_x[0] ? 'X' : 'Z');
        out.push_back(t);
    }
    return out;
}
