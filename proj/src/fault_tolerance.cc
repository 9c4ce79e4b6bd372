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

#include <algorithm>

using namespace distqec;

VerifiedAncillaBlock distqec::prepare_verified_ghz(Processor &processor, std::span<const uint32_t> ghz,
                                                   uint32_t verifier, size_t max_attempts) {
    if (ghz.empty()) {
        throw std::invalid_argument("GHZ block needs at least one qubit");
    }
    VerifiedAncillaBlock block;
    block.kind = AncillaKind::LocalGhz;
    block.qubits.assign(ghz.begin(), ghz.end());
    block.qubits.push_back(verifier);
    while (block.verification_attempts < max_attempts) {
        block.verification_attempts++;
        for (auto q : ghz) {
            processor.reset(q);
        }
        processor.reset(verifier);
        processor.h(ghz[0]);
        for (size_t k = 1; k < ghz.size(); k++) {
            processor.cnot(ghz[k - 1], ghz[k]);
        }
        processor.cnot(ghz.front(), verifier);
        processor.cnot(ghz.back(), verifier);
        if (!processor.measure(verifier)) {
            block.verified = true;
            return block;
        }
    }
    throw VerificationFailure("GHZ verification failed " + std::to_string(max_attempts) + " times");
}

VerifiedAncillaBlock distqec::prepare_verified_ghz4(Processor &processor, std::span<const uint32_t> ancillas,
                                                    size_t max_attempts) {
    if (ancillas.size() != 5) {
        throw std::invalid_argument("GHZ4 preparation needs 5 ancilla qubits");
    }
    return prepare_verified_ghz(processor, ancillas.subspan(0, 4), ancillas[4], max_attempts);
}

uint32_t distqec::resolve_syndromes(const std::vector<uint32_t> &s, MajorityRule rule) {
    if (s.size() == 2 && s[0] == s[1]) {
        return s[0];
    }
    if (s.size() != 3) {
        throw std::invalid_argument("majority vote needs two agreeing or three syndromes");
    }
    if (rule == MajorityRule::PerBit) {
        return (s[0] & s[1]) | (s[0] & s[2]) | (s[1] & s[2]);
    }
    if (s[0] == s[1]) {
        return s[0];
    }
    return s[2];
}

namespace {

uint32_t measure_once_ft(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                         std::span<const uint32_t> ancillas, const FtOptions &options, size_t &attempts) {
    uint32_t bits = 0;
    uint32_t verifier = ancillas.back();
    for (size_t i = 0; i < code.generators.size(); i++) {
        const auto &g = code.generators[i];
        auto support = g.support();
        if (support.size() + 1 > ancillas.size()) {
            throw std::invalid_argument("fault-tolerant extraction needs " + std::to_string(support.size() + 1) +
                                        " ancillas for generator " + g.str());
        }
        auto ghz = ancillas.subspan(0, support.size());
        auto block = prepare_verified_ghz(processor, ghz, verifier, options.max_attempts);
        attempts += block.verification_attempts;
        for (size_t k = 0; k < support.size(); k++) {
            processor.controlled_pauli(g.get(support[k]), ghz[k], data[support[k]]);
        }
        bool parity = g.sign() < 0;
        for (auto q : ghz) {
            parity ^= processor.measure_x(q);
        }
        if (parity) {
            bits |= uint32_t{1} << i;
        }
    }
    return bits;
}

}  // namespace

MajorityVoteLog distqec::extract_syndrome_ft(Processor &processor, const StabilizerCode &code,
                                             std::span<const uint32_t> data, std::span<const uint32_t> ancillas,
                                             const FtOptions &options) {
    if (data.size() != code.n) {
        throw std::invalid_argument("extract_syndrome_ft: expected " + std::to_string(code.n) + " data qubits");
    }
    if (ancillas.size() < 2) {
        throw std::invalid_argument("extract_syndrome_ft: missing ancilla register");
    }
    MajorityVoteLog log;
    std::vector<uint32_t> raw;
    auto once = [&]() {
        uint32_t bits = measure_once_ft(processor, code, data, ancillas, options, log.ghz_attempts);
        SyndromeRecord rec;
        rec.bits = bits;
        rec.num_bits = code.num_generators();
        rec.repetition_index = raw.size();
        rec.source = SyndromeSource::FaultTolerant;
        log.syndromes.push_back(rec);
        raw.push_back(bits);
    };
    once();
    once();
    if (raw[0] != raw[1]) {
        once();
    }
    log.resolved = resolve_syndromes(raw, options.rule);
    return log;
}

MajorityVoteLog distqec::ec_cycle_ft(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                                     std::span<const uint32_t> ancillas, const FtOptions &options) {
    auto log = extract_syndrome_ft(processor, code, data, ancillas, options);
    apply_correction(processor, code, data, log.resolved);
    return log;
}

InterfacePair distqec::prepare_interface_ancilla(Processor &processor, const InterfaceLayout &a,
                                                 const InterfaceLayout &b, LinkProvider &links,
                                                 size_t max_attempts, const InterfaceProbe &probe) {
    if (a.chain.empty() || b.chain.empty()) {
        throw std::invalid_argument("interface ancilla needs at least one chain qubit per node");
    }
    InterfacePair out;
    out.a.kind = out.b.kind = AncillaKind::Interface;
    out.a.qubits = a.chain;
    out.a.qubits.push_back(a.verifier);
    out.b.qubits = b.chain;
    out.b.qubits.push_back(b.verifier);
    for (size_t attempt = 1; attempt <= max_attempts; attempt++) {
        out.a.verification_attempts = out.b.verification_attempts = attempt;
        for (const auto *node : {&a, &b}) {
            for (size_t k = 1; k < node->chain.size(); k++) {
                processor.reset(node->chain[k]);
            }
        }
        links.request(processor, a.chain[0], b.chain[0]);
        links.request(processor, a.verifier, b.verifier);
        out.links_consumed += 2;
        for (const auto *node : {&a, &b}) {
            for (size_t k = 1; k < node->chain.size(); k++) {
                processor.cnot(node->chain[k - 1], node->chain[k]);
            }
            processor.cnot(node->chain.back(), node->verifier);
        }
        if (probe) {
            probe(processor);
        }
        bool odd = processor.measure(a.verifier) ^ processor.measure(b.verifier);
        out.verification_parities.push_back(odd);
        if (!odd) {
            out.a.verified = out.b.verified = true;
            return out;
        }
    }
    throw VerificationFailure("interface verification failed " + std::to_string(max_attempts) + " times");
}

void distqec::couple_interface(Processor &processor, const PauliString &local, std::span<const uint32_t> data,
                  std::span<const uint32_t> chain) {
    std::vector<std::pair<uint32_t, char>> factors;
    for (uint32_t k = 0; k < local.num_qubits(); k++) {
        char c = local.get(k);
        if (c != 'I') {
            factors.emplace_back(data[k], c);
        }
    }
    std::sort(factors.begin(), factors.end());
    if (factors.size() > chain.size()) {
        throw std::invalid_argument("operator " + local.str() + " has weight " + std::to_string(factors.size()) +
                                    " but the interface block holds " + std::to_string(chain.size()) + " qubits");
    }
    for (size_t k = 0; k < factors.size(); k++) {
        processor.controlled_pauli(factors[k].second, chain[k], factors[k].first);
    }
}

JointFtResult distqec::measure_joint_logical_ft(Processor &processor, const StabilizerCode &code,
                                                const PauliString &local_a, const FtNode &a,
                                                const PauliString &local_b, const FtNode &b, LinkProvider &links,
                                                const FtOptions &options) {
    if (!local_a.is_hermitian() || !local_b.is_hermitian()) {
        throw std::invalid_argument("joint measurement operators must be Hermitian");
    }
    if (local_a.weight() > a.interface.chain.size() || local_b.weight() > b.interface.chain.size()) {
        throw std::invalid_argument("operator weight exceeds the interface block size");
    }
    int sign = local_a.sign() * local_b.sign();
    JointFtResult out;
    auto once = [&]() {
        auto pair = prepare_interface_ancilla(processor, a.interface, b.interface, links, options.max_attempts);
        if (!pair.a.verified || !pair.b.verified) {
            throw VerificationFailure("interface block is not verified");
        }
        out.links_consumed += pair.links_consumed;
        out.interface_attempts += pair.a.verification_attempts;
        out.verification_parities.insert(out.verification_parities.end(), pair.verification_parities.begin(),
                                         pair.verification_parities.end());
        couple_interface(processor, local_a, a.data, a.interface.chain);
        couple_interface(processor, local_b, b.data, b.interface.chain);
        bool parity = false;
        for (auto q : a.interface.chain) {
            parity ^= processor.measure_x(q);
        }
        for (auto q : b.interface.chain) {
            parity ^= processor.measure_x(q);
        }
        out.repetitions.push_back(parity ? -sign : sign);
    };
    auto ec_both = [&]() {
        ec_cycle_ft(processor, code, a.data, a.local, options);
        ec_cycle_ft(processor, code, b.data, b.local, options);
    };
    once();
    ec_both();
    once();
    if (out.repetitions[0] != out.repetitions[1]) {
        ec_both();
        once();
    }
    int total = 0;
    for (int r : out.repetitions) {
        total += r;
    }
    out.eigenvalue = total > 0 ? 1 : -1;
    return out;
}

BellPrepResult distqec::prepare_encoded_bell_ft(Processor &processor, const StabilizerCode &code, const FtNode &a,
                                                const FtNode &b, LinkProvider &links, const FtOptions &options) {
    auto rx = reduce_logical(code, 'X');
    auto joint = measure_joint_logical_ft(processor, code, rx, a, rx, b, links, options);
    BellPrepResult r;
    r.parity = joint.eigenvalue;
    r.links_consumed = joint.links_consumed;
    r.verification_retries = joint.interface_attempts - joint.repetitions.size();
    r.repetitions = joint.repetitions;
    if (r.parity < 0) {
        processor.correct(on_block(processor.num_qubits(), code.logical_z[0], b.data));
        r.corrected = true;
    }
    return r;
}

size_t distqec::ancilla_count(size_t wt, size_t m) {
    if (wt < 1) {
        throw std::invalid_argument("ancilla_count: weight must be at least 1");
    }
    size_t v = 1;
    for (size_t k = 0; k < m; k++) {
        v *= wt;
    }
    return v + 1;
}
