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

#include <ostream>
#include <stdexcept>

using namespace distqec;

namespace {

const char kPauliChars[4] = {'I', 'X', 'Y', 'Z'};

void push_noise(Circuit &out, char pauli, uint32_t q) {
    Step s;
    s.kind = StepKind::Gate;
    s.gate = pauli_gate(pauli);
    s.q0 = q;
    s.noise = true;
    out.push(s);
}

void random_pair(Circuit &out, Rng &rng, uint32_t a, uint32_t b) {
    unsigned k = 1 + static_cast<unsigned>(rng.below(15));
    if (k & 3) {
        push_noise(out, kPauliChars[k & 3], a);
    }
    if (k >> 2) {
        push_noise(out, kPauliChars[k >> 2], b);
    }
}

}  // namespace

Circuit distqec::apply_stochastic_noise(const Circuit &circuit, const ErrorModel &model, Rng &rng) {
    model.validate();
    Circuit out(circuit.num_qubits());
    for (const auto &s : circuit.steps()) {
        if (s.kind == StepKind::Measure) {
            bool flip = model.p_meas > 0 && rng.uniform() < model.p_meas;
            if (flip) {
                push_noise(out, 'X', s.q0);
            }
            out.push(s);
            if (flip) {
                push_noise(out, 'X', s.q0);
            }
            continue;
        }
        out.push(s);
        if (s.noise) {
            continue;
        }
        switch (s.kind) {
            case StepKind::Gate:
                if (is_two_qubit(s.gate)) {
                    if (model.p2 > 0 && rng.uniform() < model.p2) {
                        random_pair(out, rng, s.q0, s.q1);
                    }
                } else if (model.p1 > 0 && rng.uniform() < model.p1) {
                    push_noise(out, kPauliChars[1 + rng.below(3)], s.q0);
                }
                break;
            case StepKind::Idle:
                if (model.p_mem > 0) {
                    if (rng.uniform() < model.p_mem) {
                        push_noise(out, 'X', s.q0);
                    }
                    if (rng.uniform() < model.p_mem) {
                        push_noise(out, 'Z', s.q0);
                    }
                }
                break;
            case StepKind::Bell:
                if (model.bell_error > 0 && rng.uniform() < model.bell_error) {
                    random_pair(out, rng, s.q0, s.q1);
                }
                break;
            default:
                break;
        }
    }
    return out;
}

std::string distqec::pauli_class_name(PauliClass c) {
    switch (c) {
        case PauliClass::X:
            return "X";
        case PauliClass::Z:
            return "Z";
        case PauliClass::XYZ:
            return "XYZ";
    }
    return "?";
}

PauliClass distqec::pauli_class_by_name(const std::string &name) {
    if (name == "X") {
        return PauliClass::X;
    }
    if (name == "Z") {
        return PauliClass::Z;
    }
    if (name == "XYZ") {
        return PauliClass::XYZ;
    }
    throw std::invalid_argument("unknown Pauli class '" + name + "' (expected X, Z or XYZ)");
}

std::vector<PauliString> distqec::fault_paulis(PauliClass cls, size_t width) {
    if (width != 1 && width != 2) {
        throw std::invalid_argument("fault sites act on one or two qubits");
    }
    std::vector<PauliString> out;
    auto make = [&](unsigned k) {
        PauliString p(width);
        p.set(0, kPauliChars[k & 3]);
        if (width == 2) {
            p.set(1, kPauliChars[k >> 2]);
        }
        out.push_back(p);
    };
    unsigned limit = width == 1 ? 4 : 16;
    for (unsigned k = 1; k < limit; k++) {
        unsigned lo = k & 3, hi = k >> 2;
        bool keep = cls == PauliClass::XYZ;
        if (cls == PauliClass::X) {
            keep = (lo == 0 || lo == 1) && (hi == 0 || hi == 1);
        } else if (cls == PauliClass::Z) {
            keep = (lo == 0 || lo == 3) && (hi == 0 || hi == 3);
        }
        if (keep) {
            make(k);
        }
    }
    return out;
}

FaultCampaign distqec::run_campaign(const Protocol &protocol, PauliClass paulis, uint64_t seed) {
    FaultCampaign campaign;
    campaign.protocol = protocol.name;
    campaign.paulis = paulis;
    {
        Rng rng(seed);
        Processor p(protocol.num_qubits, rng);
        p.set_site_log(&campaign.locations);
        protocol.run(p);
    }
    for (const auto &site : campaign.locations) {
        for (const auto &pauli : fault_paulis(paulis, site.qubits.size())) {
            Rng rng(seed);
            Processor p(protocol.num_qubits, rng);
            p.inject({site.index, pauli});
            campaign.results.push_back({site, pauli, protocol.run(p)});
        }
    }
    return campaign;
}

FaultCampaign distqec::enumerate_single_faults(const Circuit &circuit, PauliClass paulis, uint64_t seed) {
    Protocol protocol;
    protocol.name = "circuit";
    protocol.num_qubits = circuit.num_qubits();
    protocol.run = [&circuit](Processor &p) {
        auto records = run_circuit(p, circuit);
        ProtocolOutcome out;
        for (bool r : records) {
            out.verification += r ? '1' : '0';
        }
        return out;
    };
    return run_campaign(protocol, paulis, seed);
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

void distqec::write_campaign_csv(std::ostream &out, const FaultCampaign &campaign) {
    out << "fault_location,fault_pauli,verification_outcome,residual_weight,logical_error\n";
    for (const auto &r : campaign.results) {
        std::string pauli = r.pauli.str();
        if (!pauli.empty() && (pauli[0] == '+' || pauli[0] == '-')) {
            pauli = pauli.substr(1);
        }
        out << csv_field(r.site.label()) << ',' << pauli << ',' << csv_field(r.outcome.verification) << ','
            << r.outcome.residual_weight << ',' << (r.outcome.logical_error ? 1 : 0) << '\n';
    }
}
