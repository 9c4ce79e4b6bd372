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


#include "distqec/processor.h"

#include <cmath>

using namespace distqec;

std::optional<int> StateVectorBackend::peek(const PauliString &observable) const {
    double e = state.expectation(observable);
    if (std::abs(e - 1) < 1e-9) {
        return 1;
    }
    if (std::abs(e + 1) < 1e-9) {
        return -1;
    }
    return std::nullopt;
}

Processor::Processor(std::unique_ptr<Backend> backend, Rng &rng, ErrorModel model)
    : backend_(std::move(backend)), rng_(rng), rng_outcomes_(rng), outcomes_(&rng_outcomes_), model_(model) {
    model_.validate();
}

Processor::Processor(size_t n, Rng &rng, ErrorModel model)
    : Processor(std::make_unique<TableauBackend>(n), rng, model) {
}

const Tableau &Processor::tableau() const {
    auto *b = dynamic_cast<const TableauBackend *>(backend_.get());
    if (!b) {
        throw std::logic_error("processor is not tableau-backed");
    }
    return b->state;
}

const StateVector &Processor::state_vector() const {
    auto *b = dynamic_cast<const StateVectorBackend *>(backend_.get());
    if (!b) {
        throw std::logic_error("processor is not state-vector-backed");
    }
    return b->state;
}

void Processor::inject(InjectedFault fault) {
    for (const auto &f : injections_) {
        if (f.site == fault.site) {
            throw std::invalid_argument("a fault is already injected at site " + std::to_string(fault.site));
        }
    }
    injections_.push_back(std::move(fault));
}

void Processor::pauli_on(uint32_t q, unsigned code) {
    static const GateKind kinds[4] = {GateKind::X, GateKind::X, GateKind::Y, GateKind::Z};
    if (code & 3) {
        backend_->apply(kinds[code & 3], q, 0);
    }
}

void Processor::apply_injection(const std::vector<uint32_t> &qubits, const PauliString &local) {
    if (local.num_qubits() != qubits.size()) {
        throw std::invalid_argument("injected fault " + local.str() + " does not match a site on " +
                                    std::to_string(qubits.size()) + " qubits");
    }
    for (size_t k = 0; k < qubits.size(); k++) {
        char c = local.get(k);
        if (c != 'I') {
            backend_->apply(pauli_gate(c), qubits[k], 0);
        }
    }
}

void Processor::site(SiteKind kind, const std::vector<uint32_t> &qubits) {
    size_t index = next_site_++;
    if (site_log_) {
        FaultSite s;
        s.index = index;
        s.kind = kind;
        s.qubits = qubits;
        site_log_->push_back(std::move(s));
    }
    for (const auto &f : injections_) {
        if (f.site == index) {
            apply_injection(qubits, f.pauli);
        }
    }
}

void Processor::site(SiteKind kind, GateKind gate, std::initializer_list<uint32_t> qubits) {
    size_t index = next_site_++;
    if (site_log_) {
        FaultSite s;
        s.index = index;
        s.kind = kind;
        s.gate = gate;
        s.qubits = qubits;
        site_log_->push_back(std::move(s));
    }
    if (!injections_.empty()) {
        for (const auto &f : injections_) {
            if (f.site == index) {
                apply_injection(std::vector<uint32_t>(qubits), f.pauli);
            }
        }
    }
}

void Processor::random_pauli_1(uint32_t q) {
    pauli_on(q, 1 + static_cast<unsigned>(rng_.below(3)));
}

void Processor::random_pauli_2(uint32_t a, uint32_t b) {
    unsigned k = 1 + static_cast<unsigned>(rng_.below(15));
    pauli_on(a, k & 3);
    pauli_on(b, k >> 2);
}

void Processor::gate(GateKind g, uint32_t a, uint32_t b) {
    backend_->apply(g, a, b);
    counts_.gates++;
    if (trace_) {
        trace_->gate(g, a, b);
    }
    if (ideal_depth_) {
        return;
    }
    bool two = is_two_qubit(g);
    if (two) {
        site(SiteKind::Gate, g, {a, b});
        if (model_.p2 > 0 && rng_.uniform() < model_.p2) {
            random_pauli_2(a, b);
        }
    } else {
        site(SiteKind::Gate, g, {a});
        if (model_.p1 > 0 && rng_.uniform() < model_.p1) {
            random_pauli_1(a);
        }
    }
}

bool Processor::measure(uint32_t q) {
    bool flip = false;
    if (!ideal_depth_) {
        site(SiteKind::Measure, GateKind::H, {q});
        flip = model_.p_meas > 0 && rng_.uniform() < model_.p_meas;
    }
    counts_.measurements++;
    if (trace_) {
        trace_->measure(q);
    }
    return backend_->measure_z(q, *outcomes_).bit() ^ flip;
}

bool Processor::measure_x(uint32_t q) {
    gate(GateKind::H, q);
    return measure(q);
}

MeasureResult Processor::measure_pauli(const PauliString &observable) {
    bool flip = false;
    if (!ideal_depth_) {
        site(SiteKind::Measure, observable.support());
        flip = model_.p_meas > 0 && rng_.uniform() < model_.p_meas;
    }
    counts_.measurements++;
    MeasureResult r = backend_->measure(observable, *outcomes_);
    if (flip) {
        r.eigenvalue = -r.eigenvalue;
    }
    return r;
}

void Processor::reset(uint32_t q) {
    backend_->reset(q, *outcomes_);
    counts_.resets++;
    if (trace_) {
        trace_->reset(q);
    }
    if (!ideal_depth_) {
        site(SiteKind::Reset, GateKind::H, {q});
    }
}

void Processor::idle(uint32_t q) {
    counts_.idles++;
    if (trace_) {
        trace_->idle(q);
    }
    if (ideal_depth_) {
        return;
    }
    site(SiteKind::Idle, GateKind::H, {q});
    if (model_.p_mem > 0) {
        if (rng_.uniform() < model_.p_mem) {
            backend_->apply(GateKind::X, q, 0);
        }
        if (rng_.uniform() < model_.p_mem) {
            backend_->apply(GateKind::Z, q, 0);
        }
    }
}

void Processor::deliver_bell_pair(uint32_t a, uint32_t b) {
    backend_->reset(a, *outcomes_);
    backend_->reset(b, *outcomes_);
    backend_->apply(GateKind::H, a, 0);
    backend_->apply(GateKind::CNOT, a, b);
    counts_.bell_pairs++;
    if (trace_) {
        trace_->bell(a, b);
    }
    if (ideal_depth_) {
        return;
    }
    site(SiteKind::Bell, GateKind::H, {a, b});
    if (model_.bell_error > 0 && rng_.uniform() < model_.bell_error) {
        random_pauli_2(a, b);
    }
}

void Processor::correct(const PauliString &p) {
    backend_->apply_pauli(p);
}

void Processor::correct(char pauli, uint32_t q) {
    if (pauli != 'I') {
        backend_->apply(pauli_gate(pauli), q, 0);
    }
}

std::vector<bool> distqec::run_circuit(Processor &processor, const Circuit &circuit) {
    if (circuit.num_qubits() > processor.num_qubits()) {
        throw std::invalid_argument("circuit is wider than the processor");
    }
    std::vector<bool> records(circuit.num_records(), false);
    for (const auto &s : circuit.steps()) {
        switch (s.kind) {
            case StepKind::Gate:
                if (s.noise) {
                    processor.correct(gate_name(s.gate)[0], s.q0);
                } else {
                    processor.gate(s.gate, s.q0, s.q1);
                }
                break;
            case StepKind::Measure:
                records[s.record] = processor.measure(s.q0);
                break;
            case StepKind::Reset:
                processor.reset(s.q0);
                break;
            case StepKind::Idle:
                processor.idle(s.q0);
                break;
            case StepKind::Bell:
                processor.deliver_bell_pair(s.q0, s.q1);
                break;
            case StepKind::Conditional: {
                bool parity = false;
                for (auto r : s.condition) {
                    parity ^= records[r];
                }
                if (parity) {
                    processor.correct(gate_name(s.gate)[0], s.q0);
                }
                break;
            }
        }
    }
    return records;
}

OracleResult distqec::oracle_run(const Circuit &circuit, OutcomeSource &outcomes) {
    if (circuit.num_qubits() > StateVector::kMaxQubits) {
        throw ResourceError("oracle refuses a " + std::to_string(circuit.num_qubits()) +
                            "-qubit circuit; the limit is " + std::to_string(StateVector::kMaxQubits));
    }
    Rng unused(0);
    Processor p(std::make_unique<StateVectorBackend>(circuit.num_qubits()), unused);
    p.set_outcome_source(&outcomes);
    auto records = run_circuit(p, circuit);
    return {p.state_vector(), std::move(records)};
}

OracleResult distqec::oracle_run(const Circuit &circuit, uint64_t seed) {
    Rng rng(seed);
    RngOutcomes outcomes(rng);
    return oracle_run(circuit, outcomes);
}
