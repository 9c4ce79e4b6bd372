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

#include "distqec/state_vector.h"

#include <bit>
#include <cmath>
#include <string>

using namespace distqec;

using cd = std::complex<double>;

StateVector::StateVector(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw ResourceError("dense simulation of " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                            std::to_string(kMaxQubits));
    }
    amps_.assign(size_t{1} << n_, cd(0, 0));
    amps_[0] = 1;
}

void StateVector::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a " + std::to_string(n_) +
                                "-qubit state vector");
    }
}

void StateVector::apply(GateKind gate, uint32_t a, uint32_t b) {
    check_qubit(a);
    if (is_two_qubit(gate)) {
        check_qubit(b);
        if (a == b) {
            throw std::invalid_argument("two-qubit gate on a single qubit");
        }
    }
    const size_t dim = amps_.size();
    const size_t ma = size_t{1} << a;
    const size_t mb = size_t{1} << b;
    const double r = 1 / std::sqrt(2.0);
    const cd i(0, 1);
    switch (gate) {
        case GateKind::H:
            for (size_t k = 0; k < dim; k++) {
                if (!(k & ma)) {
                    cd v0 = amps_[k], v1 = amps_[k | ma];
                    amps_[k] = (v0 + v1) * r;
                    amps_[k | ma] = (v0 - v1) * r;
                }
            }
            break;
        case GateKind::S:
        case GateKind::S_DAG: {
            cd phase = gate == GateKind::S ? i : -i;
            for (size_t k = 0; k < dim; k++) {
                if (k & ma) {
                    amps_[k] *= phase;
                }
            }
            break;
        }
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            apply_pauli(PauliString::single(n_, a, gate_name(gate)[0]));
            break;
        case GateKind::CNOT:
            for (size_t k = 0; k < dim; k++) {
                if ((k & ma) && !(k & mb)) {
                    std::swap(amps_[k], amps_[k | mb]);
                }
            }
            break;
        case GateKind::CY:
            // Y|0> = i|1>, Y|1> = -i|0>.
            for (size_t k = 0; k < dim; k++) {
                if ((k & ma) && !(k & mb)) {
                    cd v0 = amps_[k], v1 = amps_[k | mb];
                    amps_[k] = -i * v1;
                    amps_[k | mb] = i * v0;
                }
            }
            break;
        case GateKind::CZ:
            for (size_t k = 0; k < dim; k++) {
                if ((k & ma) && (k & mb)) {
                    amps_[k] = -amps_[k];
                }
            }
            break;
    }
}

void StateVector::pauli_image(const PauliString &p, std::vector<cd> &out) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli string size does not match state vector");
    }
    uint64_t xm = p.xs().empty() ? 0 : p.xs()[0];
    uint64_t zm = p.zs().empty() ? 0 : p.zs()[0];
    // Y = iXZ on each qubit with both bits set.
    unsigned scalar = (p.log_i() + std::popcount(xm & zm)) & 3;
    static const cd powers[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    out.assign(amps_.size(), cd(0, 0));
    for (size_t k = 0; k < amps_.size(); k++) {
        cd v = amps_[k] * powers[scalar];
        if (std::popcount(k & zm) & 1) {
            v = -v;
        }
        out[k ^ xm] = v;
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    std::vector<cd> out;
    pauli_image(p, out);
    amps_.swap(out);
}

double StateVector::expectation(const PauliString &p) const {
    std::vector<cd> img;
    pauli_image(p, img);
    cd acc = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        acc += std::conj(amps_[k]) * img[k];
    }
    return acc.real();
}

MeasureResult StateVector::measure(const PauliString &observable, OutcomeSource &outcomes) {
    if (!observable.is_hermitian()) {
        throw std::invalid_argument("measure: observable " + observable.str() + " has an imaginary sign");
    }
    std::vector<cd> img;
    pauli_image(observable, img);
    cd e = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        e += std::conj(amps_[k]) * img[k];
    }
    double p_minus = (1 - e.real()) / 2;
    bool deterministic = p_minus < kDeterministicTolerance || p_minus > 1 - kDeterministicTolerance;
    bool minus = deterministic ? p_minus > 0.5 : outcomes.draw(p_minus);
    // Project with (I +- P)/2 and renormalize.
    double s = minus ? -1 : 1;
    double prob = minus ? p_minus : 1 - p_minus;
    double scale = 1 / (2 * std::sqrt(prob));
    for (size_t k = 0; k < amps_.size(); k++) {
        amps_[k] = (amps_[k] + s * img[k]) * scale;
    }
    return {minus ? -1 : 1, deterministic};
}

MeasureResult StateVector::measure_z(uint32_t q, OutcomeSource &outcomes) {
    check_qubit(q);
    return measure(PauliString::single(n_, q, 'Z'), outcomes);
}

void StateVector::reset(uint32_t q, OutcomeSource &outcomes) {
    if (measure_z(q, outcomes).eigenvalue < 0) {
        apply(GateKind::X, q);
    }
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

bool StateVector::equal_up_to_phase(const StateVector &other, double tol) const {
    return equal_up_to_phase(other.amps_, tol);
}

bool StateVector::equal_up_to_phase(const std::vector<cd> &other, double tol) const {
    if (other.size() != amps_.size()) {
        return false;
    }
    // Align phases on the largest amplitude.
    size_t best = 0;
    for (size_t k = 1; k < amps_.size(); k++) {
        if (std::abs(amps_[k]) > std::abs(amps_[best])) {
            best = k;
        }
    }
    if (std::abs(other[best]) < tol) {
        return false;
    }
    cd phase = amps_[best] / other[best];
    phase /= std::abs(phase);
    for (size_t k = 0; k < amps_.size(); k++) {
        if (std::abs(amps_[k] - phase * other[k]) > tol) {
            return false;
        }
    }
    return true;
}

bool distqec::tableau_matches_state(const Tableau &tableau, const StateVector &state, double tol) {
    if (tableau.num_qubits() != state.num_qubits()) {
        return false;
    }
    for (const auto &s : tableau.stabilizers()) {
        if (std::abs(state.expectation(s) - 1) > tol) {
            return false;
        }
    }
    return true;
}
