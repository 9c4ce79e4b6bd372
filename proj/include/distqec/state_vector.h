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

#ifndef DISTQEC_STATE_VECTOR_H
#define DISTQEC_STATE_VECTOR_H

#include <complex>
#include <stdexcept>
#include <vector>

#include "distqec/gate.h"
#include "distqec/outcome_source.h"
#include "distqec/pauli_string.h"
#include "distqec/tableau.h"

namespace distqec {

/// Raised when a dense simulation would exceed the qubit limit.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Dense amplitude vector used as an independent check on the tableau.
///
/// Basis index bit q holds qubit q. Limited to `kMaxQubits` qubits.
class StateVector {
   public:
    static constexpr size_t kMaxQubits = 16;
    /// Probabilities closer than this to 0 or 1 count as deterministic.
    static constexpr double kDeterministicTolerance = 1e-10;

    explicit StateVector(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amps_;
    }
    std::vector<std::complex<double>> &amplitudes() {
        return amps_;
    }

    void apply(GateKind gate, uint32_t a, uint32_t b = 0);
    void apply_pauli(const PauliString &p);

    /// <psi|P|psi> for a Hermitian Pauli.
    double expectation(const PauliString &p) const;
    MeasureResult measure(const PauliString &observable, OutcomeSource &outcomes);
    MeasureResult measure_z(uint32_t q, OutcomeSource &outcomes);
    void reset(uint32_t q, OutcomeSource &outcomes);

    double norm() const;
    /// Equality up to global phase within `tol` on every amplitude.
    bool equal_up_to_phase(const StateVector &other, double tol = 1e-10) const;
    /// Same check against a raw amplitude list.
    bool equal_up_to_phase(const std::vector<std::complex<double>> &other, double tol = 1e-10) const;

   private:
    void check_qubit(uint32_t q) const;
    /// Computes P|psi> into `out`.
    void pauli_image(const PauliString &p, std::vector<std::complex<double>> &out) const;

    size_t n_;
    std::vector<std::complex<double>> amps_;
};

/// True when every stabilizer of `tableau` has expectation +1 on `state`,
/// i.e. both describe the same state up to global phase.
bool tableau_matches_state(const Tableau &tableau, const StateVector &state, double tol = 1e-10);

}  // namespace distqec

#endif
