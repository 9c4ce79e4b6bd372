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

#ifndef DISTQEC_TABLEAU_H
#define DISTQEC_TABLEAU_H

#include <optional>
#include <vector>

#include "distqec/gate.h"
#include "distqec/outcome_source.h"
#include "distqec/pauli_string.h"

namespace distqec {

struct MeasureResult {
    /// +1 or -1.
    int eigenvalue;
    /// True when the state forced the outcome.
    bool deterministic;

    /// Measurement record bit: 1 for the -1 eigenvalue.
    bool bit() const {
        return eigenvalue < 0;
    }
};

/// Stabilizer state of n qubits in destabilizer/stabilizer form.
///
/// Rows 0..n-1 are destabilizers and rows n..2n-1 are stabilizers; row i of
/// the destabilizers anticommutes with stabilizer row i and commutes with all
/// other stabilizers. Row signs are always real.
class Tableau {
   public:
    /// The all-zeros state |0...0>.
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void apply(GateKind gate, uint32_t a, uint32_t b = 0);
    void h(uint32_t q);
    void s(uint32_t q);
    void s_dag(uint32_t q);
    void x(uint32_t q);
    void y(uint32_t q);
    void z(uint32_t q);
    void cnot(uint32_t control, uint32_t target);
    void cz(uint32_t a, uint32_t b);
    void cy(uint32_t control, uint32_t target);
    /// Conjugates the state by a Pauli (only signs change).
    void apply_pauli(const PauliString &p);

    /// Projective measurement of a Hermitian Pauli observable.
    MeasureResult measure(const PauliString &observable, OutcomeSource &outcomes);
    MeasureResult measure_z(uint32_t q, OutcomeSource &outcomes);
    void reset(uint32_t q, OutcomeSource &outcomes);

    /// Expectation sign of `observable` when it is (up to sign) in the
    /// stabilizer group, otherwise nullopt. Leaves the state untouched.
    std::optional<int> peek(const PauliString &observable) const;

    PauliString stabilizer(size_t i) const;
    PauliString destabilizer(size_t i) const;
    std::vector<PauliString> stabilizers() const;

    /// Throws std::logic_error if commutation, pairing or sign invariants fail.
    void check_invariants() const;

   private:
    uint64_t *row_x(size_t r) {
        return xs_.data() + r * w_;
    }
    uint64_t *row_z(size_t r) {
        return zs_.data() + r * w_;
    }
    const uint64_t *row_x(size_t r) const {
        return xs_.data() + r * w_;
    }
    const uint64_t *row_z(size_t r) const {
        return zs_.data() + r * w_;
    }
    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);
    bool row_anticommutes(size_t r, const PauliString &p) const;
    /// row[dst] = row[dst] * row[src].
    void mul_row(size_t dst, size_t src);
    void check_qubit(uint32_t q) const;

    size_t n_;
    size_t w_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    /// log_i of each row; always 0 or 2.
    std::vector<uint8_t> signs_;
};

/// Heisenberg-picture image U P U^dagger of a Pauli under one gate, with the
/// sign tracked exactly.
void conjugate_by_gate(PauliString &p, GateKind gate, uint32_t a, uint32_t b = 0);

/// Row-reduced echelon form of a stabilizer group, unique per group.
///
/// Columns are processed X-part first (qubits 0..n-1) then Z-part. Two
/// states are equal iff their canonical forms are equal.
std::vector<PauliString> canonical_form(std::vector<PauliString> generators);
std::vector<PauliString> canonical_form(const Tableau &tableau);

}  // namespace distqec

#endif
