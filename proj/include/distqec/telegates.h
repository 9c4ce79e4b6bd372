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


#ifndef DISTQEC_TELEGATES_H
#define DISTQEC_TELEGATES_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distqec/codes.h"
#include "distqec/processor.h"

namespace distqec {

/// A Bell pair shared between two nodes. Joint measurements consume it.
struct BellLink {
    uint32_t a = 0;
    uint32_t b = 0;
    bool delivered = false;
    bool consumed = false;
};

/// Delivers a fresh Bell pair on the two qubits.
BellLink deliver_link(Processor &processor, uint32_t a, uint32_t b);

/// Result of an operator measurement together with any Pauli applied because
/// of it.
struct MeasurementOutcomeFrame {
    int eigenvalue = 1;
    std::optional<PauliString> applied_correction;
};

/// The operators a CZ-by-measurement acts through: Z-type operators on the
/// two targets and Z and X on the ancilla. For physical qubits these are
/// single-qubit Paulis; for encoded blocks they are logical operators.
struct CzOperands {
    PauliString z_a;
    PauliString z_b;
    PauliString z_anc;
    PauliString x_anc;
};

/// Measures a Hermitian Pauli observable and returns its eigenvalue.
using OperatorMeasurement = std::function<int(const PauliString &)>;

struct CzResult {
    MeasurementOutcomeFrame zz;
    MeasurementOutcomeFrame zx;
    MeasurementOutcomeFrame anc;
};

/// CZ between targets a and b through an ancilla prepared in |+>:
///   measure z_a z_anc; on -1 apply x_anc
///   measure z_b x_anc; on -1 apply z_a
///   measure z_anc;     on -1 apply z_b
/// Leaves the ancilla in a z_anc eigenstate and the targets acted on by CZ.
CzResult cz_by_measurement(Processor &processor, const CzOperands &ops, const OperatorMeasurement &measure);

/// Physical-qubit version with direct Pauli measurements. The ancilla is
/// prepared in |+> here.
CzResult cz_by_measurement(Processor &processor, uint32_t a, uint32_t b, uint32_t anc);

/// Encoded version: a, b and the ancilla are blocks of `code`; the logical
/// operators are measured directly. The ancilla block must hold |+>_L.
CzResult cz_by_measurement(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> a,
                           std::span<const uint32_t> b, std::span<const uint32_t> anc);

/// One controlled-Pauli from a Bell half onto a data qubit.
struct Coupling {
    uint32_t control = 0;
    uint32_t target = 0;
    GateKind gate = GateKind::CNOT;
};

/// Measurement of operator_a (x) operator_b, where each operator acts inside
/// its own block, through one Bell pair.
struct JointMeasurementPlan {
    PauliString operator_a;
    PauliString operator_b;
    std::vector<uint32_t> block_a;
    std::vector<uint32_t> block_b;
    uint32_t bell_a = 0;
    uint32_t bell_b = 0;
    std::vector<Coupling> coupling;

    /// The plan as circuit text (records r0, r1 are the two Bell halves).
    std::string str(size_t num_qubits) const;
};

/// Builds the plan for `local_a` on `block_a` and `local_b` on `block_b`
/// (code-local Paulis, e.g. logical representatives). Couplings run in
/// ascending qubit order, each Bell half controlling the Pauli factor of its
/// own block: CNOT for X, CY for Y, CZ for Z.
JointMeasurementPlan make_joint_plan(size_t num_qubits, const PauliString &local_a, std::span<const uint32_t> block_a,
                                     const PauliString &local_b, std::span<const uint32_t> block_b,
                                     const BellLink &link);

/// Executes a plan on a delivered, unconsumed link and returns the eigenvalue
/// of operator_a (x) operator_b: sign_a * sign_b * (-1)^(j+k) for Bell-half
/// records j, k.
int measure_joint_logical(Processor &processor, const JointMeasurementPlan &plan, BellLink &link);

/// Qubits of one node.
struct NodeLayout {
    std::vector<uint32_t> data;
    /// Local syndrome ancillas (one for basic extraction, five for verified GHZ).
    std::vector<uint32_t> local;
    /// Interface qubits: [0] is the Bell-link half; fault-tolerant nodes add
    /// more for the verified interface block.
    std::vector<uint32_t> interface;
};

struct BellPrepResult {
    int parity = 1;
    bool corrected = false;
    /// Bell pairs used by the joint measurement, including failed verifications.
    size_t links_consumed = 1;
    /// Failed interface verifications before success, summed over repetitions.
    size_t verification_retries = 0;
    /// Eigenvalue reported by each repetition of the joint measurement.
    std::vector<int> repetitions;
    std::vector<SyndromeRecord> syndromes_a;
    std::vector<SyndromeRecord> syndromes_b;
};

/// Encoded Bell pair from two |0>_L blocks: `ec_cycles` basic EC rounds on
/// each node, then a full-weight X_L X_L joint measurement over `link`, then
/// Z_L on node B when the parity is odd.
BellPrepResult prepare_encoded_bell_nonft(Processor &processor, const StabilizerCode &code, const NodeLayout &a,
                                          const NodeLayout &b, BellLink &link, size_t ec_cycles);

/// The stabilizers of the ideal encoded Bell state on two blocks.
std::vector<PauliString> encoded_bell_stabilizers(size_t num_qubits, const StabilizerCode &code,
                                                  std::span<const uint32_t> a, std::span<const uint32_t> b);

}  // namespace distqec

#endif
