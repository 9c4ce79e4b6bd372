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


#ifndef DISTQEC_CODES_H
#define DISTQEC_CODES_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distqec/circuit.h"
#include "distqec/pauli_string.h"
#include "distqec/processor.h"

namespace distqec {

/// Stabilizer code with k = 1.
///
/// Qubits are numbered 0..n-1 from the left of each generator string.
/// Syndrome bit i is the outcome of generators[i] (1 for the -1 eigenvalue);
/// syndromes are packed into an integer with bit i holding generator i.
struct StabilizerCode {
    std::string name;
    size_t n = 0;
    size_t k = 1;
    size_t d = 1;
    /// Distance as displayed: a number, or "X-only"/"Z-only" for repetition codes.
    std::string distance_label;
    /// Error types the decoder is meant to correct: some of 'X', 'Y', 'Z'.
    std::string correctable;
    std::vector<PauliString> generators;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    /// decode_table[s] is the correction for syndrome s.
    std::vector<PauliString> decode_table;

    size_t num_generators() const {
        return generators.size();
    }
    uint32_t syndrome_of(const PauliString &error) const;
    const PauliString &decode(uint32_t syndrome) const;
    /// True when `p` is (up to sign) a product of generators.
    bool in_group_up_to_sign(const PauliString &p) const;
    /// True when `p`, including its sign, is a product of generators.
    bool in_group(const PauliString &p) const;
    /// Group element for generator subset `mask` (bit i selects generator i).
    PauliString group_element(uint32_t mask) const;
    /// Checks commutation, anticommutation of the logicals and table size.
    void validate() const;
};

/// The five-qubit code with generators XZZXI, IXZZX, XIXZZ, ZXIXZ.
const StabilizerCode &code_513();
/// Seven-qubit CSS code built from the Hamming [7,4] checks.
const StabilizerCode &code_steane713();
/// Three-qubit repetition code against bit flips (generators ZZI, IZZ).
const StabilizerCode &code_bitflip3();
/// Three-qubit repetition code against phase flips (generators XXI, IXX).
const StabilizerCode &code_phaseflip3();
/// One unencoded qubit; X and Z are the logicals.
const StabilizerCode &code_trivial();

/// Registered names: "513", "steane713", "bitflip3", "phaseflip3".
std::vector<std::string> code_names();
/// Looks up a registered code; throws std::invalid_argument for unknown names.
const StabilizerCode &code_by_name(std::string_view name);

/// Builds a code from its generators and logicals, deriving the decode table.
StabilizerCode make_code(std::string name, size_t d, std::string distance_label, std::string correctable,
                         const std::vector<std::string> &generators, const std::string &logical_x,
                         const std::string &logical_z);

/// Minimum-weight element of the coset {L S : S in the stabilizer group} for
/// L = logical X ('X') or Z ('Z'). Group elements are visited in generator-mask
/// order and the first minimum wins; the sign is the true product sign.
PauliString reduce_logical(const StabilizerCode &code, char which);

/// Circuit taking |0...0> to the +1 eigenstate of every generator and of the
/// logical Z. Derived by reducing the stabilizers to single-qubit Z's with
/// Clifford gates and inverting that sequence.
Circuit encode_zero(const StabilizerCode &code);
/// Runs encode_zero on the given data qubits, which must start in |0>.
void encode_zero(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data);

enum class SyndromeSource : uint8_t {
    Basic,
    FaultTolerant,
};

struct SyndromeRecord {
    uint32_t bits = 0;
    size_t num_bits = 0;
    size_t repetition_index = 0;
    SyndromeSource source = SyndromeSource::Basic;

    bool bit(size_t i) const {
        return (bits >> i) & 1;
    }
    /// Bits in generator order, e.g. "1100".
    std::string str() const;
};

/// One-ancilla syndrome measurement: for each generator the ancilla is reset,
/// put in |+>, controls the generator's Pauli on each data qubit in ascending
/// order, and is read out in the X basis.
SyndromeRecord extract_syndrome_basic(Processor &processor, const StabilizerCode &code,
                                      std::span<const uint32_t> data, uint32_t ancilla);

/// Basic extraction followed by the lookup correction.
SyndromeRecord ec_cycle_basic(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                              uint32_t ancilla);

/// Applies the lookup correction for `syndrome` to the data qubits.
void apply_correction(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                      uint32_t syndrome);

/// Embeds a code-local Pauli into an `num_qubits`-qubit register.
PauliString on_block(size_t num_qubits, const PauliString &local, std::span<const uint32_t> data);

}  // namespace distqec

#endif
