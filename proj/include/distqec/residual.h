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


#ifndef DISTQEC_RESIDUAL_H
#define DISTQEC_RESIDUAL_H

#include <span>
#include <vector>

#include "distqec/codes.h"
#include "distqec/processor.h"

namespace distqec {

/// A code block inside a larger register.
struct BlockRef {
    const StabilizerCode *code = nullptr;
    std::vector<uint32_t> data;
};

struct ResidualReport {
    /// Weight of the data error left on the worst block, reduced modulo the
    /// stabilizer group. Blocks whose syndrome cannot be read count as n + 1.
    size_t weight = 0;
    /// True when ideal decoding of every block would leave a logical error.
    bool logical_error = false;
    /// Syndrome read from each block.
    std::vector<uint32_t> syndromes;
};

/// Noiseless readback of the error left on `blocks`.
///
/// Each block's syndrome is read from the stabilizer state and decoded. The
/// remaining logical Pauli is fixed by `targets`, signed operators that hold
/// the value +1 in the error-free state (for example X_r X_L and Z_r Z_L for a
/// block entangled with a reference qubit r). Every other qubit must already be
/// disentangled from the blocks, e.g. by resetting ancillas inside an Ideal
/// scope.
ResidualReport analyze_residual(const Processor &processor, std::span<const BlockRef> blocks,
                                std::span<const PauliString> targets);

/// Minimum weight over the coset {E S : S in the stabilizer group}.
size_t coset_weight(const StabilizerCode &code, const PauliString &error);

/// Entangles `reference` with a block holding |0>_L, giving
/// (|0>|0>_L + |1>|1>_L)/sqrt(2). Runs ideally.
void attach_reference(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                      uint32_t reference);

/// X_r X_L and Z_r Z_L for a block prepared by attach_reference.
std::vector<PauliString> reference_targets(size_t num_qubits, const StabilizerCode &code,
                                           std::span<const uint32_t> data, uint32_t reference);

}  // namespace distqec

#endif
