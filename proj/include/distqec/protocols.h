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


#ifndef DISTQEC_PROTOCOLS_H
#define DISTQEC_PROTOCOLS_H

#include <string>

#include "distqec/codes.h"
#include "distqec/fault_tolerance.h"
#include "distqec/noise.h"

namespace distqec {

/// Register layout of one node used by the fault campaigns: data block,
/// reference qubit, local ancillas, interface chain and verifier.
struct CampaignNode {
    FtNode node;
    uint32_t reference = 0;
};

/// Allocates a node starting at qubit `first`; returns one past its last qubit.
size_t layout_campaign_node(CampaignNode &out, size_t first, const StabilizerCode &code, size_t local_ancillas,
                            size_t chain_length);

/// Single-X state classes before interface verification, relative to the
/// ideal (|0..0>|0..0> + |1..1>|1..1>)(|00> + |11>) state.
enum class InterfaceFaultClass : uint8_t {
    Clean,
    /// Chains intact, verification pair flipped.
    VerifierFlipped,
    /// One node's whole chain flipped.
    NodeFlipped,
    /// One node uniform, the other shows 011 or 100.
    PairFlipped,
    /// One node uniform, the other shows 001 or 110.
    EndFlipped,
    /// Nonzero X pattern that verification does not see.
    Undetected,
    Other,
};

std::string interface_fault_class_name(InterfaceFaultClass c);

/// Reads the X pattern of both chains and the verification pair.
InterfaceFaultClass classify_interface_state(const Processor &processor, const InterfaceLayout &a,
                                             const InterfaceLayout &b);

/// Ideal encoding with a reference qubit, then one fault-tolerant EC cycle,
/// then residual readback.
Protocol ft_syndrome_protocol(const StabilizerCode &code, const FtOptions &options = {});

/// Two referenced blocks; interface preparation, coupling of the reduced
/// logical Z on both blocks and chain readout. The label is the class of the
/// state seen by the first verification.
Protocol interface_protocol(const StabilizerCode &code);

/// Two referenced blocks and a full fault-tolerant joint Z_L Z_L measurement.
Protocol ft_joint_protocol(const StabilizerCode &code, const FtOptions &options = {});

/// Ideal encoding with a reference qubit, then one basic EC cycle.
Protocol basic_syndrome_protocol(const StabilizerCode &code);

}  // namespace distqec

#endif
