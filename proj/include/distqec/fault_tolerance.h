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


#ifndef DISTQEC_FAULT_TOLERANCE_H
#define DISTQEC_FAULT_TOLERANCE_H

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "distqec/codes.h"
#include "distqec/processor.h"
#include "distqec/telegates.h"

namespace distqec {

/// An ancilla preparation that kept failing verification.
class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class AncillaKind : uint8_t {
    LocalGhz,
    Interface,
};

struct VerifiedAncillaBlock {
    AncillaKind kind = AncillaKind::LocalGhz;
    std::vector<uint32_t> qubits;
    size_t verification_attempts = 0;
    bool verified = false;
};

/// Source of Bell pairs between two nodes. The default delivers at once;
/// the network model overrides this to advance time and idle waiting qubits.
class LinkProvider {
   public:
    virtual ~LinkProvider() = default;
    virtual BellLink request(Processor &processor, uint32_t a, uint32_t b) {
        return deliver_link(processor, a, b);
    }
    size_t delivered() const {
        return delivered_;
    }

   protected:
    size_t delivered_ = 0;
};

/// Delivers immediately and counts.
class ImmediateLinks : public LinkProvider {
   public:
    BellLink request(Processor &processor, uint32_t a, uint32_t b) override {
        delivered_++;
        return deliver_link(processor, a, b);
    }
};

/// GHZ state (|0..0> + |1..1>)/sqrt(2) on `ghz`, built as a CNOT chain from
/// ghz[0], then checked by copying the parity of the two chain ends onto
/// `verifier`. A 1 on the verifier resets and retries; after `max_attempts`
/// failures VerificationFailure is thrown.
VerifiedAncillaBlock prepare_verified_ghz(Processor &processor, std::span<const uint32_t> ghz, uint32_t verifier,
                                          size_t max_attempts);
/// Four GHZ qubits followed by the verifier.
VerifiedAncillaBlock prepare_verified_ghz4(Processor &processor, std::span<const uint32_t> ancillas,
                                           size_t max_attempts = 10);

/// How repeated syndromes are combined.
enum class MajorityRule : uint8_t {
    /// Majority of each bit across three syndromes.
    PerBit,
    /// The first two if they agree; otherwise the third. With three
    /// repetitions this is the whole-syndrome majority, falling back on the
    /// latest measurement when all three differ.
    WholeSyndrome,
};

/// Resolves two agreeing or three syndromes.
uint32_t resolve_syndromes(const std::vector<uint32_t> &syndromes, MajorityRule rule);

struct MajorityVoteLog {
    std::vector<SyndromeRecord> syndromes;
    uint32_t resolved = 0;
    size_t ghz_attempts = 0;
};

struct FtOptions {
    size_t max_attempts = 10;
    MajorityRule rule = MajorityRule::WholeSyndrome;
};

/// Fault-tolerant syndrome: each generator uses a freshly verified GHZ block
/// whose qubits each control one Pauli factor on one data qubit; the
/// generator bit is the parity of the GHZ qubits read in the X basis. The
/// whole syndrome is measured twice and a third time on disagreement.
/// `ancillas` holds the GHZ qubits followed by the verifier.
MajorityVoteLog extract_syndrome_ft(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                                    std::span<const uint32_t> ancillas, const FtOptions &options = {});

/// Fault-tolerant extraction followed by the lookup correction.
MajorityVoteLog ec_cycle_ft(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                            std::span<const uint32_t> ancillas, const FtOptions &options = {});

/// Interface qubits of one node: a chain whose first qubit receives the
/// first Bell link, and a verification qubit for the second link.
struct InterfaceLayout {
    std::vector<uint32_t> chain;
    uint32_t verifier = 0;
};

struct InterfacePair {
    VerifiedAncillaBlock a;
    VerifiedAncillaBlock b;
    size_t links_consumed = 0;
    /// Parity of the verification qubits on each attempt (true = odd).
    std::vector<bool> verification_parities;
};

/// Spreads Bell link 1 over each node's chain with local CNOTs, giving
/// (|0..0>|0..0> + |1..1>|1..1>)/sqrt(2), then CNOTs the last chain qubit of
/// each node onto the halves of Bell link 2 and measures them. Odd parity
/// resets and retries. `probe`, when set, sees the state just before each
/// pair of verification measurements.
using InterfaceProbe = std::function<void(const Processor &)>;
InterfacePair prepare_interface_ancilla(Processor &processor, const InterfaceLayout &a, const InterfaceLayout &b,
                                        LinkProvider &links, size_t max_attempts = 10,
                                        const InterfaceProbe &probe = {});

/// Each chain qubit controls one factor of `local` (in ascending data-qubit
/// order). Throws when the operator is heavier than the chain.
void couple_interface(Processor &processor, const PauliString &local, std::span<const uint32_t> data,
                      std::span<const uint32_t> chain);

struct JointFtResult {
    int eigenvalue = 1;
    std::vector<int> repetitions;
    size_t links_consumed = 0;
    size_t interface_attempts = 0;
    std::vector<bool> verification_parities;
};

/// Everything a node offers to a fault-tolerant joint measurement.
struct FtNode {
    std::vector<uint32_t> data;
    /// GHZ qubits then verifier, for local syndrome extraction.
    std::vector<uint32_t> local;
    InterfaceLayout interface;
};

/// Measures local_a (x) local_b (code-local operators of weight at most the
/// chain length) with verified interface blocks: each chain qubit controls
/// one factor in ascending qubit order, chain qubits are read in the X
/// basis and the overall parity gives the eigenvalue. Repeated twice, a third
/// time on disagreement, majority decides. A fault-tolerant EC round runs on
/// both blocks between repetitions.
JointFtResult measure_joint_logical_ft(Processor &processor, const StabilizerCode &code, const PauliString &local_a,
                                       const FtNode &a, const PauliString &local_b, const FtNode &b,
                                       LinkProvider &links, const FtOptions &options = {});

/// Encoded Bell pair from two |0>_L blocks using the fault-tolerant joint
/// measurement of the reduced X logicals; Z_L on node B on odd parity.
BellPrepResult prepare_encoded_bell_ft(Processor &processor, const StabilizerCode &code, const FtNode &a,
                                       const FtNode &b, LinkProvider &links, const FtOptions &options = {});

/// Ancillas needed per node for an operator of weight `wt` at concatenation
/// level `m`: wt^m coupling qubits plus one verification qubit.
size_t ancilla_count(size_t wt, size_t m);

}  // namespace distqec

#endif
