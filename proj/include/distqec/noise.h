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


#ifndef DISTQEC_NOISE_H
#define DISTQEC_NOISE_H

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "distqec/circuit.h"
#include "distqec/error_model.h"
#include "distqec/processor.h"
#include "distqec/rng.h"

namespace distqec {

/// Samples one noisy instance of `circuit`: noise Paulis are interleaved with
/// the original steps, which are kept in order. A flipped measurement record
/// is written as an X before and after the measurement.
Circuit apply_stochastic_noise(const Circuit &circuit, const ErrorModel &model, Rng &rng);

/// Paulis injected per fault location.
enum class PauliClass : uint8_t {
    /// X on one-qubit sites; XI, IX, XX on two-qubit sites.
    X,
    /// Z on one-qubit sites; ZI, IZ, ZZ on two-qubit sites.
    Z,
    /// Every nonidentity Pauli: 3 on one-qubit sites, 15 on two-qubit sites.
    XYZ,
};

std::string pauli_class_name(PauliClass c);
PauliClass pauli_class_by_name(const std::string &name);

/// Local Paulis of `cls` for a site on `width` qubits, in a fixed order.
std::vector<PauliString> fault_paulis(PauliClass cls, size_t width);

struct ProtocolOutcome {
    /// Verification measurements seen by the protocol, e.g. "odd,even".
    std::string verification;
    size_t residual_weight = 0;
    bool logical_error = false;
    /// Free-form classification of the faulty state.
    std::string label;
    /// The protocol gave up (retry budget exhausted).
    bool aborted = false;
};

/// A protocol runs on a fresh processor whose random stream is fixed, so a
/// run is reproducible and the fault sites before an injection are the same
/// as in a fault-free run.
struct Protocol {
    std::string name;
    size_t num_qubits = 0;
    std::function<ProtocolOutcome(Processor &)> run;
};

struct FaultRecord {
    FaultSite site;
    PauliString pauli;
    ProtocolOutcome outcome;
};

struct FaultCampaign {
    std::string protocol;
    /// Fault locations of the fault-free run.
    std::vector<FaultSite> locations;
    PauliClass paulis = PauliClass::XYZ;
    /// One entry per (location, Pauli) in location order.
    std::vector<FaultRecord> results;
};

/// Runs `protocol` once per (location, Pauli) with that single fault injected
/// and everything else noiseless.
FaultCampaign run_campaign(const Protocol &protocol, PauliClass paulis, uint64_t seed = 0);

/// Campaign over a circuit. The outcome records only the measurement records;
/// residual analysis is left to callers with a protocol.
FaultCampaign enumerate_single_faults(const Circuit &circuit, PauliClass paulis, uint64_t seed = 0);

/// Columns: fault_location, fault_pauli, verification_outcome, residual_weight,
/// logical_error.
void write_campaign_csv(std::ostream &out, const FaultCampaign &campaign);

}  // namespace distqec

#endif
