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

#ifndef DISTQEC_CIRCUIT_H
#define DISTQEC_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

#include "distqec/gate.h"

namespace distqec {

enum class StepKind : uint8_t {
    Gate,
    Measure,
    Reset,
    Idle,
    Bell,
    Conditional,
};

/// Where a single fault may strike.
enum class SiteKind : uint8_t {
    Gate,
    Measure,
    Reset,
    Idle,
    Bell,
};

std::string_view site_kind_name(SiteKind kind);

/// A fault location: faults act after gates, resets, idles and Bell-pair
/// deliveries, and before measurements.
struct FaultSite {
    size_t index = 0;
    SiteKind kind = SiteKind::Gate;
    GateKind gate = GateKind::H;
    std::vector<uint32_t> qubits;

    /// Short human readable description such as "17:CNOT 2 3".
    std::string label() const;
};

struct Step {
    StepKind kind = StepKind::Gate;
    /// Gate for Gate steps; the Pauli applied by Conditional steps.
    GateKind gate = GateKind::H;
    uint32_t q0 = 0;
    uint32_t q1 = 0;
    /// Record written by a Measure step.
    uint32_t record = 0;
    /// Conditional steps fire when the parity of these records is odd.
    std::vector<uint32_t> condition;
    /// Pauli inserted by a noise model rather than part of the protocol.
    bool noise = false;

    bool operator==(const Step &other) const = default;
};

/// Ordered list of steps over a fixed register.
///
/// Text form, one step per line ('#' starts a comment):
///
///     QUBITS 5
///     H 0
///     CNOT 0 1
///     MZ 3 -> r1
///     R 3
///     IDLE 2
///     BELL 4 5
///     COND r1 X 4
///     COND parity(r1,r2) Z 4
///     !Y 2
///
/// Gate names are H S S_DAG X Y Z CNOT CY CZ. `BELL a b` delivers the pair
/// (|00>+|11>)/sqrt(2) on qubits a and b. A leading '!' marks a noise Pauli.
/// Conditional steps apply a single-qubit Pauli as a classical frame update:
/// they are never fault locations.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t num_qubits) : num_qubits_(num_qubits) {
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Step> &steps() const {
        return steps_;
    }
    size_t num_records() const {
        return num_records_;
    }

    void gate(GateKind g, uint32_t a, uint32_t b = 0);
    /// Appends a Z-basis measurement and returns its record id.
    uint32_t measure(uint32_t q);
    void reset(uint32_t q);
    void idle(uint32_t q);
    void bell(uint32_t a, uint32_t b);
    void conditional(std::vector<uint32_t> records, GateKind pauli, uint32_t q);
    /// Appends an already-built step (validated).
    void push(Step step);
    void append(const Circuit &other);

    /// Fault locations in execution order, matching the order in which the
    /// Processor numbers them when running this circuit.
    std::vector<FaultSite> fault_locations() const;

    /// Copy with noise steps removed.
    Circuit without_noise() const;

    std::string str() const;
    static Circuit parse(std::string_view text);

    bool operator==(const Circuit &other) const = default;

   private:
    void check_qubit(uint32_t q) const;

    size_t num_qubits_ = 0;
    size_t num_records_ = 0;
    std::vector<Step> steps_;
};

}  // namespace distqec

#endif
