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

#ifndef DISTQEC_GATE_H
#define DISTQEC_GATE_H

#include <cstdint>
#include <optional>
#include <string_view>

namespace distqec {

/// Clifford gates understood by every simulator.
enum class GateKind : uint8_t {
    H,
    S,
    S_DAG,
    X,
    Y,
    Z,
    CNOT,
    CY,
    CZ,
};

inline bool is_two_qubit(GateKind g) {
    return g == GateKind::CNOT || g == GateKind::CY || g == GateKind::CZ;
}

inline bool is_pauli_gate(GateKind g) {
    return g == GateKind::X || g == GateKind::Y || g == GateKind::Z;
}

inline std::string_view gate_name(GateKind g) {
    switch (g) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::S_DAG:
            return "S_DAG";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CY:
            return "CY";
        case GateKind::CZ:
            return "CZ";
    }
    return "?";
}

inline std::optional<GateKind> gate_from_name(std::string_view name) {
    for (GateKind g : {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z, GateKind::CNOT,
                       GateKind::CY, GateKind::CZ}) {
        if (gate_name(g) == name) {
            return g;
        }
    }
    return std::nullopt;
}

/// Controlled version of a single-qubit Pauli ('X', 'Y' or 'Z').
inline GateKind controlled_pauli_gate(char p) {
    return p == 'X' ? GateKind::CNOT : p == 'Y' ? GateKind::CY : GateKind::CZ;
}

inline GateKind pauli_gate(char p) {
    return p == 'X' ? GateKind::X : p == 'Y' ? GateKind::Y : GateKind::Z;
}

}  // namespace distqec

#endif
