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


#ifndef DISTQEC_VERIFY_H
#define DISTQEC_VERIFY_H

#include <string>
#include <vector>

#include "distqec/circuit.h"

namespace distqec {

struct VerifyReport {
    std::string protocol;
    size_t checks = 0;
    std::vector<std::string> violations;
    /// Extra facts worth printing, e.g. which fault classes were observed.
    std::vector<std::string> notes;

    bool passed() const {
        return checks > 0 && violations.empty();
    }
};

/// Circuits preparing each of the 60 two-qubit stabilizer states from |00>.
std::vector<Circuit> two_qubit_stabilizer_preparations();

/// CZ by measurement against the dense oracle on every stabilizer input and
/// every measurement branch.
VerifyReport verify_cz();
/// Noiseless encoded Bell preparation (basic and fault-tolerant) for the
/// five-qubit code, and the three-qubit bit-flip instance against the oracle.
VerifyReport verify_bellprep();
/// Exhaustive single-fault campaigns over fault-tolerant syndrome extraction.
VerifyReport verify_ft_syndrome();
/// Exhaustive single-X campaign over interface preparation, with the observed
/// state classes.
VerifyReport verify_interface();

/// Names accepted by run_verify: cz, bellprep, ft-syndrome, interface.
std::vector<std::string> verify_protocols();
/// Throws std::invalid_argument for an unknown name.
VerifyReport run_verify(const std::string &protocol);

}  // namespace distqec

#endif
