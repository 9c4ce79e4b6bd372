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

#ifndef DISTQEC_ERROR_MODEL_H
#define DISTQEC_ERROR_MODEL_H

#include <stdexcept>
#include <string>

namespace distqec {

/// Stochastic Pauli noise parameters.
///
///  p1         - after each single-qubit gate, a uniformly random X, Y or Z.
///  p2         - after each two-qubit gate, one of the 15 nonidentity Pauli pairs.
///  p_meas     - flips the reported measurement bit.
///  p_mem      - per idle tick, independent X and Z flips, each with this probability.
///  bell_error - a delivered Bell pair carries a random nonidentity two-qubit Pauli.
///
/// Resets and classically applied Pauli corrections are noiseless.
struct ErrorModel {
    double p1 = 0;
    double p2 = 0;
    double p_meas = 0;
    double p_mem = 0;
    double bell_error = 0;

    /// Every rate set to `p`.
    static ErrorModel uniform(double p) {
        return {p, p, p, p, p};
    }

    bool is_noiseless() const {
        return p1 == 0 && p2 == 0 && p_meas == 0 && p_mem == 0 && bell_error == 0;
    }

    void validate() const {
        auto check = [](double v, const char *name) {
            if (!(v >= 0 && v <= 1)) {
                throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
            }
        };
        check(p1, "p1");
        check(p2, "p2");
        check(p_meas, "p_meas");
        check(p_mem, "p_mem");
        check(bell_error, "bell_error");
    }
};

}  // namespace distqec

#endif
