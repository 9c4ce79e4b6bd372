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


#include "distqec/state_vector.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace distqec;

TEST(state_vector, bell_amplitudes) {
    StateVector sv(2);
    sv.apply(GateKind::H, 0);
    sv.apply(GateKind::CNOT, 0, 1);
    double r = 1 / std::sqrt(2.0);
    EXPECT_TRUE(sv.equal_up_to_phase({r, 0, 0, r}));
    EXPECT_NEAR(sv.norm(), 1, 1e-12);
}

TEST(state_vector, refuses_oversize_registers) {
    EXPECT_THROW(StateVector(17), ResourceError);
    EXPECT_NO_THROW(StateVector(16));
}

TEST(state_vector, global_phase_is_ignored) {
    StateVector a(1), b(1);
    a.apply(GateKind::H, 0);
    b.apply(GateKind::H, 0);
    b.apply(GateKind::Y, 0);
    b.apply(GateKind::Z, 0);  // ZY = -iX; X|+> = |+>
    EXPECT_TRUE(a.equal_up_to_phase(b));
    b.apply(GateKind::Z, 0);
    EXPECT_FALSE(a.equal_up_to_phase(b));
}

TEST(state_vector, cy_matches_definition) {
    // CY|1>|0> = |1> (i|1>).
    StateVector sv(2);
    sv.apply(GateKind::X, 0);
    sv.apply(GateKind::CY, 0, 1);
    EXPECT_NEAR(std::abs(sv.amplitudes()[3] - std::complex<double>(0, 1)), 0, 1e-12);
}

TEST(state_vector, measurement_probabilities_are_exact) {
    StateVector sv(1);
    sv.apply(GateKind::H, 0);
    EXPECT_NEAR(sv.expectation(PauliString::from_str("Z")), 0, 1e-12);
    EXPECT_NEAR(sv.expectation(PauliString::from_str("X")), 1, 1e-12);
    EXPECT_NEAR(sv.expectation(PauliString::from_str("-X")), -1, 1e-12);
}

TEST(state_vector, marginals_match_tableau_within_three_sigma) {
    // Fixed 6-qubit Clifford circuit; compare measured frequencies of several
    // observables between the two simulators.
    auto build = [](auto &sim) {
        sim.apply(GateKind::H, 0);
        sim.apply(GateKind::CNOT, 0, 1);
        sim.apply(GateKind::H, 2);
        sim.apply(GateKind::S, 2);
        sim.apply(GateKind::CZ, 1, 2);
        sim.apply(GateKind::H, 3);
        sim.apply(GateKind::CY, 3, 4);
        sim.apply(GateKind::CNOT, 4, 5);
        sim.apply(GateKind::H, 5);
    };
    const char *observables[] = {"ZIIIII", "IZZIII", "IIXIII", "IIIYYI", "IIIIIZ", "XXZIII"};
    const int shots = 10000;
    for (auto text : observables) {
        auto obs = PauliString::from_str(text);
        int tab_minus = 0, sv_minus = 0;
        Rng rng(99);
        RngOutcomes src(rng);
        for (int s = 0; s < shots; s++) {
            Tableau t(6);
            build(t);
            tab_minus += t.measure(obs, src).eigenvalue < 0;
            StateVector sv(6);
            build(sv);
            sv_minus += sv.measure(obs, src).eigenvalue < 0;
        }
        StateVector exact(6);
        build(exact);
        double p = (1 - exact.expectation(obs)) / 2;
        double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / shots);
        EXPECT_NEAR(tab_minus / double(shots), p, 3 * sigma + 1e-12) << text;
        EXPECT_NEAR(sv_minus / double(shots), p, 3 * sigma + 1e-12) << text;
    }
}
