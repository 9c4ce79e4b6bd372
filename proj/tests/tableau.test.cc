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


#include "distqec/tableau.h"

#include "distqec/rng.h"
#include "distqec/state_vector.h"
#include "gtest/gtest.h"

using namespace distqec;

namespace {

std::vector<PauliString> strs(std::initializer_list<const char *> texts) {
    std::vector<PauliString> out;
    for (auto t : texts) {
        out.push_back(PauliString::from_str(t));
    }
    return out;
}

const GateKind kAllGates[] = {GateKind::H, GateKind::S,    GateKind::S_DAG, GateKind::X, GateKind::Y,
                              GateKind::Z, GateKind::CNOT, GateKind::CY,    GateKind::CZ};

}  // namespace

TEST(tableau, hadamard_makes_plus_state) {
    Tableau t(1);
    t.h(0);
    EXPECT_EQ(canonical_form(t), strs({"+X"}));
}

TEST(tableau, cnot_on_zeros_is_identity) {
    Tableau t(2);
    t.cnot(0, 1);
    EXPECT_EQ(canonical_form(t), canonical_form(strs({"+ZI", "+IZ"})));
    EXPECT_EQ(canonical_form(t), canonical_form(strs({"+ZI", "+ZZ"})));
}

TEST(tableau, bell_pair) {
    Tableau t(2);
    t.h(0);
    t.cnot(0, 1);
    EXPECT_EQ(canonical_form(t), canonical_form(strs({"+XX", "+ZZ"})));
    EXPECT_EQ(t.peek(PauliString::from_str("YY")), -1);
    EXPECT_EQ(t.peek(PauliString::from_str("ZI")), std::nullopt);
}

TEST(tableau, bell_pair_by_two_routes) {
    Tableau a(2);
    a.h(0);
    a.cnot(0, 1);
    // Prepare |+>|+>, then CZ, then H on the second qubit.
    Tableau b(2);
    b.h(0);
    b.h(1);
    b.cz(0, 1);
    b.h(1);
    EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(tableau, basis_states_differ_by_sign) {
    Tableau a(2), b(2);
    a.x(1);
    b.x(0);
    EXPECT_NE(canonical_form(a), canonical_form(b));
}

TEST(tableau, out_of_range_qubit_throws) {
    Tableau t(3);
    EXPECT_THROW(t.h(3), std::out_of_range);
    EXPECT_THROW(t.cnot(0, 5), std::out_of_range);
}

TEST(tableau, measure_z_on_zero_is_deterministic) {
    Tableau t(1);
    Rng rng(1);
    RngOutcomes src(rng);
    auto r = t.measure(PauliString::from_str("Z"), src);
    EXPECT_EQ(r.eigenvalue, 1);
    EXPECT_TRUE(r.deterministic);
}

TEST(tableau, measure_rejects_imaginary_observable) {
    Tableau t(1);
    Rng rng(1);
    RngOutcomes src(rng);
    EXPECT_THROW(t.measure(PauliString::from_str("iZ"), src), std::invalid_argument);
}

TEST(tableau, measure_x_on_zero_is_fair) {
    size_t minus = 0;
    const size_t shots = 10000;
    for (size_t s = 0; s < shots; s++) {
        Tableau t(1);
        Rng rng(s);
        RngOutcomes src(rng);
        auto r = t.measure(PauliString::from_str("X"), src);
        EXPECT_FALSE(r.deterministic);
        minus += r.eigenvalue < 0;
    }
    EXPECT_NEAR(minus / double(shots), 0.5, 0.02);
}

TEST(tableau, repeated_measurement_is_stable) {
    Rng rng(7);
    RngOutcomes src(rng);
    for (int trial = 0; trial < 50; trial++) {
        Tableau t(4);
        t.h(0);
        t.cnot(0, 1);
        t.h(2);
        t.cz(2, 3);
        auto obs = PauliString::from_str("XZYI");
        auto first = t.measure(obs, src);
        auto second = t.measure(obs, src);
        EXPECT_EQ(first.eigenvalue, second.eigenvalue);
        EXPECT_TRUE(second.deterministic);
    }
}

TEST(tableau, reset_returns_to_zero) {
    Rng rng(3);
    RngOutcomes src(rng);
    Tableau t(2);
    t.h(0);
    t.cnot(0, 1);
    t.reset(0, src);
    EXPECT_EQ(t.peek(PauliString::from_str("ZI")), 1);
    t.check_invariants();
}

TEST(tableau, canonical_form_idempotent_and_row_invariant) {
    auto gens = strs({"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ", "+ZZZZZ"});
    auto c1 = canonical_form(gens);
    EXPECT_EQ(canonical_form(c1), c1);
    auto mixed = gens;
    mixed[0] *= gens[2];
    mixed[3] *= gens[4];
    EXPECT_EQ(canonical_form(mixed), c1);
}

TEST(tableau, single_gate_conjugation_matches_state_vector) {
    // Every gate applied to every two-qubit stabilizer product state.
    const char *preps[] = {"", "X", "H", "HS", "HZ", "HSZ"};
    for (GateKind g : kAllGates) {
        for (auto pa : preps) {
            for (auto pb : preps) {
                Tableau t(2);
                StateVector sv(2);
                auto prep = [&](const char *ops, uint32_t q) {
                    for (const char *c = ops; *c; c++) {
                        GateKind k = *c == 'H' ? GateKind::H : *c == 'S' ? GateKind::S : *c == 'X' ? GateKind::X : GateKind::Z;
                        t.apply(k, q);
                        sv.apply(k, q);
                    }
                };
                prep(pa, 0);
                prep(pb, 1);
                t.apply(g, 0, 1);
                sv.apply(g, 0, 1);
                EXPECT_TRUE(tableau_matches_state(t, sv)) << gate_name(g) << " " << pa << " " << pb;
            }
        }
    }
}

TEST(tableau, random_circuits_match_state_vector) {
    // Same seed discipline on both simulators: random outcomes come from the
    // same uniform draws, so records must agree exactly.
    for (uint64_t seed = 0; seed < 60; seed++) {
        Rng gen(seed);
        size_t n = 1 + gen.below(8);
        Rng rt(seed + 1000), rs(seed + 1000);
        RngOutcomes ot(rt), os(rs);
        Tableau t(n);
        StateVector sv(n);
        for (int step = 0; step < 60; step++) {
            uint64_t kind = gen.below(10);
            if (kind < 7 || n == 1) {
                GateKind g = kAllGates[gen.below(n == 1 ? 6 : 9)];
                uint32_t a = gen.below(n), b = gen.below(n);
                if (is_two_qubit(g)) {
                    while (b == a) {
                        b = gen.below(n);
                    }
                }
                t.apply(g, a, b);
                sv.apply(g, a, b);
            } else {
                PauliString obs(n);
                for (size_t q = 0; q < n; q++) {
                    obs.set(q, "IXYZ"[gen.below(4)]);
                }
                if (gen.below(2)) {
                    obs.set_log_i(2);
                }
                auto r1 = t.measure(obs, ot);
                auto r2 = sv.measure(obs, os);
                ASSERT_EQ(r1.deterministic, r2.deterministic) << "seed " << seed << " step " << step;
                ASSERT_EQ(r1.eigenvalue, r2.eigenvalue) << "seed " << seed << " step " << step;
            }
            t.check_invariants();
            ASSERT_TRUE(tableau_matches_state(t, sv)) << "seed " << seed << " step " << step;
            ASSERT_NEAR(sv.norm(), 1, 1e-12);
        }
    }
}

TEST(tableau, wide_register_spans_words) {
    Rng rng(11);
    RngOutcomes src(rng);
    Tableau t(100);
    t.h(0);
    for (uint32_t q = 1; q < 100; q++) {
        t.cnot(q - 1, q);
    }
    PauliString zz(100);
    zz.set(3, 'Z');
    zz.set(97, 'Z');
    EXPECT_EQ(t.peek(zz), 1);
    auto r = t.measure_z(64, src);
    EXPECT_FALSE(r.deterministic);
    for (uint32_t q = 0; q < 100; q++) {
        auto again = t.measure_z(q, src);
        EXPECT_TRUE(again.deterministic);
        EXPECT_EQ(again.eigenvalue, r.eigenvalue);
    }
    t.check_invariants();
}

TEST(tableau, heisenberg_conjugation_matches_simulation) {
    // Stabilizers of a random state, pushed through a gate, must stabilize the
    // simulated post-gate state.
    Rng gen(21);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 3;
        Tableau t(n);
        for (int k = 0; k < 8; k++) {
            GateKind g = kAllGates[gen.below(9)];
            uint32_t a = gen.below(n), b = (a + 1 + gen.below(n - 1)) % n;
            t.apply(g, a, b);
        }
        GateKind g = kAllGates[gen.below(9)];
        uint32_t a = gen.below(n), b = (a + 1 + gen.below(n - 1)) % n;
        auto stabs = t.stabilizers();
        t.apply(g, a, b);
        for (auto s : stabs) {
            conjugate_by_gate(s, g, a, b);
            EXPECT_EQ(t.peek(s), 1) << gate_name(g) << " " << s;
        }
    }
}
