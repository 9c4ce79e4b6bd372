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


#include "distqec/codes.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

using namespace distqec;

namespace {

std::vector<uint32_t> range(uint32_t start, uint32_t count) {
    std::vector<uint32_t> out;
    for (uint32_t k = 0; k < count; k++) {
        out.push_back(start + k);
    }
    return out;
}

std::vector<PauliString> weight_one_errors(size_t n, const std::string &types) {
    std::vector<PauliString> out;
    for (size_t q = 0; q < n; q++) {
        for (char c : types) {
            out.push_back(PauliString::single(n, q, c));
        }
    }
    return out;
}

// Smallest weight of a logical operator, by enumeration over all Paulis.
size_t brute_force_distance(const StabilizerCode &code) {
    size_t n = code.n;
    size_t best = n + 1;
    for (uint64_t v = 1; v < (uint64_t{1} << (2 * n)); v++) {
        PauliString p(n);
        for (size_t q = 0; q < n; q++) {
            p.set_x(q, (v >> q) & 1);
            p.set_z(q, (v >> (q + n)) & 1);
        }
        if (code.syndrome_of(p) == 0 && !code.in_group_up_to_sign(p)) {
            best = std::min(best, p.weight());
        }
    }
    return best;
}

}  // namespace

TEST(codes, five_qubit_code_definition) {
    const auto &c = code_513();
    ASSERT_EQ(c.generators.size(), 4u);
    EXPECT_EQ(c.generators[0].str(), "+XZZXI");
    EXPECT_EQ(c.generators[1].str(), "+IXZZX");
    EXPECT_EQ(c.generators[2].str(), "+XIXZZ");
    EXPECT_EQ(c.generators[3].str(), "+ZXIXZ");
    EXPECT_EQ(c.logical_x[0].str(), "+XXXXX");
    EXPECT_EQ(c.logical_z[0].str(), "+ZZZZZ");
    EXPECT_EQ(c.n, 5u);
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.d, 3u);
    for (const auto &a : c.generators) {
        for (const auto &b : c.generators) {
            EXPECT_TRUE(a.commutes(b));
        }
    }
}

TEST(codes, distances_by_enumeration) {
    EXPECT_EQ(brute_force_distance(code_513()), 3u);
    EXPECT_EQ(brute_force_distance(code_steane713()), 3u);
    EXPECT_EQ(brute_force_distance(code_bitflip3()), 1u);
    EXPECT_EQ(brute_force_distance(code_phaseflip3()), 1u);
}

TEST(codes, steane_generators_have_weight_four) {
    for (const auto &g : code_steane713().generators) {
        EXPECT_EQ(g.weight(), 4u) << g;
    }
}

TEST(codes, registry_lookup) {
    for (const auto &name : code_names()) {
        EXPECT_EQ(code_by_name(name).name, name);
        code_by_name(name).validate();
    }
    EXPECT_THROW(code_by_name("422"), std::invalid_argument);
    EXPECT_EQ(code_bitflip3().distance_label, "X-only");
    EXPECT_EQ(code_phaseflip3().distance_label, "Z-only");
}

TEST(codes, five_qubit_weight_one_syndromes_are_distinct) {
    const auto &c = code_513();
    std::set<uint32_t> seen;
    for (const auto &e : weight_one_errors(5, "XYZ")) {
        uint32_t s = c.syndrome_of(e);
        EXPECT_NE(s, 0u);
        seen.insert(s);
        EXPECT_EQ(c.decode(s), e.unsigned_copy());
        EXPECT_TRUE(c.in_group_up_to_sign(c.decode(s) * e));
    }
    EXPECT_EQ(seen.size(), 15u);
    EXPECT_EQ(c.decode_table.size(), 16u);
    EXPECT_TRUE(c.decode(0).is_identity());
}

TEST(codes, weight_one_corrections_land_in_group_for_every_code) {
    for (const auto &name : code_names()) {
        const auto &c = code_by_name(name);
        for (const auto &e : weight_one_errors(c.n, c.correctable)) {
            EXPECT_TRUE(c.in_group_up_to_sign(c.decode(c.syndrome_of(e)) * e)) << name << " " << e;
        }
    }
}

TEST(codes, decode_tie_break_prefers_x_bits_then_qubit_zero) {
    // Bit-flip code: X0 and Y0 share a syndrome; X0 is smaller.
    const auto &c = code_bitflip3();
    EXPECT_EQ(c.decode(0b01).str(), "+XII");
    EXPECT_EQ(c.decode(0b11).str(), "+IXI");
    EXPECT_EQ(c.decode(0b10).str(), "+IIX");
}

TEST(codes, group_membership_tracks_sign) {
    const auto &c = code_513();
    auto k1k3 = c.generators[0] * c.generators[2];
    EXPECT_TRUE(c.in_group(k1k3));
    auto neg = k1k3;
    neg.set_log_i((neg.log_i() + 2) & 3);
    EXPECT_FALSE(c.in_group(neg));
    EXPECT_TRUE(c.in_group_up_to_sign(neg));
    EXPECT_FALSE(c.in_group_up_to_sign(c.logical_z[0]));
}

TEST(codes, reduced_logical_z_of_five_qubit_code) {
    const auto &c = code_513();
    auto z = reduce_logical(c, 'Z');
    EXPECT_EQ(z.weight(), 3u);
    EXPECT_EQ(z.support(), (std::vector<uint32_t>{0, 3, 4}));
    EXPECT_EQ(z, c.logical_z[0] * c.generators[0]);
    // (XZ) on qubits 0 and 3, Z on qubit 4: (XZ)(XZ) = (-iY)(-iY) = -YY.
    auto xz = PauliString::from_str("X") * PauliString::from_str("Z");
    EXPECT_EQ(xz.str(), "-iY");
    EXPECT_EQ(z.str(), "-YIIYZ");
}

TEST(codes, reduced_logicals_are_logicals) {
    for (const auto &name : code_names()) {
        const auto &c = code_by_name(name);
        for (char which : {'X', 'Z'}) {
            auto r = reduce_logical(c, which);
            const auto &orig = which == 'X' ? c.logical_x[0] : c.logical_z[0];
            const auto &conj = which == 'X' ? c.logical_z[0] : c.logical_x[0];
            EXPECT_FALSE(r.commutes(conj)) << name << which;
            EXPECT_EQ(c.syndrome_of(r), 0u);
            EXPECT_TRUE(c.in_group(r * orig)) << name << which;
        }
    }
    EXPECT_EQ(reduce_logical(code_513(), 'X').weight(), 3u);
    EXPECT_EQ(reduce_logical(code_steane713(), 'X').weight(), 3u);
    EXPECT_EQ(reduce_logical(code_steane713(), 'Z').weight(), 3u);
}

TEST(codes, encode_zero_prepares_codespace) {
    for (const auto &name : code_names()) {
        const auto &c = code_by_name(name);
        Rng rng(1);
        RngOutcomes src(rng);
        Tableau t(c.n);
        for (const auto &s : encode_zero(c).steps()) {
            t.apply(s.gate, s.q0, s.q1);
        }
        for (const auto &g : c.generators) {
            auto r = t.measure(g, src);
            EXPECT_TRUE(r.deterministic);
            EXPECT_EQ(r.eigenvalue, 1) << name << " " << g;
        }
        EXPECT_EQ(t.peek(c.logical_z[0]), 1) << name;
    }
}

TEST(codes, bitflip_encoder_is_trivial_on_zero) {
    auto r = oracle_run(encode_zero(code_bitflip3()), 0);
    EXPECT_NEAR(std::abs(r.state.amplitudes()[0]), 1, 1e-12);
}

TEST(codes, five_qubit_encoder_matches_projection) {
    auto encoded = oracle_run(encode_zero(code_513()), 0).state;
    StateVector projected(5);
    ScriptedOutcomes plus_branch({});
    for (const auto &g : code_513().generators) {
        projected.measure(g, plus_branch);
    }
    EXPECT_TRUE(encoded.equal_up_to_phase(projected));
    size_t nonzero = 0;
    for (auto a : encoded.amplitudes()) {
        if (std::abs(a) > 1e-9) {
            nonzero++;
            EXPECT_NEAR(std::abs(a), 0.25, 1e-12);
        }
    }
    EXPECT_EQ(nonzero, 16u);
}

TEST(codes, encoders_from_reordered_generators_agree) {
    const auto &c = code_513();
    auto reordered = make_code("513r", 3, "3", "XYZ", {"ZXIXZ", "XIXZZ", "IXZZX", "XZZXI"}, "XXXXX", "ZZZZZ");
    auto a = encode_zero(c);
    auto b = encode_zero(reordered);
    EXPECT_NE(a, b);
    Tableau ta(5), tb(5);
    for (const auto &s : a.steps()) {
        ta.apply(s.gate, s.q0, s.q1);
    }
    for (const auto &s : b.steps()) {
        tb.apply(s.gate, s.q0, s.q1);
    }
    EXPECT_EQ(canonical_form(ta), canonical_form(tb));
}

TEST(codes, basic_syndrome_of_x_on_qubit_two) {
    const auto &c = code_513();
    auto data = range(0, 5);
    Rng rng(4);
    Processor p(6, rng);
    encode_zero(p, c, data);
    p.correct('X', 2);
    auto rec = extract_syndrome_basic(p, c, data, 5);
    EXPECT_EQ(rec.str(), "1100");
    EXPECT_EQ(rec.bits, c.syndrome_of(PauliString::single(5, 2, 'X')));
}

TEST(codes, logical_operators_are_invisible) {
    const auto &c = code_513();
    auto data = range(0, 5);
    Rng rng(4);
    Processor p(6, rng);
    encode_zero(p, c, data);
    p.correct(on_block(6, c.logical_z[0], data));
    EXPECT_EQ(extract_syndrome_basic(p, c, data, 5).str(), "0000");
    EXPECT_EQ(extract_syndrome_basic(p, c, data, 5).str(), "0000");
}

TEST(codes, missing_ancilla_is_rejected) {
    const auto &c = code_513();
    auto data = range(0, 5);
    Rng rng(4);
    Processor p(5, rng);
    EXPECT_THROW(extract_syndrome_basic(p, c, data, 5), std::invalid_argument);
    EXPECT_THROW(extract_syndrome_basic(p, c, data, 3), std::invalid_argument);
}

TEST(codes, every_weight_one_error_is_corrected_exactly) {
    for (const auto &name : code_names()) {
        const auto &c = code_by_name(name);
        auto data = range(0, c.n);
        uint32_t anc = c.n;
        Rng rng(8);
        Processor clean(c.n + 1, rng);
        encode_zero(clean, c, data);
        auto reference = canonical_form(clean.tableau());
        for (const auto &e : weight_one_errors(c.n, c.correctable)) {
            Processor p(c.n + 1, rng);
            encode_zero(p, c, data);
            p.correct(on_block(c.n + 1, e, data));
            auto rec = ec_cycle_basic(p, c, data, anc);
            EXPECT_EQ(rec.bits, c.syndrome_of(e));
            p.reset(anc);
            EXPECT_EQ(canonical_form(p.tableau()), reference) << name << " " << e;
        }
    }
}

TEST(codes, steane_transversal_cnot_is_logical_cnot) {
    // Conjugation check on two blocks: X_L (x) I -> X_L (x) X_L and
    // I (x) Z_L -> Z_L (x) Z_L, stabilizers preserved.
    const auto &c = code_steane713();
    auto a = range(0, 7), b = range(7, 7);
    auto conj = [&](PauliString p) {
        for (uint32_t q = 0; q < 7; q++) {
            conjugate_by_gate(p, GateKind::CNOT, a[q], b[q]);
        }
        return p;
    };
    auto xl = c.logical_x[0], zl = c.logical_z[0];
    EXPECT_EQ(conj(on_block(14, xl, a)), on_block(14, xl, a) * on_block(14, xl, b));
    EXPECT_EQ(conj(on_block(14, zl, b)), on_block(14, zl, a) * on_block(14, zl, b));
    EXPECT_EQ(conj(on_block(14, zl, a)), on_block(14, zl, a));
    for (const auto &g : c.generators) {
        for (auto blk : {a, b}) {
            auto img = conj(on_block(14, g, blk));
            // Image restricted to each block must be a stabilizer there.
            auto ra = img.restricted(a), rb = img.restricted(b);
            EXPECT_TRUE(ra.is_identity() || c.in_group_up_to_sign(ra));
            EXPECT_TRUE(rb.is_identity() || c.in_group_up_to_sign(rb));
        }
    }
}

TEST(codes, bitflip_transversal_cnot_on_oracle) {
    // |1>_L |0>_L -> |1>_L |1>_L on six qubits.
    Circuit circ(6);
    for (uint32_t q = 0; q < 3; q++) {
        circ.gate(GateKind::X, q);
    }
    for (uint32_t q = 0; q < 3; q++) {
        circ.gate(GateKind::CNOT, q, q + 3);
    }
    auto r = oracle_run(circ, 0);
    EXPECT_NEAR(std::abs(r.state.amplitudes()[63]), 1, 1e-12);
}
