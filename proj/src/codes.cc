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

#include <algorithm>
#include <stdexcept>

#include "distqec/tableau.h"

using namespace distqec;

namespace {

uint64_t symplectic_bits(const PauliString &p) {
    uint64_t v = 0;
    size_t n = p.num_qubits();
    for (size_t q = 0; q < n; q++) {
        v |= uint64_t(p.x(q)) << q;
        v |= uint64_t(p.z(q)) << (q + n);
    }
    return v;
}

// Generator subset whose product equals `p` up to sign, if any.
std::optional<uint32_t> solve_membership(const StabilizerCode &code, const PauliString &p) {
    if (p.num_qubits() != code.n) {
        throw std::invalid_argument("membership test: size mismatch");
    }
    // Gaussian elimination over GF(2), tracking which generators form each row.
    std::vector<std::pair<uint64_t, uint32_t>> rows;
    for (size_t i = 0; i < code.generators.size(); i++) {
        rows.emplace_back(symplectic_bits(code.generators[i]), uint32_t{1} << i);
    }
    uint64_t target = symplectic_bits(p);
    uint32_t combo = 0;
    size_t rank = 0;
    for (size_t bit = 0; bit < 2 * code.n && rank < rows.size(); bit++) {
        uint64_t m = uint64_t{1} << bit;
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot].first & m)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && (rows[r].first & m)) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        if (target & m) {
            target ^= rows[rank].first;
            combo ^= rows[rank].second;
        }
        rank++;
    }
    if (target != 0) {
        return std::nullopt;
    }
    return combo;
}

void build_decode_table(StabilizerCode &code) {
    size_t n = code.n;
    size_t m = code.generators.size();
    std::vector<PauliString> best(size_t{1} << m);
    std::vector<bool> have(best.size(), false);
    if (n > 12) {
        throw std::invalid_argument("decode table enumeration is limited to 12 qubits");
    }
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t v = 0; v < total; v++) {
        PauliString e(n);
        for (size_t q = 0; q < n; q++) {
            e.set_x(q, (v >> q) & 1);
            e.set_z(q, (v >> (q + n)) & 1);
        }
        uint32_t s = code.syndrome_of(e);
        if (!have[s] || e.weight() < best[s].weight() ||
            (e.weight() == best[s].weight() && e.lex_less(best[s]))) {
            best[s] = e;
            have[s] = true;
        }
    }
    for (size_t s = 0; s < best.size(); s++) {
        if (!have[s]) {
            throw std::logic_error("syndrome " + std::to_string(s) + " is unreachable");
        }
    }
    code.decode_table = std::move(best);
}

}  // namespace

uint32_t StabilizerCode::syndrome_of(const PauliString &error) const {
    uint32_t s = 0;
    for (size_t i = 0; i < generators.size(); i++) {
        if (!generators[i].commutes(error)) {
            s |= uint32_t{1} << i;
        }
    }
    return s;
}

const PauliString &StabilizerCode::decode(uint32_t syndrome) const {
    if (syndrome >= decode_table.size()) {
        throw std::out_of_range("syndrome " + std::to_string(syndrome) + " is not in the decode table");
    }
    return decode_table[syndrome];
}

bool StabilizerCode::in_group_up_to_sign(const PauliString &p) const {
    return solve_membership(*this, p).has_value();
}

bool StabilizerCode::in_group(const PauliString &p) const {
    auto combo = solve_membership(*this, p);
    return combo && group_element(*combo) == p;
}

PauliString StabilizerCode::group_element(uint32_t mask) const {
    PauliString out(n);
    for (size_t i = 0; i < generators.size(); i++) {
        if ((mask >> i) & 1) {
            out *= generators[i];
        }
    }
    return out;
}

void StabilizerCode::validate() const {
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != n || !generators[i].is_hermitian()) {
            throw std::logic_error(name + ": bad generator " + generators[i].str());
        }
        for (size_t j = 0; j < i; j++) {
            if (!generators[i].commutes(generators[j])) {
                throw std::logic_error(name + ": generators do not commute");
            }
        }
    }
    for (size_t a = 0; a < k; a++) {
        for (const auto &g : generators) {
            if (!g.commutes(logical_x[a]) || !g.commutes(logical_z[a])) {
                throw std::logic_error(name + ": logical operator fails to commute with a generator");
            }
        }
        if (logical_x[a].commutes(logical_z[a])) {
            throw std::logic_error(name + ": logical X and Z commute");
        }
    }
    if (decode_table.size() != (size_t{1} << generators.size()) || !decode_table[0].is_identity()) {
        throw std::logic_error(name + ": malformed decode table");
    }
}

StabilizerCode distqec::make_code(std::string name, size_t d, std::string distance_label, std::string correctable,
                                  const std::vector<std::string> &generators, const std::string &logical_x,
                                  const std::string &logical_z) {
    StabilizerCode c;
    c.name = std::move(name);
    c.d = d;
    c.distance_label = std::move(distance_label);
    c.correctable = std::move(correctable);
    for (const auto &g : generators) {
        c.generators.push_back(PauliString::from_str(g));
    }
    c.logical_x.push_back(PauliString::from_str(logical_x));
    c.logical_z.push_back(PauliString::from_str(logical_z));
    c.n = c.logical_x[0].num_qubits();
    c.k = 1;
    build_decode_table(c);
    c.validate();
    return c;
}

const StabilizerCode &distqec::code_513() {
    static const StabilizerCode c =
        make_code("513", 3, "3", "XYZ", {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, "XXXXX", "ZZZZZ");
    return c;
}

const StabilizerCode &distqec::code_steane713() {
    static const StabilizerCode c =
        make_code("steane713", 3, "3", "XYZ",
                  {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, "XXXXXXX", "ZZZZZZZ");
    return c;
}

const StabilizerCode &distqec::code_bitflip3() {
    static const StabilizerCode c = make_code("bitflip3", 1, "X-only", "X", {"ZZI", "IZZ"}, "XXX", "ZZZ");
    return c;
}

const StabilizerCode &distqec::code_phaseflip3() {
    static const StabilizerCode c = make_code("phaseflip3", 1, "Z-only", "Z", {"XXI", "IXX"}, "ZZZ", "XXX");
    return c;
}

const StabilizerCode &distqec::code_trivial() {
    static const StabilizerCode c = make_code("trivial", 1, "1", "", {}, "X", "Z");
    return c;
}

std::vector<std::string> distqec::code_names() {
    return {"513", "steane713", "bitflip3", "phaseflip3"};
}

const StabilizerCode &distqec::code_by_name(std::string_view name) {
    if (name == "513") {
        return code_513();
    }
    if (name == "steane713") {
        return code_steane713();
    }
    if (name == "bitflip3") {
        return code_bitflip3();
    }
    if (name == "phaseflip3") {
        return code_phaseflip3();
    }
    throw std::invalid_argument("unknown code '" + std::string(name) + "' (known: 513, steane713, bitflip3, phaseflip3)");
}

PauliString distqec::reduce_logical(const StabilizerCode &code, char which) {
    if (which != 'X' && which != 'Z') {
        throw std::invalid_argument("reduce_logical: which must be 'X' or 'Z'");
    }
    const PauliString &logical = which == 'X' ? code.logical_x[0] : code.logical_z[0];
    PauliString best = logical;
    for (uint32_t mask = 1; mask < (uint32_t{1} << code.generators.size()); mask++) {
        PauliString cand = logical * code.group_element(mask);
        if (cand.weight() < best.weight()) {
            best = cand;
        }
    }
    return best;
}

Circuit distqec::encode_zero(const StabilizerCode &code) {
    size_t n = code.n;
    std::vector<PauliString> rows = code.generators;
    rows.push_back(code.logical_z[0]);
    struct G {
        GateKind g;
        uint32_t a, b;
    };
    std::vector<G> gates;
    auto apply = [&](GateKind g, uint32_t a, uint32_t b = 0) {
        gates.push_back({g, a, b});
        for (auto &r : rows) {
            conjugate_by_gate(r, g, a, b);
        }
    };
    std::vector<bool> pivot(n, false);
    for (size_t j = 0; j < rows.size(); j++) {
        std::vector<uint32_t> support;
        for (uint32_t q = 0; q < n; q++) {
            if (!pivot[q] && rows[j].get(q) != 'I') {
                support.push_back(q);
            }
        }
        if (support.empty()) {
            throw std::logic_error("encode_zero: dependent stabilizers");
        }
        for (uint32_t q : support) {
            char c = rows[j].get(q);
            if (c == 'Y') {
                apply(GateKind::S_DAG, q);
            }
            if (c != 'Z') {
                apply(GateKind::H, q);
            }
        }
        uint32_t target = support[0];
        for (size_t k = 1; k < support.size(); k++) {
            apply(GateKind::CNOT, support[k], target);
        }
        if (rows[j].sign() < 0) {
            apply(GateKind::X, target);
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != j && rows[r].z(target)) {
                rows[r] *= rows[j];
            }
        }
        pivot[target] = true;
    }
    Circuit out(n);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        GateKind g = it->g == GateKind::S ? GateKind::S_DAG : it->g == GateKind::S_DAG ? GateKind::S : it->g;
        out.gate(g, it->a, it->b);
    }
    return out;
}

void distqec::encode_zero(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data) {
    if (data.size() != code.n) {
        throw std::invalid_argument("encode_zero: expected " + std::to_string(code.n) + " data qubits");
    }
    // Keyed by the stabilizers themselves so that temporary codes are safe.
    struct Entry {
        std::vector<PauliString> key;
        Circuit circuit;
    };
    static thread_local std::vector<Entry> cache;
    std::vector<PauliString> key = code.generators;
    key.push_back(code.logical_z[0]);
    const Circuit *circuit = nullptr;
    for (const auto &e : cache) {
        if (e.key == key) {
            circuit = &e.circuit;
        }
    }
    if (!circuit) {
        cache.push_back({key, encode_zero(code)});
        circuit = &cache.back().circuit;
    }
    for (const auto &s : circuit->steps()) {
        processor.gate(s.gate, data[s.q0], data[s.q1]);
    }
}

std::string SyndromeRecord::str() const {
    std::string s;
    for (size_t i = 0; i < num_bits; i++) {
        s += bit(i) ? '1' : '0';
    }
    return s;
}

SyndromeRecord distqec::extract_syndrome_basic(Processor &processor, const StabilizerCode &code,
                                               std::span<const uint32_t> data, uint32_t ancilla) {
    if (data.size() != code.n) {
        throw std::invalid_argument("extract_syndrome_basic: expected " + std::to_string(code.n) + " data qubits");
    }
    if (ancilla >= processor.num_qubits() || std::find(data.begin(), data.end(), ancilla) != data.end()) {
        throw std::invalid_argument("extract_syndrome_basic: no free ancilla qubit");
    }
    SyndromeRecord rec;
    rec.num_bits = code.num_generators();
    rec.source = SyndromeSource::Basic;
    for (size_t i = 0; i < code.generators.size(); i++) {
        const auto &g = code.generators[i];
        processor.reset(ancilla);
        processor.h(ancilla);
        for (uint32_t q = 0; q < code.n; q++) {
            char c = g.get(q);
            if (c != 'I') {
                processor.controlled_pauli(c, ancilla, data[q]);
            }
        }
        bool bit = processor.measure_x(ancilla);
        if (g.sign() < 0) {
            bit = !bit;
        }
        if (bit) {
            rec.bits |= uint32_t{1} << i;
        }
    }
    return rec;
}

void distqec::apply_correction(Processor &processor, const StabilizerCode &code, std::span<const uint32_t> data,
                               uint32_t syndrome) {
    const PauliString &fix = code.decode(syndrome);
    for (uint32_t q = 0; q < code.n; q++) {
        processor.correct(fix.get(q), data[q]);
    }
}

SyndromeRecord distqec::ec_cycle_basic(Processor &processor, const StabilizerCode &code,
                                       std::span<const uint32_t> data, uint32_t ancilla) {
    auto rec = extract_syndrome_basic(processor, code, data, ancilla);
    apply_correction(processor, code, data, rec.bits);
    return rec;
}

PauliString distqec::on_block(size_t num_qubits, const PauliString &local, std::span<const uint32_t> data) {
    return PauliString::embed(num_qubits, local, data);
}
