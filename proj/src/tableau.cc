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

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

using namespace distqec;

Tableau::Tableau(size_t num_qubits)
    : n_(num_qubits), w_(words_for(num_qubits)), xs_(2 * n_ * w_, 0), zs_(2 * n_ * w_, 0), signs_(2 * n_, 0) {
    for (size_t q = 0; q < n_; q++) {
        row_x(q)[q >> 6] |= uint64_t{1} << (q & 63);
        row_z(n_ + q)[q >> 6] |= uint64_t{1} << (q & 63);
    }
}

void Tableau::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a " + std::to_string(n_) +
                                "-qubit tableau");
    }
}

void Tableau::apply(GateKind gate, uint32_t a, uint32_t b) {
    switch (gate) {
        case GateKind::H:
            h(a);
            break;
        case GateKind::S:
            s(a);
            break;
        case GateKind::S_DAG:
            s_dag(a);
            break;
        case GateKind::X:
            x(a);
            break;
        case GateKind::Y:
            y(a);
            break;
        case GateKind::Z:
            z(a);
            break;
        case GateKind::CNOT:
            cnot(a, b);
            break;
        case GateKind::CY:
            cy(a, b);
            break;
        case GateKind::CZ:
            cz(a, b);
            break;
    }
}

// Column updates follow the Aaronson-Gottesman rules with (1,1) = Y.

void Tableau::h(uint32_t q) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xw = xs_[r * w_ + k];
        uint64_t &zw = zs_[r * w_ + k];
        uint64_t xb = (xw >> b) & 1;
        uint64_t zb = (zw >> b) & 1;
        signs_[r] ^= static_cast<uint8_t>((xb & zb) << 1);
        uint64_t diff = (xb ^ zb) << b;
        xw ^= diff;
        zw ^= diff;
    }
}

void Tableau::s(uint32_t q) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t xb = (xs_[r * w_ + k] >> b) & 1;
        uint64_t zb = (zs_[r * w_ + k] >> b) & 1;
        signs_[r] ^= static_cast<uint8_t>((xb & zb) << 1);
        zs_[r * w_ + k] ^= xb << b;
    }
}

void Tableau::s_dag(uint32_t q) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t xb = (xs_[r * w_ + k] >> b) & 1;
        uint64_t zb = (zs_[r * w_ + k] >> b) & 1;
        signs_[r] ^= static_cast<uint8_t>((xb & (zb ^ 1)) << 1);
        zs_[r * w_ + k] ^= xb << b;
    }
}

void Tableau::x(uint32_t q) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= static_cast<uint8_t>(((zs_[r * w_ + k] >> b) & 1) << 1);
    }
}

void Tableau::y(uint32_t q) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= static_cast<uint8_t>((((xs_[r * w_ + k] ^ zs_[r * w_ + k]) >> b) & 1) << 1);
    }
}

void Tableau::z(uint32_t q) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= static_cast<uint8_t>(((xs_[r * w_ + k] >> b) & 1) << 1);
    }
}

void Tableau::cnot(uint32_t control, uint32_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    size_t kc = control >> 6, kt = target >> 6;
    unsigned bc = control & 63, bt = target & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xs_.data() + r * w_;
        uint64_t *zr = zs_.data() + r * w_;
        uint64_t xc = (xr[kc] >> bc) & 1;
        uint64_t zc = (zr[kc] >> bc) & 1;
        uint64_t xt = (xr[kt] >> bt) & 1;
        uint64_t zt = (zr[kt] >> bt) & 1;
        signs_[r] ^= static_cast<uint8_t>((xc & zt & (xt ^ zc ^ 1)) << 1);
        xr[kt] ^= xc << bt;
        zr[kc] ^= zt << bc;
    }
}

void Tableau::cz(uint32_t a, uint32_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("CZ qubits must differ");
    }
    size_t ka = a >> 6, kb = b >> 6;
    unsigned ba = a & 63, bb = b & 63;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xs_.data() + r * w_;
        uint64_t *zr = zs_.data() + r * w_;
        uint64_t xa = (xr[ka] >> ba) & 1;
        uint64_t za = (zr[ka] >> ba) & 1;
        uint64_t xb = (xr[kb] >> bb) & 1;
        uint64_t zb = (zr[kb] >> bb) & 1;
        signs_[r] ^= static_cast<uint8_t>((xa & xb & (za ^ zb)) << 1);
        zr[ka] ^= xb << ba;
        zr[kb] ^= xa << bb;
    }
}

void Tableau::cy(uint32_t control, uint32_t target) {
    // CY = S_t . CNOT . S_dag_t since S X S_dag = Y.
    s_dag(target);
    cnot(control, target);
    s(target);
}

void Tableau::apply_pauli(const PauliString &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("apply_pauli: Pauli string size does not match tableau");
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        if (row_anticommutes(r, p)) {
            signs_[r] ^= 2;
        }
    }
}

PauliString Tableau::row(size_t r) const {
    PauliString p(n_);
    for (size_t q = 0; q < n_; q++) {
        p.set_x(q, (row_x(r)[q >> 6] >> (q & 63)) & 1);
        p.set_z(q, (row_z(r)[q >> 6] >> (q & 63)) & 1);
    }
    p.set_log_i(signs_[r]);
    return p;
}

void Tableau::set_row(size_t r, const PauliString &p) {
    for (size_t k = 0; k < w_; k++) {
        row_x(r)[k] = p.xs()[k];
        row_z(r)[k] = p.zs()[k];
    }
    signs_[r] = p.log_i();
}

bool Tableau::row_anticommutes(size_t r, const PauliString &p) const {
    const uint64_t *xr = row_x(r);
    const uint64_t *zr = row_z(r);
    uint64_t acc = 0;
    for (size_t k = 0; k < w_; k++) {
        acc ^= (xr[k] & p.zs()[k]) ^ (zr[k] & p.xs()[k]);
    }
    return std::popcount(acc) & 1;
}

void Tableau::mul_row(size_t dst, size_t src) {
    uint8_t k = mul_words_log_i(row_x(dst), row_z(dst), row_x(src), row_z(src), w_);
    signs_[dst] = (signs_[dst] + signs_[src] + k) & 3;
}

MeasureResult Tableau::measure(const PauliString &observable, OutcomeSource &outcomes) {
    if (observable.num_qubits() != n_) {
        throw std::invalid_argument("measure: observable size does not match tableau");
    }
    if (!observable.is_hermitian()) {
        throw std::invalid_argument("measure: observable " + observable.str() + " has an imaginary sign");
    }
    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (row_anticommutes(r, observable)) {
            pivot = r;
            break;
        }
    }
    if (pivot == 2 * n_) {
        int v = *peek(observable);
        return {v, true};
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != pivot && r != pivot - n_ && row_anticommutes(r, observable)) {
            mul_row(r, pivot);
        }
    }
    // The old stabilizer becomes the partner destabilizer of the new row.
    std::copy(row_x(pivot), row_x(pivot) + w_, row_x(pivot - n_));
    std::copy(row_z(pivot), row_z(pivot) + w_, row_z(pivot - n_));
    signs_[pivot - n_] = signs_[pivot];
    bool minus = outcomes.draw(0.5);
    set_row(pivot, observable);
    if (minus) {
        signs_[pivot] ^= 2;
    }
#ifndef NDEBUG
    check_invariants();
#endif
    return {minus ? -1 : 1, false};
}

MeasureResult Tableau::measure_z(uint32_t q, OutcomeSource &outcomes) {
    check_qubit(q);
    size_t k = q >> 6;
    unsigned b = q & 63;
    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if ((xs_[r * w_ + k] >> b) & 1) {
            pivot = r;
            break;
        }
    }
    if (pivot == 2 * n_) {
        std::vector<uint64_t> acc_x(w_, 0), acc_z(w_, 0);
        uint8_t log_i = 0;
        for (size_t i = 0; i < n_; i++) {
            if ((xs_[i * w_ + k] >> b) & 1) {
                uint8_t m = mul_words_log_i(acc_x.data(), acc_z.data(), row_x(n_ + i), row_z(n_ + i), w_);
                log_i = (log_i + signs_[n_ + i] + m) & 3;
            }
        }
        return {log_i == 2 ? -1 : 1, true};
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != pivot && r != pivot - n_ && ((xs_[r * w_ + k] >> b) & 1)) {
            mul_row(r, pivot);
        }
    }
    std::copy(row_x(pivot), row_x(pivot) + w_, row_x(pivot - n_));
    std::copy(row_z(pivot), row_z(pivot) + w_, row_z(pivot - n_));
    signs_[pivot - n_] = signs_[pivot];
    std::fill(row_x(pivot), row_x(pivot) + w_, 0);
    std::fill(row_z(pivot), row_z(pivot) + w_, 0);
    row_z(pivot)[k] = uint64_t{1} << b;
    bool minus = outcomes.draw(0.5);
    signs_[pivot] = minus ? 2 : 0;
#ifndef NDEBUG
    check_invariants();
#endif
    return {minus ? -1 : 1, false};
}

void Tableau::reset(uint32_t q, OutcomeSource &outcomes) {
    if (measure_z(q, outcomes).eigenvalue < 0) {
        x(q);
    }
}

std::optional<int> Tableau::peek(const PauliString &observable) const {
    if (observable.num_qubits() != n_) {
        throw std::invalid_argument("peek: observable size does not match tableau");
    }
    for (size_t r = n_; r < 2 * n_; r++) {
        if (row_anticommutes(r, observable)) {
            return std::nullopt;
        }
    }
    // The observable is the product of stabilizers whose destabilizer partner
    // anticommutes with it.
    std::vector<uint64_t> acc_x(w_, 0), acc_z(w_, 0);
    uint8_t log_i = 0;
    for (size_t i = 0; i < n_; i++) {
        if (row_anticommutes(i, observable)) {
            uint8_t k = mul_words_log_i(acc_x.data(), acc_z.data(), row_x(n_ + i), row_z(n_ + i), w_);
            log_i = (log_i + signs_[n_ + i] + k) & 3;
        }
    }
    if (acc_x != observable.xs() || acc_z != observable.zs()) {
        throw std::logic_error("peek: stabilizer product mismatch; tableau is corrupt");
    }
    int acc_sign = log_i == 2 ? -1 : 1;
    return acc_sign * observable.sign();
}

PauliString Tableau::stabilizer(size_t i) const {
    return row(n_ + i);
}

PauliString Tableau::destabilizer(size_t i) const {
    return row(i);
}

std::vector<PauliString> Tableau::stabilizers() const {
    std::vector<PauliString> result;
    result.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        result.push_back(row(n_ + i));
    }
    return result;
}

void Tableau::check_invariants() const {
    for (size_t r = 0; r < 2 * n_; r++) {
        if (signs_[r] & 1) {
            throw std::logic_error("tableau row " + std::to_string(r) + " has an imaginary sign");
        }
    }
    for (size_t i = 0; i < n_; i++) {
        PauliString si = row(n_ + i);
        PauliString di = row(i);
        for (size_t j = 0; j < n_; j++) {
            PauliString sj = row(n_ + j);
            if (!si.commutes(sj)) {
                throw std::logic_error("stabilizer rows do not commute");
            }
            if (di.commutes(sj) == (i == j)) {
                throw std::logic_error("destabilizer/stabilizer pairing is broken");
            }
        }
    }
}

std::vector<PauliString> distqec::canonical_form(std::vector<PauliString> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t n = rows[0].num_qubits();
    size_t pivot_row = 0;
    auto eliminate = [&](bool use_x) {
        for (size_t q = 0; q < n && pivot_row < rows.size(); q++) {
            size_t found = rows.size();
            for (size_t r = pivot_row; r < rows.size(); r++) {
                if (use_x ? rows[r].x(q) : rows[r].z(q)) {
                    found = r;
                    break;
                }
            }
            if (found == rows.size()) {
                continue;
            }
            std::swap(rows[pivot_row], rows[found]);
            for (size_t r = 0; r < rows.size(); r++) {
                if (r != pivot_row && (use_x ? rows[r].x(q) : rows[r].z(q))) {
                    rows[r] *= rows[pivot_row];
                }
            }
            pivot_row++;
        }
    };
    eliminate(true);
    eliminate(false);
    return rows;
}

std::vector<PauliString> distqec::canonical_form(const Tableau &tableau) {
    return canonical_form(tableau.stabilizers());
}

namespace {

// Images of X_q and Z_q for each qubit the gate touches.
struct GateImages {
    PauliString x[2];
    PauliString z[2];
};

GateImages gate_images(size_t n, GateKind gate, uint32_t a, uint32_t b) {
    auto one = [&](uint32_t q, char c) {
        return PauliString::single(n, q, c);
    };
    auto neg = [](PauliString p) {
        p.set_log_i((p.log_i() + 2) & 3);
        return p;
    };
    GateImages g;
    g.x[0] = one(a, 'X');
    g.z[0] = one(a, 'Z');
    if (is_two_qubit(gate)) {
        g.x[1] = one(b, 'X');
        g.z[1] = one(b, 'Z');
    }
    switch (gate) {
        case GateKind::H:
            std::swap(g.x[0], g.z[0]);
            break;
        case GateKind::S:
            g.x[0] = one(a, 'Y');
            break;
        case GateKind::S_DAG:
            g.x[0] = neg(one(a, 'Y'));
            break;
        case GateKind::X:
            g.z[0] = neg(g.z[0]);
            break;
        case GateKind::Y:
            g.x[0] = neg(g.x[0]);
            g.z[0] = neg(g.z[0]);
            break;
        case GateKind::Z:
            g.x[0] = neg(g.x[0]);
            break;
        case GateKind::CNOT:
            g.x[0] = one(a, 'X') * one(b, 'X');
            g.z[1] = one(a, 'Z') * one(b, 'Z');
            break;
        case GateKind::CY:
            g.x[0] = one(a, 'X') * one(b, 'Y');
            g.x[1] = one(a, 'Z') * one(b, 'X');
            g.z[1] = one(a, 'Z') * one(b, 'Z');
            break;
        case GateKind::CZ:
            g.x[0] = one(a, 'X') * one(b, 'Z');
            g.x[1] = one(a, 'Z') * one(b, 'X');
            break;
    }
    return g;
}

}  // namespace

void distqec::conjugate_by_gate(PauliString &p, GateKind gate, uint32_t a, uint32_t b) {
    size_t n = p.num_qubits();
    if (a >= n || (is_two_qubit(gate) && (b >= n || a == b))) {
        throw std::out_of_range("conjugate_by_gate: bad qubit indices");
    }
    uint32_t qs[2] = {a, b};
    int count = is_two_qubit(gate) ? 2 : 1;
    char factors[2] = {p.get(a), count == 2 ? p.get(b) : 'I'};
    bool trivial = true;
    for (int k = 0; k < count; k++) {
        trivial &= factors[k] == 'I';
    }
    if (trivial) {
        return;
    }
    auto images = gate_images(n, gate, a, b);
    PauliString out = p;
    for (int k = 0; k < count; k++) {
        out.set(qs[k], 'I');
    }
    for (int k = 0; k < count; k++) {
        switch (factors[k]) {
            case 'X':
                out *= images.x[k];
                break;
            case 'Z':
                out *= images.z[k];
                break;
            case 'Y': {
                // Y = iXZ.
                PauliString y = images.x[k] * images.z[k];
                y.set_log_i((y.log_i() + 1) & 3);
                out *= y;
                break;
            }
            default:
                break;
        }
    }
    p = std::move(out);
}
