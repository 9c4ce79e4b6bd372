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

#include "distqec/pauli_string.h"

#include <bit>
#include <ostream>
#include <stdexcept>

using namespace distqec;

uint8_t distqec::mul_words_log_i(
    uint64_t *lhs_x, uint64_t *lhs_z, const uint64_t *rhs_x, const uint64_t *rhs_z, size_t num_words) {
    // Bit-sliced mod 4 counters of the per-qubit +-i factors.
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t w = 0; w < num_words; w++) {
        uint64_t x1 = lhs_x[w];
        uint64_t z1 = lhs_z[w];
        uint64_t x2 = rhs_x[w];
        uint64_t z2 = rhs_z[w];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
        lhs_x[w] = nx;
        lhs_z[w] = nz;
    }
    uint8_t s = static_cast<uint8_t>(std::popcount(cnt1));
    s ^= static_cast<uint8_t>(std::popcount(cnt2) << 1);
    return s & 3;
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t log_i = 0;
    if (!text.empty() && text[0] == '+') {
        text.remove_prefix(1);
    } else if (!text.empty() && text[0] == '-') {
        log_i = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        log_i = (log_i + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set(q, text[q]);
    }
    result.log_i_ = log_i;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p) {
    if (q >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits));
    }
    PauliString result(num_qubits);
    result.set(q, p);
    return result;
}

PauliString PauliString::embed(size_t num_qubits, const PauliString &local, std::span<const uint32_t> qubits) {
    if (qubits.size() != local.num_qubits()) {
        throw std::invalid_argument("embed: qubit list size does not match the local Pauli string");
    }
    PauliString result(num_qubits);
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k] >= num_qubits) {
            throw std::out_of_range("embed: qubit index out of range");
        }
        result.set_x(qubits[k], local.x(k));
        result.set_z(qubits[k], local.z(k));
    }
    result.log_i_ = local.log_i_;
    return result;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        xs_[q >> 6] |= m;
    } else {
        xs_[q >> 6] &= ~m;
    }
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        zs_[q >> 6] |= m;
    } else {
        zs_[q >> 6] &= ~m;
    }
}

char PauliString::get(size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x(q) | (z(q) << 1)];
}

void PauliString::set(size_t q, char p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    switch (p) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli character: '") + p + "'");
    }
}

PauliString PauliString::unsigned_copy() const {
    PauliString r = *this;
    r.log_i_ = 0;
    return r;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

bool PauliString::is_identity() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

std::vector<uint32_t> PauliString::support() const {
    std::vector<uint32_t> result;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (x(q) || z(q)) {
            result.push_back(static_cast<uint32_t>(q));
        }
    }
    return result;
}

bool PauliString::same_paulis(const PauliString &other) const {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool PauliString::commutes(const PauliString &other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw std::invalid_argument("commutes: Pauli strings act on different numbers of qubits");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        acc ^= (xs_[k] & other.zs_[k]) ^ (zs_[k] & other.xs_[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (num_qubits_ != rhs.num_qubits_) {
        throw std::invalid_argument("Pauli product of strings with different qubit counts");
    }
    uint8_t k = mul_words_log_i(xs_.data(), zs_.data(), rhs.xs_.data(), rhs.zs_.data(), xs_.size());
    log_i_ = (log_i_ + rhs.log_i_ + k) & 3;
    return *this;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString r = *this;
    r *= rhs;
    return r;
}

bool PauliString::operator==(const PauliString &other) const {
    return log_i_ == other.log_i_ && same_paulis(other);
}

bool PauliString::lex_less(const PauliString &other) const {
    for (size_t q = 0; q < num_qubits_; q++) {
        if (x(q) != other.x(q)) {
            return !x(q);
        }
    }
    for (size_t q = 0; q < num_qubits_; q++) {
        if (z(q) != other.z(q)) {
            return !z(q);
        }
    }
    return false;
}

PauliString PauliString::restricted(std::span<const uint32_t> qubits) const {
    PauliString r(qubits.size());
    for (size_t k = 0; k < qubits.size(); k++) {
        r.set_x(k, x(qubits[k]));
        r.set_z(k, z(qubits[k]));
    }
    return r;
}

std::string PauliString::str() const {
    static constexpr const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[log_i_];
    for (size_t q = 0; q < num_qubits_; q++) {
        s += get(q);
    }
    return s;
}

std::ostream &distqec::operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}
