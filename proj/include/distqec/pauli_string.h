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

#ifndef DISTQEC_PAULI_STRING_H
#define DISTQEC_PAULI_STRING_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distqec {

/// Number of 64 bit words needed to hold `n` bits.
inline size_t words_for(size_t n) {
    return (n + 63) / 64;
}

/// Computes the power of i picked up when multiplying Pauli strings stored as
/// bit-packed (x, z) words, i.e. `lhs * rhs = i^k * (lhs ^ rhs)`.
///
/// Bit pairs use the convention (1,1) = Y = iXZ. The left operand is updated
/// in place; the returned exponent is in [0, 4) and excludes both operands'
/// own scalar phases.
uint8_t mul_words_log_i(uint64_t *lhs_x, uint64_t *lhs_z, const uint64_t *rhs_x, const uint64_t *rhs_z, size_t num_words);

/// An n-qubit Pauli operator with a scalar phase in {+1, +i, -1, -i}.
///
/// Qubit 0 is the leftmost character of the text form, so "XZZXI" acts with X
/// on qubits 0 and 3. The phase is stored as a power of i. Text forms accept an
/// optional leading sign ("+", "-", "i", "-i") and the characters I, X, Y, Z
/// (and '_' as an alias for I).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    static PauliString from_str(std::string_view text);
    /// Single-qubit Pauli `p` in {'I','X','Y','Z'} on qubit `q` of an n-qubit register.
    static PauliString single(size_t num_qubits, size_t q, char p);
    /// Embeds `local` into an n-qubit register, placing local qubit k on qubits[k].
    static PauliString embed(size_t num_qubits, const PauliString &local, std::span<const uint32_t> qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_words() const {
        return xs_.size();
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    /// 'I', 'X', 'Y' or 'Z'.
    char get(size_t q) const;
    void set(size_t q, char p);

    /// Power of i multiplying the tensor product of Paulis.
    uint8_t log_i() const {
        return log_i_;
    }
    void set_log_i(uint8_t k) {
        log_i_ = k & 3;
    }
    bool is_hermitian() const {
        return (log_i_ & 1) == 0;
    }
    /// +1 or -1. Only meaningful for Hermitian strings.
    int sign() const {
        return log_i_ == 2 ? -1 : 1;
    }
    /// Copy with the scalar phase reset to +1.
    PauliString unsigned_copy() const;

    size_t weight() const;
    bool is_identity() const;
    std::vector<uint32_t> support() const;
    /// Same Pauli on every qubit, ignoring phase.
    bool same_paulis(const PauliString &other) const;

    bool commutes(const PauliString &other) const;

    /// this = this * rhs, tracking phase.
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const;
    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }
    /// Lexicographic order on (x bits, z bits), qubit 0 most significant.
    bool lex_less(const PauliString &other) const;

    /// Restriction to the listed qubits, as a qubits.size()-qubit string (phase dropped).
    PauliString restricted(std::span<const uint32_t> qubits) const;

    std::string str() const;

    const std::vector<uint64_t> &xs() const {
        return xs_;
    }
    const std::vector<uint64_t> &zs() const {
        return zs_;
    }

   private:
    size_t num_qubits_ = 0;
    uint8_t log_i_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace distqec

#endif
