// Copyright 2026 The zld Authors
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

#include "zld/pauli.h"

#include <bit>
#include <stdexcept>

namespace zld {

namespace {

size_t num_words(size_t n) {
    return (n + 63) >> 6;
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "Pauli layout mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " qubits.");
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    result.negative_ = neg;
    for (size_t k = 0; k < text.size(); k++) {
        result.set_letter(k, text[k]);
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char letter) {
    PauliString result(num_qubits);
    result.set_letter(q, letter);
    return result;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
}

char PauliString::letter(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x(q) | (z(q) << 1)];
}

void PauliString::set_letter(size_t q, char c) {
    switch (c) {
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
            throw std::invalid_argument(std::string("Unknown Pauli letter '") + c + "'.");
    }
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

std::string PauliString::str() const {
    std::string s;
    s.push_back(negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        s.push_back(letter(q) == 'I' ? '_' : letter(q));
    }
    return s;
}

unsigned PauliString::mul_inplace(const PauliString &rhs) {
    require_same_size(*this, rhs);
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        uint64_t x1 = xs_[k];
        uint64_t z1 = zs_[k];
        uint64_t x2 = rhs.xs_[k];
        uint64_t z2 = rhs.zs_[k];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
        xs_[k] = nx;
        zs_[k] = nz;
    }
    unsigned log_i = (unsigned)(std::popcount(cnt1) + 2 * std::popcount(cnt2)) & 3;
    negative_ ^= rhs.negative_ ^ ((log_i >> 1) & 1);
    return log_i;
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    PauliString r = a;
    r.mul_inplace(b);
    return r;
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    uint64_t acc = 0;
    for (size_t k = 0; k < a.xs().size(); k++) {
        acc ^= (a.xs()[k] & b.zs()[k]) ^ (a.zs()[k] & b.xs()[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

}  // namespace zld
