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

#ifndef ZLD_PAULI_H
#define ZLD_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zld {

/// Hermitian Pauli product over n qubits with a +1/-1 sign.
///
/// Letters are stored as (x, z) bit pairs: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
/// Products of anticommuting strings pick up a factor of +-i which is dropped:
/// a leading +i becomes +1 and a leading -i becomes -1. Under this convention
/// X*Z = -Y and Z*X = +Y.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses strings such as "XIZ", "+XIZ", "-YY". Underscores read as I.
    static PauliString from_text(std::string_view text);
    /// Single-letter Pauli on qubit q of an n-qubit register.
    static PauliString single(size_t num_qubits, size_t q, char letter);

    size_t size() const {
        return num_qubits_;
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool v) {
        negative_ = v;
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    char letter(size_t q) const;
    void set_letter(size_t q, char letter);

    size_t weight() const;
    bool is_identity() const;
    std::string str() const;

    /// In-place right multiplication; returns the dropped power of i (0..3).
    unsigned mul_inplace(const PauliString &rhs);

    bool operator==(const PauliString &other) const = default;

    const std::vector<uint64_t> &xs() const {
        return xs_;
    }
    const std::vector<uint64_t> &zs() const {
        return zs_;
    }

   private:
    size_t num_qubits_ = 0;
    bool negative_ = false;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// Group product a*b with the sign convention described on PauliString.
PauliString pauli_mul(const PauliString &a, const PauliString &b);

/// True iff a and b commute.
bool commutes(const PauliString &a, const PauliString &b);

}  // namespace zld

#endif
