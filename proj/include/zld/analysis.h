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

#ifndef ZLD_ANALYSIS_H
#define ZLD_ANALYSIS_H

#include <cstdint>
#include <string>
#include <vector>

#include "zld/circuit.h"
#include "zld/code_spec.h"
#include "zld/pauli.h"
#include "zld/tableau.h"

namespace zld {

/// Dense GF(2) vector.
struct BitVec {
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(size_t n) : words((n + 63) / 64, 0) {
    }
    bool get(size_t k) const {
        return (words[k >> 6] >> (k & 63)) & 1;
    }
    void flip(size_t k) {
        words[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void xor_with(const BitVec &o) {
        for (size_t k = 0; k < words.size(); k++) {
            words[k] ^= o.words[k];
        }
    }
    bool any() const {
        for (uint64_t w : words) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool operator==(const BitVec &o) const = default;
};

/// Every record bit and every final observable sign of a Clifford circuit is
/// an affine function of its random measurement outcomes. Bit j of a
/// dependency vector refers to random_slots[j].
struct ReferenceModel {
    std::vector<uint32_t> random_slots;
    std::vector<uint8_t> is_random;
    /// Record with every random outcome set to 0.
    std::vector<uint8_t> baseline;
    std::vector<BitVec> slot_deps;
    /// 1 for a -1 sign in the all-zero run.
    std::vector<uint8_t> observable_baseline;
    std::vector<BitVec> observable_deps;
};

/// Throws std::logic_error when an observable is not determined at the end.
ReferenceModel build_reference_model(const Circuit &c, Variant v, const std::vector<PauliString> &observables);

/// Sets `dep` and `constant` to the affine form of the parity of `slots`.
void slot_parity_form(const ReferenceModel &m, const std::vector<uint32_t> &slots, BitVec &dep, bool &constant);

/// Paulis T_i with T_i anticommuting exactly with ops[i] among `ops`.
/// Throws std::invalid_argument when the ops are dependent.
std::vector<PauliString> symplectic_duals(const std::vector<PauliString> &ops);

/// Completes a protocol produced by a builder:
///  * each parity check gains the random slots needed to make it
///    deterministic and gets its predicate from the noiseless reference;
///  * all-equal checks are verified to be deterministic;
///  * CPauli corrections appended to the last moment bring the target code to
///    its +1 stabilizer eigenspace with logical Z = +1 (read from `main`
///    under Variant::Pi4) and logical X = +1 (read from `plus`, the same
///    circuit prepared with a logical |+> input).
/// Throws std::logic_error when the two circuits disagree on their random
/// measurements or a check cannot be made deterministic.
void finalize_protocol(Circuit &main, const Circuit *plus, const PlacedCode &target);

/// Noiseless stabilizer audit with random outcomes drawn from `seed`:
/// every check passes and every target stabilizer and `logical` read +1.
/// Returns human-readable problems, empty when clean.
std::vector<std::string> audit_noiseless(const Circuit &c, Variant v, const PlacedCode &target,
                                         const PauliString *logical, uint64_t seed, int runs);

}  // namespace zld

#endif
