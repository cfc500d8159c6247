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

#ifndef ZLD_NOISE_H
#define ZLD_NOISE_H

#include <cstdint>
#include <string>
#include <vector>

#include "zld/circuit.h"
#include "zld/rng.h"

namespace zld {

/// Circuit-level depolarizing noise. Each flag toggles one family of
/// locations; all are on by default.
struct NoiseModel {
    double p = 0;
    bool gate_noise = true;
    bool idle_noise = true;
    bool prep_noise = true;
    bool meas_noise = true;
};

enum class LocationKind : uint8_t { Gate1, Gate2, Idle, Prep, Meas };

/// A place where a Pauli fault can occur. Meas faults act just before the
/// measurement; all others act just after their moment's gate.
struct FaultLocation {
    uint32_t moment = 0;
    LocationKind kind = LocationKind::Idle;
    uint32_t gate = UINT32_MAX;
    uint32_t q0 = kNoQubit;
    uint32_t q1 = kNoQubit;

    bool two_qubit() const {
        return kind == LocationKind::Gate2;
    }
    /// Number of non-identity Paulis at this location: 3 or 15.
    uint32_t num_paulis() const {
        return two_qubit() ? 15 : 3;
    }
};

/// Pauli code: letters 0=I 1=X 2=Y 3=Z. One-qubit faults use 1..3; two-qubit
/// faults use a + 4*b (a on q0, b on q1) for the 15 non-identity pairs.
struct Fault {
    uint32_t location = 0;
    uint8_t pauli = 0;
};

struct FaultSample {
    std::vector<Fault> faults;
    bool empty() const {
        return faults.empty();
    }
};

inline char pauli_letter(uint8_t code) {
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    return letters[code & 3];
}

/// Ordered by moment; within a moment gate locations in gate order, then
/// idle qubits by index.
std::vector<FaultLocation> enumerate_locations(const Circuit &c, const NoiseModel &m);

FaultSample sample_faults(const std::vector<FaultLocation> &locs, const NoiseModel &m, Rng &rng);
FaultSample sample_faults(const std::vector<FaultLocation> &locs, const NoiseModel &m, uint64_t seed);

/// Uniform k-subset of locations with uniform non-identity Paulis. Throws
/// std::invalid_argument when k exceeds the number of locations.
FaultSample sample_k_faults(const std::vector<FaultLocation> &locs, size_t k, Rng &rng);
FaultSample sample_k_faults(const std::vector<FaultLocation> &locs, size_t k, uint64_t seed);

/// Counts of each location kind plus per-moment totals, as JSON.
std::string location_census_json(const Circuit &c, const std::vector<FaultLocation> &locs);

}  // namespace zld

#endif
