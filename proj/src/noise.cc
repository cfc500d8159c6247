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

#include "zld/noise.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace zld {

std::vector<FaultLocation> enumerate_locations(const Circuit &c, const NoiseModel &m) {
    std::vector<FaultLocation> out;
    std::vector<uint8_t> live(c.num_qubits(), 0);
    for (size_t t = 0; t < c.moments.size(); t++) {
        const auto &gates = c.moments[t].gates;
        std::vector<uint8_t> touched(c.num_qubits(), 0);
        for (size_t g = 0; g < gates.size(); g++) {
            const Gate &gate = gates[g];
            if (gate.kind == GateKind::CPauli) {
                continue;
            }
            FaultLocation loc;
            loc.moment = (uint32_t)t;
            loc.gate = (uint32_t)g;
            loc.q0 = gate.q0;
            touched[gate.q0] = 1;
            bool keep = m.gate_noise;
            if (gate.is_two_qubit()) {
                loc.kind = LocationKind::Gate2;
                loc.q1 = gate.q1;
                touched[gate.q1] = 1;
            } else if (is_preparation(gate.kind)) {
                loc.kind = LocationKind::Prep;
                keep = m.prep_noise;
            } else if (is_measurement(gate.kind)) {
                loc.kind = LocationKind::Meas;
                keep = m.meas_noise;
            } else {
                loc.kind = LocationKind::Gate1;
            }
            if (keep) {
                out.push_back(loc);
            }
        }
        if (m.idle_noise) {
            for (uint32_t q = 0; q < c.num_qubits(); q++) {
                if (live[q] && !touched[q]) {
                    FaultLocation loc;
                    loc.moment = (uint32_t)t;
                    loc.kind = LocationKind::Idle;
                    loc.q0 = q;
                    out.push_back(loc);
                }
            }
        }
        for (const Gate &gate : gates) {
            if (gate.kind == GateKind::CPauli) {
                continue;
            }
            if (is_preparation(gate.kind)) {
                live[gate.q0] = 1;
            } else if (is_measurement(gate.kind)) {
                live[gate.q0] = 0;
            }
        }
    }
    return out;
}

namespace {

uint8_t random_pauli(const FaultLocation &loc, Rng &rng) {
    return (uint8_t)(1 + rng.below(loc.num_paulis()));
}

}  // namespace

FaultSample sample_faults(const std::vector<FaultLocation> &locs, const NoiseModel &m, Rng &rng) {
    FaultSample s;
    if (m.p <= 0 || locs.empty()) {
        return s;
    }
    if (m.p >= 1) {
        for (uint32_t k = 0; k < locs.size(); k++) {
            s.faults.push_back({k, random_pauli(locs[k], rng)});
        }
        return s;
    }
    // Geometric skipping: the gap to the next faulty location is
    // floor(log(u) / log(1 - p)).
    double inv_log = 1.0 / std::log1p(-m.p);
    double pos = 0;
    while (true) {
        double u = rng.uniform();
        double gap = std::floor(std::log(1.0 - u) * inv_log);
        pos += gap;
        if (pos >= (double)locs.size()) {
            break;
        }
        uint32_t k = (uint32_t)pos;
        s.faults.push_back({k, random_pauli(locs[k], rng)});
        pos += 1;
    }
    return s;
}

FaultSample sample_faults(const std::vector<FaultLocation> &locs, const NoiseModel &m, uint64_t seed) {
    Rng rng(seed);
    return sample_faults(locs, m, rng);
}

FaultSample sample_k_faults(const std::vector<FaultLocation> &locs, size_t k, Rng &rng) {
    if (k > locs.size()) {
        throw std::invalid_argument("sample_k_faults: k = " + std::to_string(k) + " exceeds the " +
                                    std::to_string(locs.size()) + " available locations");
    }
    std::vector<uint32_t> chosen;
    if (2 * k > locs.size()) {
        std::vector<uint32_t> all(locs.size());
        for (uint32_t j = 0; j < all.size(); j++) {
            all[j] = j;
        }
        for (size_t j = 0; j < k; j++) {
            size_t r = j + rng.below(all.size() - j);
            std::swap(all[j], all[r]);
        }
        chosen.assign(all.begin(), all.begin() + (ptrdiff_t)k);
    } else {
        while (chosen.size() < k) {
            uint32_t c = (uint32_t)rng.below(locs.size());
            if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) {
                chosen.push_back(c);
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    FaultSample s;
    for (uint32_t c : chosen) {
        s.faults.push_back({c, random_pauli(locs[c], rng)});
    }
    return s;
}

FaultSample sample_k_faults(const std::vector<FaultLocation> &locs, size_t k, uint64_t seed) {
    Rng rng(seed);
    return sample_k_faults(locs, k, rng);
}

std::string location_census_json(const Circuit &c, const std::vector<FaultLocation> &locs) {
    using nlohmann::json;
    size_t counts[5] = {0, 0, 0, 0, 0};
    std::vector<size_t> per_moment(c.moments.size(), 0);
    for (const auto &l : locs) {
        counts[(int)l.kind]++;
        per_moment[l.moment]++;
    }
    json j;
    j["total"] = locs.size();
    j["gate1"] = counts[(int)LocationKind::Gate1];
    j["gate2"] = counts[(int)LocationKind::Gate2];
    j["idle"] = counts[(int)LocationKind::Idle];
    j["prep"] = counts[(int)LocationKind::Prep];
    j["meas"] = counts[(int)LocationKind::Meas];
    j["per_moment"] = per_moment;
    return j.dump();
}

}  // namespace zld
