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

#include <cmath>

#include "doctest.h"
#include "zld/noise.h"
#include "zld/protocols.h"
#include "zld/rng.h"

using namespace zld;

TEST_CASE("every gate, prep, measurement and idle gets a location") {
    CircuitBuilder b;
    uint32_t a = b.qubit(0, 0);
    uint32_t c = b.qubit(0, 1);
    b.prep_z(0, a);
    b.prep_z(0, c);
    b.gate1(1, GateKind::H, a);
    b.cnot(2, a, c);
    b.meas_z(3, a);
    b.meas_z(3, c);
    Circuit circ = b.build();
    auto locs = enumerate_locations(circ, NoiseModel{});
    size_t counts[5] = {};
    for (const auto &l : locs) {
        counts[(int)l.kind]++;
    }
    CHECK(counts[(int)LocationKind::Prep] == 2);
    CHECK(counts[(int)LocationKind::Meas] == 2);
    CHECK(counts[(int)LocationKind::Gate1] == 1);
    CHECK(counts[(int)LocationKind::Gate2] == 1);
    // Qubit c idles while a takes the Hadamard.
    CHECK(counts[(int)LocationKind::Idle] == 1);
}

TEST_CASE("fault sampling is deterministic and has the right rate") {
    Protocol p = build_protocol("rotated");
    auto locs = enumerate_locations(p.circuit, NoiseModel{});
    NoiseModel m;
    m.p = 1e-2;
    size_t total = 0;
    const int shots = 4000;
    for (int s = 0; s < shots; s++) {
        FaultSample f = sample_faults(locs, m, shot_seed(9, s));
        FaultSample g = sample_faults(locs, m, shot_seed(9, s));
        REQUIRE(f.faults.size() == g.faults.size());
        for (const Fault &x : f.faults) {
            CHECK(x.pauli >= 1);
            CHECK(x.pauli <= locs[x.location].num_paulis());
        }
        total += f.faults.size();
    }
    double mean = (double)total / shots;
    double expect = m.p * (double)locs.size();
    CHECK(std::abs(mean - expect) < 5 * std::sqrt(expect / shots));
}

TEST_CASE("k-fault samples hit k distinct locations") {
    Protocol p = build_protocol("conversion");
    auto locs = enumerate_locations(p.circuit, NoiseModel{});
    for (uint64_t s = 0; s < 200; s++) {
        FaultSample f = sample_k_faults(locs, 2, s);
        REQUIRE(f.faults.size() == 2);
        CHECK(f.faults[0].location != f.faults[1].location);
    }
}

TEST_CASE("two-qubit Paulis are uniform over 15") {
    CircuitBuilder b;
    uint32_t a = b.qubit(0, 0);
    uint32_t c = b.qubit(0, 1);
    b.cnot(0, a, c);
    auto locs = enumerate_locations(b.build(), NoiseModel{});
    std::vector<uint32_t> only_gate;
    for (uint32_t k = 0; k < locs.size(); k++) {
        if (locs[k].kind == LocationKind::Gate2) {
            only_gate.push_back(k);
        }
    }
    REQUIRE(only_gate.size() == 1);
    std::vector<FaultLocation> one{locs[only_gate[0]]};
    int hist[16] = {};
    for (uint64_t s = 0; s < 15000; s++) {
        FaultSample f = sample_k_faults(one, 1, s);
        hist[f.faults[0].pauli]++;
    }
    CHECK(hist[0] == 0);
    for (int k = 1; k < 16; k++) {
        CHECK(std::abs(hist[k] - 1000) < 150);
    }
}
