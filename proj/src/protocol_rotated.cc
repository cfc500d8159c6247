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

#include "zld/protocols.h"

namespace zld {
namespace detail {

void rotated_teleport_body(CircuitBuilder &b, bool plus_input, CodeSpec &target, CodeSpec &steane) {
    Prefix p = add_prefix(b, 0, plus_input, true);
    steane = prefix_steane_code(b.peek(), p);
    const uint32_t *D = p.data;
    const uint32_t *K = p.cat;

    // The logical line {4, 5, 6} is moved onto the staircase s0, s1, s2.
    uint32_t s0 = b.qubit(-1, 4);
    uint32_t s1 = D[5];
    uint32_t s2 = K[6];
    b.prep_z(9, s0);
    b.cnot(10, D[4], s0);
    uint32_t move4 = b.meas_x(11, D[4]);
    b.prep_z(10, s2);
    b.cnot(11, D[6], s2);
    uint32_t move6 = b.meas_x(12, D[6]);
    (void)move4;
    (void)move6;

    // Surface patch in |+>, Z plaquettes measured in three rounds.
    GridQubit origin{-2, 5, QubitRole::Data};
    target = rotated_surface_code(3, diamond_placement(origin));
    for (const auto &q : target.layout) {
        b.prep_x(6, b.qubit(q.row, q.col, QubitRole::Data));
    }
    std::vector<Plaquette> plaquettes = plaquettes_of_type(3, origin, false);
    std::vector<std::vector<uint32_t>> rounds(plaquettes.size());
    for (size_t t : {6, 12, 18}) {
        for (size_t k = 0; k < plaquettes.size(); k++) {
            rounds[k].push_back(z_check_round(b, plaquettes[k].center, plaquettes[k].data, t));
        }
    }

    // X plaquettes commuting with both merge faces, every round. The one
    // whose ancilla site is still a Steane qubit is handled after the split.
    std::vector<std::vector<uint32_t>> x_rounds;
    for (const auto &pl : plaquettes_of_type(3, origin, true)) {
        if (b.peek().find_qubit(pl.center.row, pl.center.col) != kNoQubit) {
            continue;
        }
        x_rounds.emplace_back();
        for (size_t t : {6, 12, 18}) {
            x_rounds.back().push_back(x_check_round(b, pl.center, pl.data, t));
        }
    }

    // Merge faces: Z_s0 Z_s1 Z_u0 Z_u1 and Z_s2 Z_u2.
    Placement at = diamond_placement(origin);
    std::vector<GridQubit> face_a = {b.peek().layout[s0], b.peek().layout[s1], at(0, 0), at(0, 1)};
    std::vector<GridQubit> face_b = {b.peek().layout[s2], at(0, 2)};
    GridQubit anc_a{-1, 5, QubitRole::Ancilla};
    GridQubit anc_b{1, 7, QubitRole::Ancilla};
    std::vector<uint32_t> fa;
    std::vector<uint32_t> fb;
    for (size_t t : {12, 18}) {
        fa.push_back(z_check_round(b, anc_a, face_a, t));
        fb.push_back(z_check_round(b, anc_b, face_b, t));
    }

    // Steane Z syndrome. U row: {0,1,2,3}.
    uint32_t U[4];
    for (int k = 0; k < 4; k++) {
        U[k] = b.qubit(-1, k, QubitRole::Ancilla);
        b.prep_z(11, U[k]);
        b.cnot(12, D[k], U[k]);
    }
    b.cnot(13, U[0], U[1]);
    b.cnot(13, U[3], U[2]);
    b.cnot(14, U[1], U[2]);
    uint32_t syn0 = b.meas_z(15, U[2]);
    b.meas_x(14, U[0]);
    b.meas_x(14, U[3]);
    b.meas_x(15, U[1]);

    // K row carries D1+D3 to the collector C4 and D1+D2 to K5.
    for (int k = 1; k <= 5; k++) {
        b.prep_z(10, K[k]);
    }
    b.cnot(11, D[1], K[1]);
    b.cnot(11, D[3], K[3]);
    b.cnot(12, K[1], K[2]);
    b.cnot(13, K[2], K[3]);
    b.cnot(14, K[3], K[4]);
    b.cnot(14, D[2], K[2]);
    b.cnot(16, K[3], K[4]);
    b.cnot(15, K[2], K[3]);
    b.cnot(17, K[4], K[5]);
    b.meas_x(13, K[1]);
    b.meas_x(16, K[2]);
    b.meas_x(17, K[3]);
    b.meas_x(18, K[4]);

    // C4 on the vacated (0,4): {1,3,4,5}.
    uint32_t C4 = D[4];
    b.prep_z(12, C4);
    b.cnot(14, s0, C4);
    b.cnot(15, K[4], C4);
    b.cnot(16, s1, C4);
    uint32_t syn1 = b.meas_z(17, C4);

    // K5: {1,2,5,6}.
    b.cnot(14, s2, K[5]);
    b.cnot(15, s1, K[5]);
    uint32_t syn2 = b.meas_z(18, K[5]);

    // Split: every Steane qubit is read out in X.
    uint32_t x[7];
    x[0] = b.meas_x(13, D[0]);
    x[1] = b.meas_x(13, D[1]);
    x[3] = b.meas_x(13, D[3]);
    x[2] = b.meas_x(15, D[2]);
    x[4] = b.meas_x(20, s0);
    x[6] = b.meas_x(20, s2);
    x[5] = b.meas_x(21, s1);

    // The generator {2,3,4,6} anticommutes with both faces; it is checked
    // together with the surface X edge on u1, u2 after the split.
    uint32_t edge = D[6];
    b.prep_x(21, edge);
    b.cnot(22, edge, b.qubit(at(0, 2).row, at(0, 2).col));
    b.cnot(23, edge, b.qubit(at(0, 1).row, at(0, 1).col));
    uint32_t merged_x = b.meas_x(24, edge);

    b.check("steane-z-0", {syn0}, CheckPredicate::ParityEven, kStageSyndrome);
    b.check("steane-z-1", {syn1}, CheckPredicate::ParityEven, kStageSyndrome);
    b.check("steane-z-2", {syn2}, CheckPredicate::ParityEven, kStageSyndrome);
    for (size_t k = 0; k < plaquettes.size(); k++) {
        b.check("surface-z-" + std::to_string(k), rounds[k], CheckPredicate::AllEqual, kStageSyndrome);
    }
    for (size_t k = 0; k < x_rounds.size(); k++) {
        b.check("surface-x-" + std::to_string(k), {x_rounds[k][0]}, CheckPredicate::ParityEven, kStageSyndrome);
        b.check("surface-x-rounds-" + std::to_string(k), x_rounds[k], CheckPredicate::AllEqual, kStageSyndrome);
    }
    b.check("merge-face-0", fa, CheckPredicate::AllEqual, kStageSyndrome);
    b.check("merge-face-1", fb, CheckPredicate::AllEqual, kStageSyndrome);
    const int supports[3][4] = {{0, 1, 2, 3}, {1, 3, 4, 5}, {2, 3, 4, 6}};
    for (int g = 0; g < 3; g++) {
        std::vector<uint32_t> slots;
        for (int q : supports[g]) {
            slots.push_back(x[q]);
        }
        if (g == 2) {
            slots.push_back(merged_x);
        }
        b.check("steane-x-" + std::to_string(g), slots, CheckPredicate::ParityEven, kStageReadout);
    }
}

}  // namespace detail
}  // namespace zld
