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

namespace {

struct Check {
    GridQubit center;
    std::vector<GridQubit> data;
    bool x_type;
};

std::vector<Check> planar_checks(int d, GridQubit origin) {
    int w = 2 * d - 1;
    std::vector<Check> out;
    for (int r = 0; r < w; r++) {
        for (int c = 0; c < w; c++) {
            if ((r + c) % 2 == 0) {
                continue;
            }
            Check k;
            k.center = {origin.row + r, origin.col + c, QubitRole::Ancilla};
            k.x_type = r % 2 == 0;
            const int dr[4] = {-1, 1, 0, 0};
            const int dc[4] = {0, 0, -1, 1};
            for (int m = 0; m < 4; m++) {
                int rr = r + dr[m];
                int cc = c + dc[m];
                if (rr >= 0 && rr < w && cc >= 0 && cc < w) {
                    k.data.push_back({origin.row + rr, origin.col + cc, QubitRole::Data});
                }
            }
            out.push_back(k);
        }
    }
    return out;
}

// Weight-two Z check: prep at t, CNOTs at t1 and t2, measurement after.
uint32_t z_pair(CircuitBuilder &b, uint32_t anc, uint32_t first, uint32_t second, size_t t, size_t t1, size_t t2) {
    b.prep_z(t, anc);
    b.cnot(t1, first, anc);
    b.cnot(t2, second, anc);
    return b.meas_z(t2 + 1, anc);
}

}  // namespace

void planar_teleport_body(CircuitBuilder &b, bool plus_input, CodeSpec &target, CodeSpec &steane) {
    Prefix p = add_prefix(b, 0, plus_input, true);
    steane = prefix_steane_code(b.peek(), p);
    const uint32_t *D = p.data;
    const uint32_t *K = p.cat;

    // The logical line {4, 5, 6} is moved to s0, s1, s2.
    uint32_t s0 = b.qubit(-1, 4);
    uint32_t s1 = D[5];
    uint32_t s2 = b.qubit(-1, 6);
    b.prep_z(9, s0);
    b.prep_z(9, s2);
    b.cnot(10, D[4], s0);
    b.cnot(10, D[6], s2);
    b.meas_x(11, D[4]);
    b.meas_x(11, D[6]);

    // Planar patch above the Steane row in |+>; its bottom row u0, u1, u2
    // meets the line through three weight-two faces.
    GridQubit origin{-6, 3, QubitRole::Data};
    target = planar_surface_code(3, origin);
    for (const auto &q : target.layout) {
        b.prep_x(5, b.qubit(q.row, q.col, QubitRole::Data));
    }
    uint32_t u0 = b.qubit(-2, 3);
    uint32_t u1 = b.qubit(-2, 5);
    uint32_t u2 = b.qubit(-2, 7);

    std::vector<std::vector<uint32_t>> z_rounds;
    std::vector<std::vector<uint32_t>> x_rounds;
    std::vector<uint32_t> bottom_x;
    for (const auto &chk : planar_checks(3, origin)) {
        if (!chk.x_type) {
            z_rounds.emplace_back();
            for (size_t t : {5, 11, 17}) {
                z_rounds.back().push_back(z_check_round(b, chk.center, chk.data, t));
            }
        } else if (chk.center.row == -2) {
            bottom_x.push_back(x_check_round(b, chk.center, chk.data, 17));
        } else {
            x_rounds.emplace_back();
            for (size_t t : {5, 11, 17}) {
                x_rounds.back().push_back(x_check_round(b, chk.center, chk.data, t));
            }
        }
    }

    uint32_t fa0 = b.qubit(-2, 4, QubitRole::Ancilla);
    uint32_t fa1 = b.qubit(-1, 5, QubitRole::Ancilla);
    uint32_t fa2 = b.qubit(-1, 7, QubitRole::Ancilla);
    std::vector<uint32_t> f0 = {z_pair(b, fa0, u0, s0, 9, 10, 11), z_pair(b, fa0, u0, s0, 13, 14, 15)};
    std::vector<uint32_t> f1 = {z_pair(b, fa1, s1, u1, 10, 11, 12), z_pair(b, fa1, s1, u1, 14, 15, 16)};
    std::vector<uint32_t> f2 = {z_pair(b, fa2, s2, u2, 10, 11, 12), z_pair(b, fa2, s2, u2, 14, 15, 16)};

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

    // K row carries D1+D3 to C4 and D1+D2 on to C6.
    for (int k = 1; k <= 6; k++) {
        b.prep_z(10, K[k]);
    }
    b.cnot(11, D[1], K[1]);
    b.cnot(11, D[3], K[3]);
    b.cnot(12, K[1], K[2]);
    b.cnot(13, K[2], K[3]);
    b.cnot(14, K[3], K[4]);
    b.cnot(14, D[2], K[2]);
    b.cnot(15, K[2], K[3]);
    b.cnot(16, K[3], K[4]);
    b.cnot(17, K[4], K[5]);
    b.cnot(18, K[5], K[6]);
    b.meas_x(13, K[1]);
    b.meas_x(16, K[2]);
    b.meas_x(17, K[3]);
    b.meas_x(18, K[4]);
    b.meas_x(19, K[5]);

    uint32_t C4 = D[4];
    b.prep_z(12, C4);
    b.cnot(13, s0, C4);
    b.cnot(14, s1, C4);
    b.cnot(15, K[4], C4);
    uint32_t syn1 = b.meas_z(16, C4);

    uint32_t C6 = D[6];
    b.prep_z(12, C6);
    b.cnot(13, s1, C6);
    b.cnot(14, s2, C6);
    b.cnot(19, K[6], C6);
    b.meas_x(20, K[6]);
    uint32_t syn2 = b.meas_z(20, C6);

    uint32_t x[7];
    x[0] = b.meas_x(13, D[0]);
    x[1] = b.meas_x(13, D[1]);
    x[3] = b.meas_x(13, D[3]);
    x[2] = b.meas_x(15, D[2]);
    x[4] = b.meas_x(16, s0);
    x[5] = b.meas_x(16, s1);
    x[6] = b.meas_x(16, s2);

    b.check("steane-z-0", {syn0}, CheckPredicate::ParityEven, kStageSyndrome);
    b.check("steane-z-1", {syn1}, CheckPredicate::ParityEven, kStageSyndrome);
    b.check("steane-z-2", {syn2}, CheckPredicate::ParityEven, kStageSyndrome);
    for (size_t k = 0; k < z_rounds.size(); k++) {
        b.check("surface-z-" + std::to_string(k), z_rounds[k], CheckPredicate::AllEqual, kStageSyndrome);
    }
    for (size_t k = 0; k < x_rounds.size(); k++) {
        b.check("surface-x-" + std::to_string(k), {x_rounds[k][0]}, CheckPredicate::ParityEven, kStageSyndrome);
        b.check("surface-x-rounds-" + std::to_string(k), x_rounds[k], CheckPredicate::AllEqual, kStageSyndrome);
    }
    b.check("merge-face-0", f0, CheckPredicate::AllEqual, kStageSyndrome);
    b.check("merge-face-1", f1, CheckPredicate::AllEqual, kStageSyndrome);
    b.check("merge-face-2", f2, CheckPredicate::AllEqual, kStageSyndrome);

    // Generators meeting the faces are checked with the bottom X checks
    // of the last round: {1,3,4,5} with (-2,4), {2,3,4,6} with both.
    const int supports[3][4] = {{0, 1, 2, 3}, {1, 3, 4, 5}, {2, 3, 4, 6}};
    for (int g = 0; g < 3; g++) {
        std::vector<uint32_t> slots;
        for (int q : supports[g]) {
            slots.push_back(x[q]);
        }
        if (g >= 1) {
            slots.push_back(bottom_x[0]);
        }
        if (g == 2) {
            slots.push_back(bottom_x[1]);
        }
        b.check("steane-x-" + std::to_string(g), slots, CheckPredicate::ParityEven, kStageReadout);
    }
    (void)u0;
    (void)u1;
    (void)u2;
}

}  // namespace detail
}  // namespace zld
