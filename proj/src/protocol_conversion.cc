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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zld/protocols.h"

namespace zld {
namespace detail {

namespace {

bool same_site(GridQubit a, GridQubit b) {
    return a.row == b.row && a.col == b.col;
}

const Plaquette &plaquette_at(const std::vector<Plaquette> &ps, int row, int col) {
    for (const auto &p : ps) {
        if (same_site(p.center, GridQubit{row, col, QubitRole::Ancilla})) {
            return p;
        }
    }
    throw std::logic_error("no plaquette at (" + std::to_string(row) + "," + std::to_string(col) + ")");
}

}  // namespace

void conversion_body(CircuitBuilder &b, bool plus_input, CodeSpec &target, CodeSpec &steane) {
    Prefix p = add_prefix(b, 0, plus_input, true);
    steane = prefix_steane_code(b.peek(), p);
    const uint32_t *D = p.data;
    const uint32_t *K = p.cat;
    uint32_t U[7];
    for (int k = 1; k <= 6; k++) {
        U[k] = b.qubit(-1, k, QubitRole::Ancilla);
    }

    // Z on {2,3,4,6}: one carrier per data qubit, folded into U4.
    for (int k : {2, 3, 4, 5, 6}) {
        b.prep_z(9, U[k]);
    }
    for (int k : {2, 3, 4, 6}) {
        b.cnot(10, D[k], U[k]);
    }
    b.cnot(11, U[2], U[3]);
    b.cnot(11, U[6], U[5]);
    b.cnot(12, U[3], U[4]);
    b.cnot(13, U[5], U[4]);
    b.meas_x(12, U[2]);
    b.meas_x(12, U[6]);
    b.meas_x(13, U[3]);
    b.meas_x(14, U[5]);
    uint32_t zc = b.meas_z(14, U[4]);

    // X on {2,3,4} through the cat row, collected in K4. Together with the
    // X readout of q6 it gives the stabilizer on {2,3,4,6}.
    for (int k : {2, 3, 4}) {
        b.prep_x(10, K[k]);
        b.cnot(11, K[k], D[k]);
    }
    b.cnot(12, K[3], K[2]);
    b.cnot(13, K[4], K[3]);
    b.meas_z(13, K[2]);
    b.meas_z(14, K[3]);
    uint32_t xc = b.meas_x(14, K[4]);
    uint32_t x6 = b.meas_x(11, D[6]);

    // Moves into the rotated patch. q1 goes through (1,1).
    b.prep_z(10, K[1]);
    b.cnot(11, D[1], K[1]);
    b.meas_x(12, D[1]);
    b.prep_z(14, K[2]);
    b.cnot(15, K[1], K[2]);
    b.meas_x(16, K[1]);
    b.prep_z(13, D[1]);
    b.cnot(14, D[0], D[1]);
    b.meas_x(15, D[0]);
    b.prep_z(13, U[2]);
    b.cnot(14, D[2], U[2]);
    b.meas_x(15, D[2]);
    b.prep_z(16, K[4]);
    b.cnot(17, D[4], K[4]);
    b.meas_x(18, D[4]);

    GridQubit origin{0, 1, QubitRole::Data};
    target = rotated_surface_code(3, diamond_placement(origin));
    const uint32_t moved[6] = {D[1], K[2], U[2], D[3], K[4], D[5]};
    for (const auto &q : target.layout) {
        uint32_t id = b.qubit(q.row, q.col, QubitRole::Data);
        if (std::find(moved, moved + 6, id) == moved + 6) {
            b.prep_x(17, id);
        }
    }

    std::vector<Plaquette> zs = plaquettes_of_type(3, origin, false);
    std::vector<Plaquette> xs = plaquettes_of_type(3, origin, true);
    std::vector<std::vector<uint32_t>> z_rounds(zs.size());
    std::vector<std::vector<uint32_t>> x_rounds(xs.size());
    for (size_t t : {18, 24}) {
        for (size_t k = 0; k < zs.size(); k++) {
            z_rounds[k].push_back(z_check_round(b, zs[k].center, zs[k].data, t, true));
        }
    }
    // Z on {0,1,2,3} at the centre of the first-round-random X plaquette.
    const Plaquette &xa = plaquette_at(xs, 0, 2);
    uint32_t za = z_check_round(b, xa.center, xa.data, 24, true);
    for (size_t t : {30, 36}) {
        for (size_t k = 0; k < xs.size(); k++) {
            x_rounds[k].push_back(x_check_round(b, xs[k].center, xs[k].data, t, true));
        }
    }
    auto round_one = [&](const std::vector<Plaquette> &ps, const std::vector<std::vector<uint32_t>> &r, int row,
                         int col) {
        const Plaquette &pl = plaquette_at(ps, row, col);
        return r[&pl - ps.data()][0];
    };

    b.check("steane-z-0", {zc}, CheckPredicate::ParityEven, kStageSyndrome);
    b.check("steane-x-0", {xc, x6}, CheckPredicate::ParityEven, kStageSyndrome);
    b.check("convert-z-pair", {round_one(zs, z_rounds, -1, 1), round_one(zs, z_rounds, 1, 5)},
            CheckPredicate::ParityEven, kStageReadout);
    b.check("convert-z-face", {za}, CheckPredicate::ParityEven, kStageReadout);
    b.check("convert-x-pair", {round_one(xs, x_rounds, 2, 2), round_one(xs, x_rounds, 0, 4)},
            CheckPredicate::ParityEven, kStageReadout);
    b.check("convert-x-face", {round_one(xs, x_rounds, 0, 2)}, CheckPredicate::ParityEven, kStageReadout);
    b.check("convert-x-fresh", {round_one(xs, x_rounds, -2, 4)}, CheckPredicate::ParityEven, kStageReadout);
    for (size_t k = 0; k < zs.size(); k++) {
        b.check("surface-z-" + std::to_string(k), z_rounds[k], CheckPredicate::AllEqual, kStageReadout);
    }
    for (size_t k = 0; k < xs.size(); k++) {
        b.check("surface-x-" + std::to_string(k), x_rounds[k], CheckPredicate::AllEqual, kStageReadout);
    }
}

}  // namespace detail
}  // namespace zld
