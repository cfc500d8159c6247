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

#include <algorithm>
#include <stdexcept>

#include "zld/analysis.h"

namespace zld {

namespace detail {

namespace {

// Encoder CNOT layers. Pivots 0, 1, 2 start in |+>, 3, 5, 6 in |0> and the
// input sits on 4.
const int kEncoderLayers[5][3][2] = {
    {{2, 3}, {4, 5}, {-1, -1}},
    {{1, 2}, {3, 4}, {5, 6}},
    {{0, 1}, {2, 3}, {4, 5}},
    {{1, 2}, {3, 4}, {5, 6}},
    {{2, 3}, {4, 5}, {-1, -1}},
};

void add_encoder(CircuitBuilder &b, const uint32_t *d, size_t t0, bool plus_input) {
    b.prep_x(t0, d[4]);
    if (!plus_input) {
        b.gate1(t0 + 1, GateKind::Adg, d[4]);
    }
    b.prep_x(t0 + 1, d[2]);
    b.prep_z(t0 + 1, d[3]);
    b.prep_z(t0 + 1, d[5]);
    b.prep_x(t0 + 2, d[1]);
    b.prep_z(t0 + 2, d[6]);
    b.prep_x(t0 + 3, d[0]);
    for (int layer = 0; layer < 5; layer++) {
        for (const auto &pair : kEncoderLayers[layer]) {
            if (pair[0] >= 0) {
                b.cnot(t0 + 2 + (size_t)layer, d[pair[0]], d[pair[1]]);
            }
        }
    }
}

// Cat state grown outwards from the middle qubit in five moments.
void add_cat(CircuitBuilder &b, const uint32_t *k, size_t t0) {
    b.prep_x(t0, k[3]);
    b.prep_z(t0, k[2]);
    b.cnot(t0 + 1, k[3], k[2]);
    b.prep_z(t0 + 1, k[1]);
    b.prep_z(t0 + 1, k[4]);
    b.cnot(t0 + 2, k[3], k[4]);
    b.cnot(t0 + 2, k[2], k[1]);
    b.prep_z(t0 + 2, k[0]);
    b.prep_z(t0 + 2, k[5]);
    b.cnot(t0 + 3, k[4], k[5]);
    b.cnot(t0 + 3, k[1], k[0]);
    b.prep_z(t0 + 3, k[6]);
    b.cnot(t0 + 4, k[5], k[6]);
}

}  // namespace

Prefix add_prefix(CircuitBuilder &b, int row, bool plus_input, bool with_test) {
    Prefix p{};
    for (int k = 0; k < 7; k++) {
        p.data[k] = b.qubit(row, k, QubitRole::Data);
    }
    for (int k = 0; k < 7; k++) {
        p.cat[k] = b.qubit(row + 1, k, QubitRole::Ancilla);
    }
    add_encoder(b, p.data, 0, plus_input);
    p.end = 7;
    if (!with_test) {
        return p;
    }
    add_cat(b, p.cat, 3);
    for (int k = 0; k < 7; k++) {
        if (!plus_input) {
            b.gate1(7, GateKind::A, p.data[k]);
            b.cnot(8, p.cat[k], p.data[k]);
            b.gate1(9, GateKind::Adg, p.data[k]);
        }
        p.cat_slots[k] = b.meas_x(9, p.cat[k]);
    }
    b.check("hadamard-test", std::vector<uint32_t>(p.cat_slots, p.cat_slots + 7), CheckPredicate::ParityEven,
            kStageHadamardTest);
    p.end = 10;
    return p;
}

CodeSpec prefix_steane_code(const Circuit &c, const Prefix &p) {
    std::vector<GridQubit> pos;
    for (int k = 0; k < 7; k++) {
        pos.push_back(c.layout[p.data[k]]);
        pos.back().role = QubitRole::Data;
    }
    return steane_code_from_supports(pos, {{0, 1, 2, 3}, {1, 3, 4, 5}, {2, 3, 4, 6}}, {4, 5, 6});
}

namespace {

void shift_code(CodeSpec &code, int dr, int dc) {
    for (auto &q : code.layout) {
        q.row -= dr;
        q.col -= dc;
    }
}

// Renumbers record slots in (moment, gate) order.
void renumber_records(Circuit &c) {
    std::vector<uint32_t> map(c.record_len, 0);
    uint32_t next = 0;
    for (auto &m : c.moments) {
        for (auto &g : m.gates) {
            if (is_measurement(g.kind)) {
                map[(size_t)g.record] = next;
                g.record = (int32_t)next++;
            }
        }
    }
    for (auto &m : c.moments) {
        for (auto &g : m.gates) {
            for (auto &s : g.condition) {
                s = map[s];
            }
        }
    }
    for (auto &chk : c.checks) {
        for (auto &s : chk.slots) {
            s = map[s];
        }
        std::sort(chk.slots.begin(), chk.slots.end());
    }
}

}  // namespace

namespace {

uint32_t check_round(CircuitBuilder &b, GridQubit ancilla, const std::vector<GridQubit> &data, size_t t,
                     bool x_type, bool swapped) {
    static const int kWSNE[4][2] = {{0, -1}, {1, 0}, {-1, 0}, {0, 1}};
    static const int kWNSE[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
    const auto &dirs = x_type != swapped ? kWNSE : kWSNE;
    uint32_t a = b.qubit(ancilla.row, ancilla.col, QubitRole::Ancilla);
    if (x_type) {
        b.prep_x(t, a);
    } else {
        b.prep_z(t, a);
    }
    size_t used = 0;
    for (int k = 0; k < 4; k++) {
        GridQubit n{ancilla.row + dirs[k][0], ancilla.col + dirs[k][1], QubitRole::Data};
        if (std::find(data.begin(), data.end(), n) == data.end()) {
            continue;
        }
        uint32_t q = b.qubit(n.row, n.col);
        if (x_type) {
            b.cnot(t + 1 + (size_t)k, a, q);
        } else {
            b.cnot(t + 1 + (size_t)k, q, a);
        }
        used++;
    }
    if (used != data.size()) {
        throw std::logic_error("check ancilla " + qubit_text(ancilla) + " is not adjacent to all of its data");
    }
    return x_type ? b.meas_x(t + 5, a) : b.meas_z(t + 5, a);
}

}  // namespace

uint32_t z_check_round(CircuitBuilder &b, GridQubit ancilla, const std::vector<GridQubit> &data, size_t t,
                       bool swapped) {
    return check_round(b, ancilla, data, t, false, swapped);
}

uint32_t x_check_round(CircuitBuilder &b, GridQubit ancilla, const std::vector<GridQubit> &data, size_t t,
                       bool swapped) {
    return check_round(b, ancilla, data, t, true, swapped);
}

void teleport_body(CircuitBuilder &b, TeleportKind kind, bool plus_input, CodeSpec &target, CodeSpec &steane) {
    if (kind == TeleportKind::Rotated) {
        rotated_teleport_body(b, plus_input, target, steane);
    } else {
        planar_teleport_body(b, plus_input, target, steane);
    }
}

Protocol finish(std::string name, CircuitBuilder main_b, CircuitBuilder *plus_b, const CodeSpec &target,
                const CodeSpec &steane) {
    const auto &layout = main_b.peek().layout;
    int r0 = layout.at(0).row;
    int c0 = layout.at(0).col;
    for (const auto &q : layout) {
        r0 = std::min(r0, q.row);
        c0 = std::min(c0, q.col);
    }
    main_b.normalize_coordinates();
    Protocol p;
    p.name = std::move(name);
    p.circuit = main_b.build();
    renumber_records(p.circuit);
    Circuit plus;
    if (plus_b) {
        plus_b->normalize_coordinates();
        plus = plus_b->build();
        renumber_records(plus);
    }
    CodeSpec t = target;
    CodeSpec s = steane;
    shift_code(t, r0, c0);
    shift_code(s, r0, c0);
    p.target = place_code(t, p.circuit);
    p.steane = place_code(s, p.circuit);
    finalize_protocol(p.circuit, plus_b ? &plus : nullptr, p.target);
    auto problems = validate_circuit(p.circuit);
    if (!problems.empty()) {
        throw std::logic_error("protocol '" + p.name + "' fails validation: " + problems[0].kind + ": " +
                               problems[0].message);
    }
    return p;
}

std::vector<Plaquette> plaquettes_of_type(int d, GridQubit origin, bool want_x) {
    Placement at = diamond_placement(origin);
    std::vector<Plaquette> out;
    for (int a = -1; a < d; a++) {
        for (int b = -1; b < d; b++) {
            bool a_edge = a == -1 || a == d - 1;
            bool b_edge = b == -1 || b == d - 1;
            bool x_type = ((a + b) % 2 + 2) % 2 == 0;
            if (x_type != want_x || (a_edge && b_edge) || (x_type ? b_edge : a_edge)) {
                continue;
            }
            Plaquette p;
            p.center = diamond_plaquette_center(origin, a, b);
            for (int di = 0; di < 2; di++) {
                for (int dj = 0; dj < 2; dj++) {
                    int i = a + di;
                    int j = b + dj;
                    if (i >= 0 && i < d && j >= 0 && j < d) {
                        p.data.push_back(at(i, j));
                    }
                }
            }
            out.push_back(p);
        }
    }
    return out;
}


}  // namespace detail

Circuit build_steane_encode() {
    CircuitBuilder b;
    detail::add_prefix(b, 0, false, false);
    return b.build();
}

Circuit build_cat7() {
    CircuitBuilder b;
    uint32_t k[7];
    for (int j = 0; j < 7; j++) {
        k[j] = b.qubit(0, j, QubitRole::Ancilla);
    }
    detail::add_cat(b, k, 0);
    return b.build();
}

Circuit build_hadamard_test() {
    CircuitBuilder b;
    detail::add_prefix(b, 0, false, true);
    return b.build();
}

Protocol build_teleport(TeleportKind kind) {
    CircuitBuilder main_b;
    CircuitBuilder plus_b;
    CodeSpec target;
    CodeSpec steane;
    CodeSpec unused_target;
    CodeSpec unused_steane;
    detail::teleport_body(main_b, kind, false, target, steane);
    detail::teleport_body(plus_b, kind, true, unused_target, unused_steane);
    return detail::finish(kind == TeleportKind::Rotated ? "rotated" : "planar", std::move(main_b), &plus_b, target,
                          steane);
}

Protocol build_conversion() {
    CircuitBuilder main_b;
    CircuitBuilder plus_b;
    CodeSpec target;
    CodeSpec steane;
    CodeSpec unused_target;
    CodeSpec unused_steane;
    detail::conversion_body(main_b, false, target, steane);
    detail::conversion_body(plus_b, true, unused_target, unused_steane);
    return detail::finish("conversion", std::move(main_b), &plus_b, target, steane);
}

Protocol build_protocol(std::string_view name) {
    if (name == "rotated") {
        return build_teleport(TeleportKind::Rotated);
    }
    if (name == "planar") {
        return build_teleport(TeleportKind::Planar);
    }
    if (name == "conversion") {
        return build_conversion();
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

std::vector<std::string> protocol_names() {
    return {"rotated", "planar", "conversion"};
}

}  // namespace zld
