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

#include "zld/circuit.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zld {

std::string qubit_text(const GridQubit &q) {
    return "q(" + std::to_string(q.row) + "," + std::to_string(q.col) + ")";
}

bool is_measurement(GateKind k) {
    return k == GateKind::MeasZ || k == GateKind::MeasX;
}

bool is_preparation(GateKind k) {
    return k == GateKind::PrepZ || k == GateKind::PrepX;
}

bool is_single_qubit_unitary(GateKind k) {
    switch (k) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::A:
        case GateKind::Adg:
            return true;
        default:
            return false;
    }
}

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::PrepZ:
            return "PrepZ";
        case GateKind::PrepX:
            return "PrepX";
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "Sdg";
        case GateKind::A:
            return "A";
        case GateKind::Adg:
            return "Adg";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::MeasZ:
            return "MeasZ";
        case GateKind::MeasX:
            return "MeasX";
        case GateKind::CPauli:
            return "CPauli";
    }
    return "?";
}

bool evaluate_check(const AcceptanceCheck &check, const std::vector<uint8_t> &record) {
    if (check.predicate == CheckPredicate::AllEqual) {
        for (size_t k = 1; k < check.slots.size(); k++) {
            if (record[check.slots[k]] != record[check.slots[0]]) {
                return false;
            }
        }
        return true;
    }
    uint8_t parity = 0;
    for (uint32_t s : check.slots) {
        parity ^= record[s];
    }
    return parity == (check.predicate == CheckPredicate::ParityOdd ? 1 : 0);
}

uint32_t Circuit::find_qubit(int row, int col) const {
    for (size_t k = 0; k < layout.size(); k++) {
        if (layout[k].row == row && layout[k].col == col) {
            return (uint32_t)k;
        }
    }
    return kNoQubit;
}

std::vector<const AcceptanceCheck *> Circuit::checks_in_stage_order() const {
    std::vector<const AcceptanceCheck *> out;
    for (const auto &c : checks) {
        out.push_back(&c);
    }
    std::stable_sort(out.begin(), out.end(), [](const AcceptanceCheck *a, const AcceptanceCheck *b) {
        return a->stage < b->stage;
    });
    return out;
}

size_t depth(const Circuit &c) {
    return c.moments.size();
}

std::vector<Violation> validate_circuit(const Circuit &c) {
    std::vector<Violation> out;
    auto report = [&](int t, const char *kind, std::string msg) {
        out.push_back({t, kind, std::move(msg)});
    };

    std::set<std::pair<int, int>> coords;
    for (const auto &q : c.layout) {
        if (q.row < 0 || q.col < 0) {
            report(-1, "coordinate", qubit_text(q) + " has a negative coordinate");
        }
        if (!coords.insert({q.row, q.col}).second) {
            report(-1, "coordinate", qubit_text(q) + " appears twice in the layout");
        }
    }

    std::vector<int> written_at(c.record_len, -1);
    std::vector<uint8_t> live(c.num_qubits(), 0);
    auto valid_qubit = [&](uint32_t q) {
        return q < c.num_qubits();
    };

    for (size_t t = 0; t < c.moments.size(); t++) {
        int ti = (int)t;
        std::vector<uint8_t> used(c.num_qubits(), 0);
        for (const auto &g : c.moments[t].gates) {
            std::string name = gate_name(g.kind);
            if (!valid_qubit(g.q0) || (g.is_two_qubit() && !valid_qubit(g.q1))) {
                report(ti, "unknown-qubit", name + " refers to a qubit outside the layout");
                continue;
            }
            if (g.kind == GateKind::CPauli) {
                continue;
            }
            std::vector<uint32_t> qs{g.q0};
            if (g.is_two_qubit()) {
                qs.push_back(g.q1);
                if (g.q0 == g.q1) {
                    report(ti, "overlap", "CNOT with identical control and target");
                } else if (!adjacent(c.layout[g.q0], c.layout[g.q1])) {
                    report(ti, "adjacency",
                           "CNOT " + qubit_text(c.layout[g.q0]) + "," + qubit_text(c.layout[g.q1]) +
                               " joins qubits that are not nearest neighbours");
                }
            }
            for (uint32_t q : qs) {
                if (used[q]) {
                    report(ti, "overlap", qubit_text(c.layout[q]) + " is used by two gates in one moment");
                }
                used[q] = 1;
                if (!is_preparation(g.kind) && !live[q]) {
                    report(ti, "dead-qubit", name + " acts on " + qubit_text(c.layout[q]) + " before preparation");
                }
            }
            if (is_measurement(g.kind)) {
                if (g.record < 0 || (uint32_t)g.record >= c.record_len) {
                    report(ti, "record", name + " writes a slot outside the record");
                } else if (written_at[g.record] >= 0) {
                    report(ti, "record", "rec" + std::to_string(g.record) + " is written twice");
                } else {
                    written_at[g.record] = ti;
                }
            }
        }
        for (const auto &g : c.moments[t].gates) {
            if (g.kind == GateKind::CPauli && valid_qubit(g.q0)) {
                for (uint32_t s : g.condition) {
                    if (s >= c.record_len || written_at[s] < 0) {
                        report(ti, "unwritten-record", "CPauli on " + qubit_text(c.layout[g.q0]) + " reads rec" +
                                                           std::to_string(s) + " before it is written");
                    }
                }
                continue;
            }
            if (!valid_qubit(g.q0)) {
                continue;
            }
            if (is_preparation(g.kind)) {
                live[g.q0] = 1;
            } else if (is_measurement(g.kind)) {
                live[g.q0] = 0;
            }
        }
    }
    for (uint32_t s = 0; s < c.record_len; s++) {
        if (written_at[s] < 0) {
            report(-1, "record", "rec" + std::to_string(s) + " is never written");
        }
    }
    for (const auto &chk : c.checks) {
        for (uint32_t s : chk.slots) {
            if (s >= c.record_len || written_at[s] < 0) {
                report(-1, "unwritten-record", "check '" + chk.name + "' reads rec" + std::to_string(s) +
                                                   " which is never written");
            }
        }
    }
    return out;
}

uint32_t CircuitBuilder::qubit(int row, int col, QubitRole role) {
    auto it = index_.find({row, col});
    if (it != index_.end()) {
        return it->second;
    }
    uint32_t idx = (uint32_t)c_.layout.size();
    c_.layout.push_back({row, col, role});
    index_[{row, col}] = idx;
    return idx;
}

Moment &CircuitBuilder::at(size_t t) {
    if (c_.moments.size() <= t) {
        c_.moments.resize(t + 1);
    }
    return c_.moments[t];
}

void CircuitBuilder::prep_z(size_t t, uint32_t q) {
    gate1(t, GateKind::PrepZ, q);
}

void CircuitBuilder::prep_x(size_t t, uint32_t q) {
    gate1(t, GateKind::PrepX, q);
}

void CircuitBuilder::gate1(size_t t, GateKind k, uint32_t q) {
    Gate g;
    g.kind = k;
    g.q0 = q;
    at(t).gates.push_back(g);
}

void CircuitBuilder::cnot(size_t t, uint32_t control, uint32_t target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.q0 = control;
    g.q1 = target;
    at(t).gates.push_back(g);
}

uint32_t CircuitBuilder::meas_z(size_t t, uint32_t q) {
    Gate g;
    g.kind = GateKind::MeasZ;
    g.q0 = q;
    g.record = (int32_t)c_.record_len++;
    at(t).gates.push_back(g);
    return (uint32_t)g.record;
}

uint32_t CircuitBuilder::meas_x(size_t t, uint32_t q) {
    Gate g;
    g.kind = GateKind::MeasX;
    g.q0 = q;
    g.record = (int32_t)c_.record_len++;
    at(t).gates.push_back(g);
    return (uint32_t)g.record;
}

void CircuitBuilder::cpauli(size_t t, uint32_t q, char pauli, std::vector<uint32_t> condition) {
    Gate g;
    g.kind = GateKind::CPauli;
    g.q0 = q;
    g.pauli = pauli;
    g.condition = std::move(condition);
    at(t).gates.push_back(g);
}

void CircuitBuilder::check(std::string name, std::vector<uint32_t> slots, CheckPredicate pred, int stage) {
    c_.checks.push_back({std::move(name), std::move(slots), pred, stage});
}

void CircuitBuilder::normalize_coordinates() {
    if (c_.layout.empty()) {
        return;
    }
    int r0 = c_.layout[0].row;
    int c0 = c_.layout[0].col;
    for (const auto &q : c_.layout) {
        r0 = std::min(r0, q.row);
        c0 = std::min(c0, q.col);
    }
    index_.clear();
    for (size_t k = 0; k < c_.layout.size(); k++) {
        c_.layout[k].row -= r0;
        c_.layout[k].col -= c0;
        index_[{c_.layout[k].row, c_.layout[k].col}] = (uint32_t)k;
    }
}

Circuit CircuitBuilder::build() const {
    return c_;
}

}  // namespace zld
