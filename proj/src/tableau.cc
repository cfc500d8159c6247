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

#include "zld/tableau.h"

#include <stdexcept>

namespace zld {

Tableau::Tableau(size_t num_qubits) : n_(num_qubits), rows_(2 * num_qubits, PauliString(num_qubits)) {
    for (size_t k = 0; k < n_; k++) {
        rows_[k].set_x(k, true);
        rows_[n_ + k].set_z(k, true);
    }
}

void Tableau::h(size_t q) {
    for (auto &r : rows_) {
        bool x = r.x(q);
        bool z = r.z(q);
        r.set_negative(r.negative() ^ (x & z));
        r.set_x(q, z);
        r.set_z(q, x);
    }
}

void Tableau::s(size_t q) {
    for (auto &r : rows_) {
        bool x = r.x(q);
        bool z = r.z(q);
        r.set_negative(r.negative() ^ (x & z));
        r.set_z(q, z ^ x);
    }
}

void Tableau::sdg(size_t q) {
    for (auto &r : rows_) {
        bool x = r.x(q);
        bool z = r.z(q);
        r.set_negative(r.negative() ^ (x & !z));
        r.set_z(q, z ^ x);
    }
}

void Tableau::x(size_t q) {
    for (auto &r : rows_) {
        r.set_negative(r.negative() ^ r.z(q));
    }
}

void Tableau::y(size_t q) {
    for (auto &r : rows_) {
        r.set_negative(r.negative() ^ r.x(q) ^ r.z(q));
    }
}

void Tableau::z(size_t q) {
    for (auto &r : rows_) {
        r.set_negative(r.negative() ^ r.x(q));
    }
}

void Tableau::sqrt_y(size_t q) {
    for (auto &r : rows_) {
        bool x = r.x(q);
        bool z = r.z(q);
        r.set_negative(r.negative() ^ (x & !z));
        r.set_x(q, z);
        r.set_z(q, x);
    }
}

void Tableau::sqrt_y_dag(size_t q) {
    for (auto &r : rows_) {
        bool x = r.x(q);
        bool z = r.z(q);
        r.set_negative(r.negative() ^ (z & !x));
        r.set_x(q, z);
        r.set_z(q, x);
    }
}

void Tableau::cnot(size_t c, size_t t) {
    for (auto &r : rows_) {
        bool xc = r.x(c);
        bool zc = r.z(c);
        bool xt = r.x(t);
        bool zt = r.z(t);
        r.set_negative(r.negative() ^ (xc & zt & !(xt ^ zc)));
        r.set_x(t, xt ^ xc);
        r.set_z(c, zc ^ zt);
    }
}

Tableau::Outcome Tableau::measure_z(size_t q, int forced, Rng *rng) {
    size_t p = 2 * n_;
    for (size_t k = n_; k < 2 * n_; k++) {
        if (rows_[k].x(q)) {
            p = k;
            break;
        }
    }
    Outcome out;
    if (p < 2 * n_) {
        out.random = true;
        out.value = forced >= 0 ? forced != 0 : rng->coin();
        for (size_t k = 0; k < 2 * n_; k++) {
            if (k != p && rows_[k].x(q)) {
                rows_[k].mul_inplace(rows_[p]);
            }
        }
        rows_[p - n_] = rows_[p];
        rows_[p] = PauliString::single(n_, q, 'Z');
        rows_[p].set_negative(out.value);
        return out;
    }
    PauliString acc(n_);
    for (size_t k = 0; k < n_; k++) {
        if (rows_[k].x(q)) {
            acc.mul_inplace(rows_[n_ + k]);
        }
    }
    out.value = acc.negative();
    return out;
}

Tableau::Outcome Tableau::measure_x(size_t q, int forced, Rng *rng) {
    h(q);
    Outcome out = measure_z(q, forced, rng);
    h(q);
    return out;
}

void Tableau::reset_z(size_t q, Rng *rng) {
    Outcome o = measure_z(q, 0, rng);
    if (o.value) {
        x(q);
    }
}

void Tableau::reset_x(size_t q, Rng *rng) {
    Outcome o = measure_x(q, 0, rng);
    if (o.value) {
        z(q);
    }
}

int Tableau::peek(const PauliString &obs) const {
    for (size_t k = n_; k < 2 * n_; k++) {
        if (!commutes(rows_[k], obs)) {
            return 0;
        }
    }
    PauliString acc(n_);
    for (size_t k = 0; k < n_; k++) {
        if (!commutes(rows_[k], obs)) {
            acc.mul_inplace(rows_[n_ + k]);
        }
    }
    return acc.negative() == obs.negative() ? 1 : -1;
}

void apply_clifford_gate(Tableau &t, const Gate &g, Variant v) {
    switch (g.kind) {
        case GateKind::H:
            t.h(g.q0);
            break;
        case GateKind::X:
            t.x(g.q0);
            break;
        case GateKind::Y:
            t.y(g.q0);
            break;
        case GateKind::Z:
            t.z(g.q0);
            break;
        case GateKind::S:
            t.s(g.q0);
            break;
        case GateKind::Sdg:
            t.sdg(g.q0);
            break;
        case GateKind::A:
        case GateKind::Adg:
            if (v != Variant::Pi4) {
                throw std::invalid_argument("non-Clifford gate A encountered by the stabilizer backend");
            }
            if (g.kind == GateKind::A) {
                t.sqrt_y(g.q0);
            } else {
                t.sqrt_y_dag(g.q0);
            }
            break;
        case GateKind::CNOT:
            t.cnot(g.q0, g.q1);
            break;
        default:
            throw std::invalid_argument(std::string("apply_clifford_gate cannot apply ") + gate_name(g.kind));
    }
}

namespace {

void apply_pauli_letter(Tableau &t, uint32_t q, uint8_t code) {
    switch (code & 3) {
        case 1:
            t.x(q);
            break;
        case 2:
            t.y(q);
            break;
        case 3:
            t.z(q);
            break;
        default:
            break;
    }
}

void apply_fault(Tableau &t, const FaultLocation &loc, uint8_t pauli) {
    apply_pauli_letter(t, loc.q0, pauli & 3);
    if (loc.two_qubit()) {
        apply_pauli_letter(t, loc.q1, pauli >> 2);
    }
}

}  // namespace

TableauRun run_tableau(const Circuit &c, Variant v, const std::vector<int8_t> *forced, Rng *rng,
                       const FaultSample *faults, const std::vector<FaultLocation> *locs) {
    TableauRun run;
    run.state = Tableau(c.num_qubits());
    run.record.assign(c.record_len, 0);
    run.random.assign(c.record_len, 0);
    Tableau &t = run.state;
    size_t next_fault = 0;
    for (size_t m = 0; m < c.moments.size(); m++) {
        size_t begin = next_fault;
        size_t end = begin;
        if (faults) {
            while (end < faults->faults.size() && (*locs)[faults->faults[end].location].moment == m) {
                end++;
            }
            for (size_t k = begin; k < end; k++) {
                const auto &loc = (*locs)[faults->faults[k].location];
                if (loc.kind == LocationKind::Meas) {
                    apply_fault(t, loc, faults->faults[k].pauli);
                }
            }
        }
        for (const Gate &g : c.moments[m].gates) {
            int force = -1;
            if (is_measurement(g.kind) && forced && (*forced)[(size_t)g.record] >= 0) {
                force = (*forced)[(size_t)g.record];
            }
            switch (g.kind) {
                case GateKind::PrepZ:
                    t.reset_z(g.q0, rng);
                    break;
                case GateKind::PrepX:
                    t.reset_x(g.q0, rng);
                    break;
                case GateKind::MeasZ:
                case GateKind::MeasX: {
                    auto o = g.kind == GateKind::MeasZ ? t.measure_z(g.q0, force, rng) : t.measure_x(g.q0, force, rng);
                    run.record[(size_t)g.record] = o.value;
                    run.random[(size_t)g.record] = o.random;
                    break;
                }
                case GateKind::CPauli:
                    break;
                default:
                    apply_clifford_gate(t, g, v);
            }
        }
        if (faults) {
            for (size_t k = begin; k < end; k++) {
                const auto &loc = (*locs)[faults->faults[k].location];
                if (loc.kind != LocationKind::Meas) {
                    apply_fault(t, loc, faults->faults[k].pauli);
                }
            }
            next_fault = end;
        }
        for (const Gate &g : c.moments[m].gates) {
            if (g.kind != GateKind::CPauli) {
                continue;
            }
            bool parity = g.condition.empty();
            for (uint32_t s : g.condition) {
                parity ^= run.record[s] != 0;
            }
            if (parity) {
                apply_pauli_letter(t, g.q0, g.pauli == 'X' ? 1 : g.pauli == 'Y' ? 2 : 3);
            }
        }
    }
    return run;
}

}  // namespace zld
