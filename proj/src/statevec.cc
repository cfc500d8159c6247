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

#include "zld/statevec.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zld/rng.h"

namespace zld {

namespace {

constexpr double kDeterministicEps = 1e-10;

double theta(Variant v) {
    return v == Variant::Pi8 ? std::numbers::pi / 8 : std::numbers::pi / 4;
}

const char kLetters[4] = {'I', 'X', 'Y', 'Z'};

/// Uniform draw for record slot `slot` of the shot with seed `seed`.
double slot_uniform(uint64_t seed, uint32_t slot) {
    return (double)(shot_seed(seed, slot) >> 11) * 0x1.0p-53;
}

}  // namespace

Mat2 gate_matrix(GateKind k, Variant v) {
    const cplx i(0, 1);
    double r = std::sqrt(0.5);
    double c = std::cos(theta(v));
    double s = std::sin(theta(v));
    switch (k) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::Sdg:
            return {1, 0, 0, -i};
        case GateKind::A:
            return {c, -s, s, c};
        case GateKind::Adg:
            return {c, s, -s, c};
        default:
            throw std::invalid_argument(std::string("gate_matrix: ") + gate_name(k) + " is not a single-qubit unitary");
    }
}

Mat2 pauli_matrix(char letter) {
    switch (letter) {
        case 'X':
            return gate_matrix(GateKind::X, Variant::Pi8);
        case 'Y':
            return gate_matrix(GateKind::Y, Variant::Pi8);
        case 'Z':
            return gate_matrix(GateKind::Z, Variant::Pi8);
        default:
            return {1, 0, 0, 1};
    }
}

StateVector::StateVector(size_t cap, const KernelTable *k) : cap_(cap), k_(k ? k : &active_kernels()), amp_(1, 1.0) {
    amp_.reserve((size_t)1 << cap);
}

uint32_t StateVector::add_qubit() {
    if (live_ >= cap_) {
        throw std::runtime_error("state vector slot exhaustion: more than " + std::to_string(cap_) + " live qubits");
    }
    amp_.resize(amp_.size() * 2, 0.0);
    return (uint32_t)live_++;
}

void StateVector::apply(uint32_t pos, const Mat2 &m) {
    k_->apply_1q(amp_.data(), amp_.size(), pos, m.data());
}

void StateVector::cnot(uint32_t control, uint32_t target) {
    k_->apply_cnot(amp_.data(), amp_.size(), control, target);
}

double StateVector::prob_one(uint32_t pos) const {
    return k_->prob_one(amp_.data(), amp_.size(), pos);
}

bool StateVector::measure_remove(uint32_t pos, double u, bool flip, bool *random) {
    double p1 = prob_one(pos);
    bool is_random = p1 > kDeterministicEps && p1 < 1 - kDeterministicEps;
    bool bit = is_random ? ((u < p1) != flip) : p1 > 0.5;
    double prob = bit ? p1 : 1 - p1;
    k_->collapse_remove(amp_.data(), amp_.size(), pos, bit, 1 / std::sqrt(prob), amp_.data());
    amp_.resize(amp_.size() / 2);
    live_--;
    if (random) {
        *random = is_random;
    }
    return bit;
}

bool StateVector::measure_reset(uint32_t pos, double u, bool flip, bool *random) {
    double p1 = prob_one(pos);
    bool is_random = p1 > kDeterministicEps && p1 < 1 - kDeterministicEps;
    bool bit = is_random ? ((u < p1) != flip) : p1 > 0.5;
    double scale = 1 / std::sqrt(bit ? p1 : 1 - p1);
    // Keeps the chosen branch and maps it onto |0>.
    Mat2 m = bit ? Mat2{0, scale, 0, 0} : Mat2{scale, 0, 0, 0};
    apply(pos, m);
    if (random) {
        *random = is_random;
    }
    return bit;
}

double StateVector::norm2() const {
    double t = 0;
    for (const auto &a : amp_) {
        t += std::norm(a);
    }
    return t;
}

void apply_pauli_dense(std::vector<cplx> &amp, const PauliString &p) {
    const KernelTable &k = kScalarKernels;
    for (size_t q = 0; q < p.size(); q++) {
        char l = p.letter(q);
        if (l != 'I') {
            Mat2 m = pauli_matrix(l);
            k.apply_1q(amp.data(), amp.size(), (unsigned)q, m.data());
        }
    }
    if (p.negative()) {
        for (auto &a : amp) {
            a = -a;
        }
    }
}

namespace {

void project_inplace(std::vector<cplx> &v, const CodeSpec &code) {
    for (const auto &s : code.stabilizers) {
        std::vector<cplx> w = v;
        apply_pauli_dense(w, s);
        for (size_t k = 0; k < v.size(); k++) {
            v[k] = 0.5 * (v[k] + w[k]);
        }
    }
}

double norm2_of(const std::vector<cplx> &v) {
    double t = 0;
    for (const auto &a : v) {
        t += std::norm(a);
    }
    return t;
}

}  // namespace

Projection project_codespace(const std::vector<cplx> &amp, const CodeSpec &code, cplx alpha, cplx beta) {
    size_t n = code.layout.size();
    if (amp.size() != ((size_t)1 << n)) {
        throw std::invalid_argument("project_codespace: state size does not match the code");
    }
    std::vector<cplx> psi = amp;
    project_inplace(psi, code);
    std::vector<cplx> zero(amp.size(), 0.0);
    zero[0] = 1;
    project_inplace(zero, code);
    double zn = std::sqrt(norm2_of(zero));
    for (auto &a : zero) {
        a /= zn;
    }
    std::vector<cplx> one = zero;
    apply_pauli_dense(one, code.logical_x);

    Projection out;
    out.norm2 = norm2_of(psi);
    if (out.norm2 < 1e-12) {
        return out;
    }
    cplx overlap = 0;
    for (size_t k = 0; k < psi.size(); k++) {
        overlap += std::conj(alpha * zero[k] + beta * one[k]) * psi[k];
    }
    out.fidelity = std::norm(overlap) / out.norm2;
    return out;
}

void ideal_magic(Variant v, cplx &alpha, cplx &beta) {
    Mat2 adg = gate_matrix(GateKind::Adg, v);
    double r = std::sqrt(0.5);
    alpha = (adg[0] + adg[1]) * r;
    beta = (adg[2] + adg[3]) * r;
}

StatevecRunner::StatevecRunner(const Circuit &c, const PlacedCode &target, std::vector<FaultLocation> locs,
                               StatevecOptions opt)
    : c_(&c), target_(target), locs_(std::move(locs)), opt_(opt), sched_(schedule_circuit(c, opt.reuse)) {
    if (sched_.peak > opt_.cap) {
        throw std::runtime_error("state vector slot exhaustion: circuit needs " + std::to_string(sched_.peak) +
                                 " live qubits, cap is " + std::to_string(opt_.cap));
    }
    ordered_ = c.checks_in_stage_order();
    std::vector<size_t> written(c.record_len, 0);
    for (size_t i = 0; i < sched_.ops.size(); i++) {
        const Gate &g = c.moments[sched_.ops[i].moment].gates[sched_.ops[i].gate];
        if (is_measurement(g.kind)) {
            written[(size_t)g.record] = i;
        }
    }
    for (const AcceptanceCheck *chk : ordered_) {
        size_t at = 0;
        for (uint32_t s : chk->slots) {
            at = std::max(at, written[s]);
        }
        check_ready_.push_back(at);
    }
    ideal_magic(opt_.variant, alpha_, beta_);
}

ShotResult StatevecRunner::run(const FaultSample &faults, uint64_t seed) const {
    const Circuit &c = *c_;
    size_t n = c.num_qubits();
    ShotResult res;
    res.record.assign(c.record_len, 0);
    StateVector sv(opt_.reuse ? opt_.cap : n, opt_.kernels);
    std::vector<uint32_t> pos(n, kNoQubit);
    if (!opt_.reuse) {
        for (uint32_t q = 0; q < n; q++) {
            pos[q] = sv.add_qubit();
        }
    }

    // Pending faults per qubit, in moment order.
    std::vector<std::vector<uint32_t>> pending(n);
    for (uint32_t k = 0; k < faults.faults.size(); k++) {
        const FaultLocation &loc = locs_[faults.faults[k].location];
        pending[loc.q0].push_back(k);
        if (loc.two_qubit()) {
            pending[loc.q1].push_back(k);
        }
    }
    std::vector<size_t> next(n, 0);
    std::vector<uint8_t> applied(faults.faults.size(), 0);
    auto apply_fault = [&](uint32_t k) {
        if (applied[k]) {
            return;
        }
        applied[k] = 1;
        const FaultLocation &loc = locs_[faults.faults[k].location];
        uint8_t code = faults.faults[k].pauli;
        if (code & 3) {
            sv.apply(pos[loc.q0], pauli_matrix(kLetters[code & 3]));
        }
        if (loc.two_qubit() && (code >> 2)) {
            sv.apply(pos[loc.q1], pauli_matrix(kLetters[code >> 2]));
        }
    };
    // Faults on q that precede an operation at moment m.
    auto flush = [&](uint32_t q, uint32_t m, bool is_meas) {
        while (next[q] < pending[q].size()) {
            uint32_t k = pending[q][next[q]];
            const FaultLocation &loc = locs_[faults.faults[k].location];
            bool before = loc.moment < m || (is_meas && loc.moment == m && loc.kind == LocationKind::Meas);
            if (!before) {
                break;
            }
            apply_fault(k);
            next[q]++;
        }
    };
    auto flush_all = [&]() {
        for (uint32_t k = 0; k < faults.faults.size(); k++) {
            apply_fault(k);
        }
    };

    bool tail = false;
    size_t next_check = 0;
    // Checks are decided in stage order as soon as their slots are written.
    auto decide = [&](size_t upto) {
        while (next_check < ordered_.size() && check_ready_[next_check] <= upto) {
            const AcceptanceCheck *chk = ordered_[next_check];
            if (!evaluate_check(*chk, res.record)) {
                res.accepted = false;
                res.rejecting_check = (int)(chk - c.checks.data());
                res.rejecting_name = chk->name;
                return false;
            }
            next_check++;
        }
        return true;
    };
    for (size_t i = 0; i < sched_.ops.size(); i++) {
        const ScheduledOp &so = sched_.ops[i];
        const Gate &g = c.moments[so.moment].gates[so.gate];
        if (g.kind == GateKind::CPauli) {
            if (!tail) {
                flush_all();
                tail = true;
            }
            bool parity = g.condition.empty();
            for (uint32_t s : g.condition) {
                parity ^= res.record[s] != 0;
            }
            if (parity) {
                sv.apply(pos[g.q0], pauli_matrix(g.pauli));
            }
            continue;
        }
        if (is_preparation(g.kind)) {
            if (opt_.reuse) {
                if (pos[g.q0] != kNoQubit) {
                    throw std::runtime_error("preparation of a live qubit " + qubit_text(c.layout[g.q0]));
                }
                pos[g.q0] = sv.add_qubit();
            }
            if (g.kind == GateKind::PrepX) {
                sv.apply(pos[g.q0], gate_matrix(GateKind::H, opt_.variant));
            }
            continue;
        }
        bool meas = is_measurement(g.kind);
        flush(g.q0, so.moment, meas);
        if (g.is_two_qubit()) {
            flush(g.q1, so.moment, false);
            sv.cnot(pos[g.q0], pos[g.q1]);
            continue;
        }
        if (!meas) {
            sv.apply(pos[g.q0], gate_matrix(g.kind, opt_.variant));
            continue;
        }
        if (g.kind == GateKind::MeasX) {
            sv.apply(pos[g.q0], gate_matrix(GateKind::H, opt_.variant));
        }
        double u = slot_uniform(seed, (uint32_t)g.record);
        bool bit;
        if (opt_.reuse) {
            uint32_t p = pos[g.q0];
            bit = sv.measure_remove(p, u, opt_.flip_random, nullptr);
            pos[g.q0] = kNoQubit;
            for (auto &x : pos) {
                if (x != kNoQubit && x > p) {
                    x--;
                }
            }
        } else {
            bit = sv.measure_reset(pos[g.q0], u, opt_.flip_random, nullptr);
        }
        res.record[(size_t)g.record] = bit;
        if (!decide(i)) {
            return res;
        }
    }
    if (!tail) {
        flush_all();
    }

    if (!decide(sched_.ops.size())) {
        return res;
    }

    // Amplitudes over the target code in layout order; every other qubit
    // must have been measured.
    size_t k = target_.qubits.size();
    std::vector<uint32_t> bit_of(k);
    std::vector<uint8_t> is_target(n, 0);
    for (size_t j = 0; j < k; j++) {
        bit_of[j] = pos[target_.qubits[j]];
        is_target[target_.qubits[j]] = 1;
    }
    for (uint32_t q = 0; q < n; q++) {
        if (!is_target[q] && opt_.reuse && pos[q] != kNoQubit) {
            throw std::runtime_error("qubit " + qubit_text(c.layout[q]) + " is live at the end but not in the target");
        }
    }
    const auto &amp = sv.amplitudes();
    std::vector<cplx> local((size_t)1 << k, 0.0);
    if (opt_.reuse) {
        for (size_t idx = 0; idx < amp.size(); idx++) {
            size_t out = 0;
            for (size_t j = 0; j < k; j++) {
                out |= ((idx >> bit_of[j]) & 1) << j;
            }
            local[out] = amp[idx];
        }
    } else {
        // Non-target qubits were reset to |0>.
        for (size_t idx = 0; idx < amp.size(); idx++) {
            size_t out = 0;
            size_t rest = idx;
            for (size_t j = 0; j < k; j++) {
                out |= ((idx >> bit_of[j]) & 1) << j;
                rest &= ~((size_t)1 << bit_of[j]);
            }
            if (rest == 0) {
                local[out] = amp[idx];
            }
        }
    }
    Projection pr = project_codespace(local, target_.code, alpha_, beta_);
    res.fidelity = pr.fidelity;
    if (pr.norm2 < 1e-12) {
        res.outside_codespace = true;
        return res;
    }
    res.logical_error = 1 - pr.fidelity > 1e-9;
    return res;
}

}  // namespace zld
