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

#include "zld/analysis.h"

#include <algorithm>
#include <stdexcept>

namespace zld {

namespace {

std::vector<uint8_t> observable_signs(const Tableau &t, const std::vector<PauliString> &obs) {
    std::vector<uint8_t> out;
    for (size_t k = 0; k < obs.size(); k++) {
        int v = t.peek(obs[k]);
        if (v == 0) {
            throw std::logic_error("observable " + std::to_string(k) + " (" + obs[k].str() +
                                   ") is not determined at the end of the circuit");
        }
        out.push_back(v < 0);
    }
    return out;
}

struct AffineForm {
    BitVec dep;
    bool constant = false;
};

}  // namespace

ReferenceModel build_reference_model(const Circuit &c, Variant v, const std::vector<PauliString> &observables) {
    ReferenceModel m;
    std::vector<int8_t> forced(c.record_len, 0);
    TableauRun base = run_tableau(c, v, &forced, nullptr);
    m.baseline = base.record;
    m.is_random = base.random;
    for (uint32_t s = 0; s < c.record_len; s++) {
        if (base.random[s]) {
            m.random_slots.push_back(s);
        }
    }
    m.observable_baseline = observable_signs(base.state, observables);
    size_t r = m.random_slots.size();
    m.slot_deps.assign(c.record_len, BitVec(r));
    m.observable_deps.assign(observables.size(), BitVec(r));
    for (size_t j = 0; j < r; j++) {
        forced[m.random_slots[j]] = 1;
        TableauRun run = run_tableau(c, v, &forced, nullptr);
        forced[m.random_slots[j]] = 0;
        if (run.random != base.random) {
            throw std::logic_error("set of random measurements depends on outcomes");
        }
        for (uint32_t s = 0; s < c.record_len; s++) {
            if (run.record[s] != m.baseline[s]) {
                m.slot_deps[s].flip(j);
            }
        }
        auto signs = observable_signs(run.state, observables);
        for (size_t k = 0; k < observables.size(); k++) {
            if (signs[k] != m.observable_baseline[k]) {
                m.observable_deps[k].flip(j);
            }
        }
    }
    return m;
}

void slot_parity_form(const ReferenceModel &m, const std::vector<uint32_t> &slots, BitVec &dep, bool &constant) {
    dep = BitVec(m.random_slots.size());
    constant = false;
    for (uint32_t s : slots) {
        dep.xor_with(m.slot_deps[s]);
        constant ^= m.baseline[s] != 0;
    }
}

std::vector<PauliString> symplectic_duals(const std::vector<PauliString> &ops) {
    size_t m = ops.size();
    if (m == 0) {
        return {};
    }
    size_t n = ops[0].size();
    // Row k: (z | x) of ops[k], so that row . (tx | tz) is the symplectic
    // product with t. Augmented with the identity to track row operations.
    std::vector<BitVec> rows(m, BitVec(2 * n));
    std::vector<BitVec> aug(m, BitVec(m));
    for (size_t k = 0; k < m; k++) {
        for (size_t q = 0; q < n; q++) {
            if (ops[k].z(q)) {
                rows[k].flip(q);
            }
            if (ops[k].x(q)) {
                rows[k].flip(n + q);
            }
        }
        aug[k].flip(k);
    }
    std::vector<size_t> pivot_col(m);
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < m; col++) {
        size_t p = rank;
        while (p < m && !rows[p].get(col)) {
            p++;
        }
        if (p == m) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        std::swap(aug[p], aug[rank]);
        for (size_t k = 0; k < m; k++) {
            if (k != rank && rows[k].get(col)) {
                rows[k].xor_with(rows[rank]);
                aug[k].xor_with(aug[rank]);
            }
        }
        pivot_col[rank] = col;
        rank++;
    }
    if (rank < m) {
        throw std::invalid_argument("symplectic_duals: operators are not independent");
    }
    std::vector<PauliString> out;
    for (size_t i = 0; i < m; i++) {
        PauliString t(n);
        for (size_t r = 0; r < m; r++) {
            if (!aug[r].get(i)) {
                continue;
            }
            size_t col = pivot_col[r];
            if (col < n) {
                t.set_x(col, !t.x(col));
            } else {
                t.set_z(col - n, !t.z(col - n));
            }
        }
        out.push_back(t);
    }
    return out;
}

void finalize_protocol(Circuit &main, const Circuit *plus, const PlacedCode &target) {
    size_t n = main.num_qubits();
    std::vector<PauliString> stabs;
    for (const auto &s : target.code.stabilizers) {
        stabs.push_back(target.embed(s, n));
    }
    PauliString lx = target.embed(target.code.logical_x, n);
    PauliString lz = target.embed(target.code.logical_z, n);

    std::vector<PauliString> obs_main = stabs;
    obs_main.push_back(lz);
    ReferenceModel m = build_reference_model(main, Variant::Pi4, obs_main);
    ReferenceModel mp;
    if (plus) {
        std::vector<PauliString> obs_plus = stabs;
        obs_plus.push_back(lx);
        mp = build_reference_model(*plus, Variant::Pi4, obs_plus);
        if (mp.random_slots != m.random_slots) {
            throw std::logic_error("logical |0> and |+> inputs randomize different measurements");
        }
        for (size_t k = 0; k < stabs.size(); k++) {
            if (mp.observable_deps[k] != m.observable_deps[k] ||
                mp.observable_baseline[k] != m.observable_baseline[k]) {
                throw std::logic_error("stabilizer " + std::to_string(k) + " sign differs between logical inputs");
            }
        }
    }

    for (auto &chk : main.checks) {
        if (chk.predicate == CheckPredicate::AllEqual) {
            for (size_t k = 1; k < chk.slots.size(); k++) {
                BitVec dep;
                bool constant;
                slot_parity_form(m, {chk.slots[0], chk.slots[k]}, dep, constant);
                if (dep.any() || constant) {
                    throw std::logic_error("check '" + chk.name + "' is not all-equal in the noiseless circuit");
                }
            }
            continue;
        }
        BitVec dep;
        bool constant;
        slot_parity_form(m, chk.slots, dep, constant);
        for (size_t j = 0; j < m.random_slots.size(); j++) {
            if (!dep.get(j)) {
                continue;
            }
            uint32_t s = m.random_slots[j];
            auto it = std::find(chk.slots.begin(), chk.slots.end(), s);
            if (it == chk.slots.end()) {
                chk.slots.push_back(s);
            } else {
                chk.slots.erase(it);
            }
        }
        std::sort(chk.slots.begin(), chk.slots.end());
        slot_parity_form(m, chk.slots, dep, constant);
        if (dep.any()) {
            throw std::logic_error("check '" + chk.name + "' cannot be made deterministic");
        }
        if (plus) {
            BitVec dep_p;
            bool constant_p;
            slot_parity_form(mp, chk.slots, dep_p, constant_p);
            if (dep_p.any() || constant_p != constant) {
                throw std::logic_error("check '" + chk.name + "' differs between logical inputs");
            }
        }
        chk.predicate = constant ? CheckPredicate::ParityOdd : CheckPredicate::ParityEven;
    }

    std::vector<PauliString> basis = stabs;
    basis.push_back(lx);
    basis.push_back(lz);
    std::vector<PauliString> duals = symplectic_duals(basis);
    std::vector<AffineForm> forms;
    for (size_t k = 0; k < stabs.size(); k++) {
        forms.push_back({m.observable_deps[k], m.observable_baseline[k] != 0});
    }
    if (plus) {
        forms.push_back({mp.observable_deps.back(), mp.observable_baseline.back() != 0});
    } else {
        forms.push_back({BitVec(m.random_slots.size()), false});
    }
    forms.push_back({m.observable_deps.back(), m.observable_baseline.back() != 0});

    std::vector<AffineForm> x_form(n, {BitVec(m.random_slots.size()), false});
    std::vector<AffineForm> z_form(n, {BitVec(m.random_slots.size()), false});
    for (size_t k = 0; k < basis.size(); k++) {
        for (uint32_t q : target.qubits) {
            if (duals[k].x(q)) {
                x_form[q].dep.xor_with(forms[k].dep);
                x_form[q].constant ^= forms[k].constant;
            }
            if (duals[k].z(q)) {
                z_form[q].dep.xor_with(forms[k].dep);
                z_form[q].constant ^= forms[k].constant;
            }
        }
    }
    if (main.moments.empty()) {
        main.moments.emplace_back();
    }
    auto &last = main.moments.back().gates;
    auto emit = [&](uint32_t q, char letter, const AffineForm &f) {
        Gate g;
        g.kind = GateKind::CPauli;
        g.q0 = q;
        g.pauli = letter;
        if (f.constant) {
            last.push_back(g);
        }
        if (f.dep.any()) {
            for (size_t j = 0; j < m.random_slots.size(); j++) {
                if (f.dep.get(j)) {
                    g.condition.push_back(m.random_slots[j]);
                }
            }
            last.push_back(g);
        }
    };
    for (uint32_t q : target.qubits) {
        emit(q, 'X', x_form[q]);
        emit(q, 'Z', z_form[q]);
    }
}

std::vector<std::string> audit_noiseless(const Circuit &c, Variant v, const PlacedCode &target,
                                         const PauliString *logical, uint64_t seed, int runs) {
    std::vector<std::string> out;
    size_t n = c.num_qubits();
    for (int r = 0; r < runs; r++) {
        Rng rng(shot_seed(seed, (uint64_t)r));
        TableauRun run = run_tableau(c, v, nullptr, &rng);
        for (const auto &chk : c.checks) {
            if (!evaluate_check(chk, run.record)) {
                out.push_back("run " + std::to_string(r) + ": check '" + chk.name + "' fails");
            }
        }
        for (size_t k = 0; k < target.code.stabilizers.size(); k++) {
            int val = run.state.peek(target.embed(target.code.stabilizers[k], n));
            if (val != 1) {
                out.push_back("run " + std::to_string(r) + ": stabilizer " + std::to_string(k) + " reads " +
                              std::to_string(val));
            }
        }
        if (logical) {
            int val = run.state.peek(*logical);
            if (val != 1) {
                out.push_back("run " + std::to_string(r) + ": logical reads " + std::to_string(val));
            }
        }
    }
    return out;
}

}  // namespace zld
