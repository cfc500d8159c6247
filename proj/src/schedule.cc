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

#include "zld/schedule.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace zld {

namespace {

struct Op {
    uint32_t moment;
    uint32_t gate;
    uint32_t q0;
    uint32_t q1;
    GateKind kind;
};

class Greedy {
   public:
    explicit Greedy(const Circuit &c) : n_(c.num_qubits()) {
        per_qubit_.resize(n_);
        for (uint32_t m = 0; m < c.moments.size(); m++) {
            const auto &gates = c.moments[m].gates;
            for (uint32_t k = 0; k < gates.size(); k++) {
                const Gate &g = gates[k];
                if (g.kind == GateKind::CPauli) {
                    continue;
                }
                uint32_t id = (uint32_t)ops_.size();
                ops_.push_back({m, k, g.q0, g.is_two_qubit() ? g.q1 : kNoQubit, g.kind});
                per_qubit_[g.q0].push_back(id);
                if (g.is_two_qubit()) {
                    per_qubit_[g.q1].push_back(id);
                }
            }
        }
    }

    /// Tie-break rules among equally scored preparations: 0 earliest moment,
    /// 1 shortest lifetime, 2 latest moment.
    std::vector<uint32_t> run(int rule) {
        State s;
        s.pos.assign(n_, 0);
        std::vector<uint32_t> order;
        closure(s, &order, kNoQubit);
        while (order.size() < ops_.size()) {
            std::vector<uint32_t> cands = ready_preps(s);
            if (cands.empty()) {
                throw std::logic_error("schedule: no runnable gate; circuit qubit sequences deadlock");
            }
            uint32_t best = cands[0];
            long best_score = score(s, best);
            for (size_t k = 1; k < cands.size(); k++) {
                long sc = score(s, cands[k]);
                if (sc > best_score || (sc == best_score && better_tie(cands[k], best, rule))) {
                    best = cands[k];
                    best_score = sc;
                }
            }
            execute(s, best, &order);
            closure(s, &order, ops_[best].q0);
        }
        return order;
    }

    bool better_tie(uint32_t a, uint32_t b, int rule) const {
        if (rule == 1 && lifetime(a) != lifetime(b)) {
            return lifetime(a) < lifetime(b);
        }
        if (rule == 2) {
            return ops_[a].moment > ops_[b].moment;
        }
        return ops_[a].moment < ops_[b].moment;
    }

    /// Gates from the preparation `id` to the end of that qubit's lifetime.
    size_t lifetime(uint32_t id) const {
        const auto &seq = per_qubit_[ops_[id].q0];
        size_t k = std::find(seq.begin(), seq.end(), id) - seq.begin();
        size_t n = 0;
        while (k + n < seq.size() && !is_measurement(ops_[seq[k + n]].kind)) {
            n++;
        }
        return n;
    }

    const Op &op(uint32_t id) const {
        return ops_[id];
    }
    size_t size() const {
        return ops_.size();
    }

   private:
    struct State {
        std::vector<uint32_t> pos;
        long frees = 0;
    };

    uint32_t head(const State &s, uint32_t q) const {
        return s.pos[q] < per_qubit_[q].size() ? per_qubit_[q][s.pos[q]] : kNoQubit;
    }

    bool ready(const State &s, uint32_t id) const {
        const Op &o = ops_[id];
        return head(s, o.q0) == id && (o.q1 == kNoQubit || head(s, o.q1) == id);
    }

    void execute(State &s, uint32_t id, std::vector<uint32_t> *order) const {
        const Op &o = ops_[id];
        s.pos[o.q0]++;
        if (o.q1 != kNoQubit) {
            s.pos[o.q1]++;
        }
        if (is_measurement(o.kind)) {
            s.frees++;
        }
        if (order) {
            order->push_back(id);
        }
    }

    /// Runs every non-preparation gate that becomes ready. `start` limits the
    /// first scan to one qubit; kNoQubit scans all.
    void closure(State &s, std::vector<uint32_t> *order, uint32_t start) const {
        std::vector<uint32_t> stack;
        if (start == kNoQubit) {
            for (uint32_t q = 0; q < n_; q++) {
                stack.push_back(q);
            }
        } else {
            stack.push_back(start);
        }
        while (!stack.empty()) {
            uint32_t q = stack.back();
            stack.pop_back();
            uint32_t h = head(s, q);
            if (h == kNoQubit || is_preparation(ops_[h].kind) || !ready(s, h)) {
                continue;
            }
            execute(s, h, order);
            stack.push_back(ops_[h].q0);
            if (ops_[h].q1 != kNoQubit) {
                stack.push_back(ops_[h].q1);
            }
        }
    }

    std::vector<uint32_t> ready_preps(const State &s) const {
        std::vector<uint32_t> out;
        for (uint32_t q = 0; q < n_; q++) {
            uint32_t h = head(s, q);
            if (h != kNoQubit && is_preparation(ops_[h].kind)) {
                out.push_back(h);
            }
        }
        return out;
    }

    /// Net slots released by running `id` and everything it unlocks, with a
    /// second preparation allowed when the first alone releases nothing.
    long score(const State &s, uint32_t id) const {
        State t = s;
        t.frees = 0;
        execute(t, id, nullptr);
        closure(t, nullptr, ops_[id].q0);
        long one = t.frees - 1;
        if (t.frees > 0) {
            return one;
        }
        long best = one;
        for (uint32_t c : ready_preps(t)) {
            State u = t;
            execute(u, c, nullptr);
            closure(u, nullptr, ops_[c].q0);
            best = std::max(best, u.frees - 2);
        }
        return best;
    }

    size_t n_;
    std::vector<Op> ops_;
    std::vector<std::vector<uint32_t>> per_qubit_;
};

Schedule assign_slots(const Circuit &c, const Greedy &g, const std::vector<uint32_t> &order, bool reuse,
                      double *cost) {
    Schedule out;
    std::vector<uint32_t> slot_of(c.num_qubits(), kNoQubit);
    std::set<uint32_t> free_slots;
    size_t next_slot = 0;
    size_t live = 0;
    *cost = 0;
    for (uint32_t id : order) {
        const Op &o = g.op(id);
        if (is_preparation(o.kind) && slot_of[o.q0] == kNoQubit) {
            if (!reuse) {
                slot_of[o.q0] = o.q0;
            } else if (!free_slots.empty()) {
                slot_of[o.q0] = *free_slots.begin();
                free_slots.erase(free_slots.begin());
            } else {
                slot_of[o.q0] = (uint32_t)next_slot++;
            }
            live++;
            out.peak = std::max(out.peak, live);
        }
        *cost += std::ldexp(1.0, (int)live);
        ScheduledOp so{o.moment, o.gate, slot_of[o.q0], o.q1 == kNoQubit ? kNoQubit : slot_of[o.q1]};
        out.ops.push_back(so);
        if (is_measurement(o.kind)) {
            if (reuse) {
                free_slots.insert(slot_of[o.q0]);
            }
            slot_of[o.q0] = kNoQubit;
            live--;
        }
    }
    for (uint32_t m = 0; m < c.moments.size(); m++) {
        const auto &gates = c.moments[m].gates;
        for (uint32_t k = 0; k < gates.size(); k++) {
            if (gates[k].kind == GateKind::CPauli) {
                out.ops.push_back({m, k, slot_of[gates[k].q0], kNoQubit});
            }
        }
    }
    out.slots = reuse ? next_slot : c.num_qubits();
    return out;
}

}  // namespace

Schedule schedule_circuit(const Circuit &c, bool reuse) {
    Greedy g(c);
    double cost;
    if (!reuse) {
        std::vector<uint32_t> order;
        for (uint32_t k = 0; k < g.size(); k++) {
            order.push_back(k);
        }
        return assign_slots(c, g, order, false, &cost);
    }
    // Lowest peak, then lowest simulation cost (sum of 2^live over gates).
    Schedule best;
    double best_cost = 0;
    for (int rule = 0; rule < 3; rule++) {
        Schedule s = assign_slots(c, g, g.run(rule), true, &cost);
        if (rule == 0 || s.peak < best.peak || (s.peak == best.peak && cost < best_cost)) {
            best = std::move(s);
            best_cost = cost;
        }
    }
    return best;
}

}  // namespace zld
