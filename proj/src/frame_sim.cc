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

#include "zld/frame_sim.h"

#include <algorithm>
#include <stdexcept>

namespace zld {

namespace {

struct Injection {
    uint32_t location;
    uint32_t shot;
    uint8_t pauli;
};

inline void inject(std::vector<uint64_t> &fx, std::vector<uint64_t> &fz, uint32_t q, uint8_t letter, uint64_t bit) {
    if (letter == 1 || letter == 2) {
        fx[q] ^= bit;
    }
    if (letter == 2 || letter == 3) {
        fz[q] ^= bit;
    }
}

}  // namespace

FrameSimulator::FrameSimulator(const Circuit &c, Variant v, std::vector<FaultLocation> locs)
    : c_(&c), v_(v), locs_(std::move(locs)) {
}

BatchResult FrameSimulator::run_batch(const std::vector<const FaultSample *> &shots) const {
    if (shots.size() > 64) {
        throw std::invalid_argument("run_batch takes at most 64 shots");
    }
    const Circuit &c = *c_;
    BatchResult r;
    r.shots = shots.size();
    r.flips.assign(c.record_len, 0);
    r.fx.assign(c.num_qubits(), 0);
    r.fz.assign(c.num_qubits(), 0);

    std::vector<Injection> inj;
    for (uint32_t s = 0; s < shots.size(); s++) {
        for (const Fault &f : shots[s]->faults) {
            inj.push_back({f.location, s, f.pauli});
        }
    }
    std::sort(inj.begin(), inj.end(), [](const Injection &a, const Injection &b) {
        return a.location < b.location;
    });

    auto &fx = r.fx;
    auto &fz = r.fz;
    auto apply = [&](const Injection &in) {
        const FaultLocation &loc = locs_[in.location];
        uint64_t bit = uint64_t{1} << in.shot;
        inject(fx, fz, loc.q0, in.pauli & 3, bit);
        if (loc.two_qubit()) {
            inject(fx, fz, loc.q1, in.pauli >> 2, bit);
        }
    };

    size_t next = 0;
    for (size_t m = 0; m < c.moments.size(); m++) {
        size_t begin = next;
        size_t end = begin;
        while (end < inj.size() && locs_[inj[end].location].moment == m) {
            end++;
        }
        for (size_t k = begin; k < end; k++) {
            if (locs_[inj[k].location].kind == LocationKind::Meas) {
                apply(inj[k]);
            }
        }
        for (const Gate &g : c.moments[m].gates) {
            uint32_t q = g.q0;
            switch (g.kind) {
                case GateKind::PrepZ:
                case GateKind::PrepX:
                    fx[q] = 0;
                    fz[q] = 0;
                    break;
                case GateKind::MeasZ:
                    r.flips[(size_t)g.record] = fx[q];
                    fx[q] = 0;
                    fz[q] = 0;
                    break;
                case GateKind::MeasX:
                    r.flips[(size_t)g.record] = fz[q];
                    fx[q] = 0;
                    fz[q] = 0;
                    break;
                case GateKind::H:
                    std::swap(fx[q], fz[q]);
                    break;
                case GateKind::S:
                case GateKind::Sdg:
                    fz[q] ^= fx[q];
                    break;
                case GateKind::X:
                case GateKind::Y:
                case GateKind::Z:
                    break;
                case GateKind::A:
                case GateKind::Adg:
                    if (v_ == Variant::Pi4) {
                        std::swap(fx[q], fz[q]);
                    } else {
                        r.nonclifford_hits |= fx[q] | fz[q];
                    }
                    break;
                case GateKind::CNOT:
                    fx[g.q1] ^= fx[q];
                    fz[q] ^= fz[g.q1];
                    break;
                case GateKind::CPauli:
                    break;
            }
        }
        for (size_t k = begin; k < end; k++) {
            if (locs_[inj[k].location].kind != LocationKind::Meas) {
                apply(inj[k]);
            }
        }
        next = end;
        for (const Gate &g : c.moments[m].gates) {
            if (g.kind != GateKind::CPauli || g.condition.empty()) {
                continue;
            }
            uint64_t parity = 0;
            for (uint32_t s : g.condition) {
                parity ^= r.flips[s];
            }
            inject(fx, fz, g.q0, g.pauli == 'X' ? 1 : g.pauli == 'Y' ? 2 : 3, parity);
        }
    }
    return r;
}

VerdictEvaluator::VerdictEvaluator(const Circuit &c, const PlacedCode &target, bool magic_output)
    : c_(&c), magic_(magic_output) {
    ordered_ = c.checks_in_stage_order();
    for (const auto *chk : ordered_) {
        ordered_index_.push_back((int)(chk - c.checks.data()));
    }
    auto terms = [&](const PauliString &p) {
        std::vector<Term> out;
        for (size_t k = 0; k < p.size(); k++) {
            char l = p.letter(k);
            if (l == 'I') {
                continue;
            }
            // Anticommutation with frame (fx, fz): an X in the observable
            // sees fz, a Z sees fx.
            out.push_back({target.qubits[k], l == 'Z' || l == 'Y', l == 'X' || l == 'Y'});
        }
        return out;
    };
    for (const auto &s : target.code.stabilizers) {
        stabs_.push_back(terms(s));
    }
    lx_ = terms(target.code.logical_x);
    lz_ = terms(target.code.logical_z);
}

uint64_t VerdictEvaluator::anticommute(const std::vector<Term> &op, const BatchResult &r) const {
    uint64_t a = 0;
    for (const Term &t : op) {
        if (t.use_x) {
            a ^= r.fx[t.qubit];
        }
        if (t.use_z) {
            a ^= r.fz[t.qubit];
        }
    }
    return a;
}

uint64_t VerdictEvaluator::rejected_mask(const BatchResult &r) const {
    uint64_t rejected = 0;
    for (const auto *chk : ordered_) {
        uint64_t fail = 0;
        if (chk->predicate == CheckPredicate::AllEqual) {
            for (size_t k = 1; k < chk->slots.size(); k++) {
                fail |= r.flips[chk->slots[0]] ^ r.flips[chk->slots[k]];
            }
        } else {
            for (uint32_t s : chk->slots) {
                fail ^= r.flips[s];
            }
        }
        rejected |= fail;
    }
    return rejected;
}

void VerdictEvaluator::evaluate(const BatchResult &r, std::vector<ShotVerdict> &out) const {
    out.assign(r.shots, ShotVerdict{});
    uint64_t rejected = 0;
    for (size_t i = 0; i < ordered_.size(); i++) {
        const auto *chk = ordered_[i];
        uint64_t fail = 0;
        if (chk->predicate == CheckPredicate::AllEqual) {
            for (size_t k = 1; k < chk->slots.size(); k++) {
                fail |= r.flips[chk->slots[0]] ^ r.flips[chk->slots[k]];
            }
        } else {
            for (uint32_t s : chk->slots) {
                fail ^= r.flips[s];
            }
        }
        uint64_t fresh = fail & ~rejected;
        rejected |= fail;
        while (fresh) {
            int s = __builtin_ctzll(fresh);
            fresh &= fresh - 1;
            if ((size_t)s < r.shots) {
                out[s].accepted = false;
                out[s].rejecting_check = ordered_index_[i];
                out[s].rejecting_stage = chk->stage;
            }
        }
    }
    uint64_t detected = 0;
    for (const auto &st : stabs_) {
        detected |= anticommute(st, r);
    }
    uint64_t logical = anticommute(lz_, r);
    if (magic_) {
        logical |= anticommute(lx_, r);
    }
    for (size_t s = 0; s < r.shots; s++) {
        if (!out[s].accepted) {
            continue;
        }
        bool det = (detected >> s) & 1;
        out[s].outside_codespace = det;
        out[s].logical_error = !det && ((logical >> s) & 1);
    }
}

}  // namespace zld
