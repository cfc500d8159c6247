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

#include "zld/expansion.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zld {

const char *expansion_mode_name(ExpansionMode m) {
    return m == ExpansionMode::Detection ? "detection" : "correction";
}

ExpansionMode parse_expansion_mode(std::string_view s) {
    if (s == "detection") {
        return ExpansionMode::Detection;
    }
    if (s == "correction") {
        return ExpansionMode::Correction;
    }
    throw std::invalid_argument("unknown expansion mode '" + std::string(s) + "'");
}

namespace {

struct Grown {
    std::vector<std::vector<uint32_t>> z_slots;
    std::vector<std::vector<uint32_t>> x_slots;
};

void body(CircuitBuilder &b, std::string_view name, bool plus, CodeSpec &target, CodeSpec &steane) {
    if (name == "rotated") {
        detail::rotated_teleport_body(b, plus, target, steane);
    } else {
        detail::conversion_body(b, plus, target, steane);
    }
}

/// Fresh data, then `rounds` rounds of all plaquettes of the grown patch.
Grown grow(CircuitBuilder &b, GridQubit origin, int d_from, int d_to, size_t rounds) {
    size_t t0 = b.peek().moments.size();
    Placement at = diamond_placement(origin);
    for (int i = 0; i < d_to; i++) {
        for (int j = 0; j < d_to; j++) {
            if (i < d_from && j < d_from) {
                continue;
            }
            GridQubit g = at(i, j);
            uint32_t q = b.qubit(g.row, g.col, QubitRole::Data);
            if (i < d_from) {
                b.prep_z(t0, q);
            } else {
                b.prep_x(t0, q);
            }
        }
    }
    auto zp = detail::plaquettes_of_type(d_to, origin, false);
    auto xp = detail::plaquettes_of_type(d_to, origin, true);
    Grown g;
    g.z_slots.resize(zp.size());
    g.x_slots.resize(xp.size());
    for (size_t r = 0; r < rounds; r++) {
        size_t t = t0 + 6 * r;
        for (size_t k = 0; k < zp.size(); k++) {
            g.z_slots[k].push_back(detail::z_check_round(b, zp[k].center, zp[k].data, t, true));
        }
        for (size_t k = 0; k < xp.size(); k++) {
            g.x_slots[k].push_back(detail::x_check_round(b, xp[k].center, xp[k].data, t, true));
        }
    }
    for (size_t k = 0; k < zp.size(); k++) {
        b.check("expand-z-" + std::to_string(k), {g.z_slots[k][0]}, CheckPredicate::ParityEven, kStageExpansion);
        b.check("expand-z-rounds-" + std::to_string(k), g.z_slots[k], CheckPredicate::AllEqual, kStageExpansion);
    }
    for (size_t k = 0; k < xp.size(); k++) {
        b.check("expand-x-" + std::to_string(k), {g.x_slots[k][0]}, CheckPredicate::ParityEven, kStageExpansion);
        b.check("expand-x-rounds-" + std::to_string(k), g.x_slots[k], CheckPredicate::AllEqual, kStageExpansion);
    }
    return g;
}

const AcceptanceCheck &find_check(const Circuit &c, const std::string &name) {
    for (const auto &chk : c.checks) {
        if (chk.name == name) {
            return chk;
        }
    }
    throw std::logic_error("missing check '" + name + "'");
}

}  // namespace

Expansion build_expansion(std::string_view protocol, int d_to, ExpansionMode mode, size_t rounds) {
    if (protocol != "rotated" && protocol != "conversion") {
        throw std::invalid_argument("expansion supports the rotated and conversion protocols, not '" +
                                    std::string(protocol) + "'");
    }
    if (d_to != 5 && d_to != 7) {
        throw std::invalid_argument("expansion distance must be 5 or 7, got " + std::to_string(d_to));
    }
    Expansion e;
    e.d_to = d_to;
    e.mode = mode;
    e.rounds = rounds ? rounds : (size_t)d_to;

    CircuitBuilder main_b;
    CircuitBuilder plus_b;
    CodeSpec small;
    CodeSpec steane;
    CodeSpec unused_small;
    CodeSpec unused_steane;
    body(main_b, protocol, false, small, steane);
    body(plus_b, protocol, true, unused_small, unused_steane);
    GridQubit origin = small.layout.at(0);
    grow(main_b, origin, e.d_from, d_to, e.rounds);
    grow(plus_b, origin, e.d_from, d_to, e.rounds);

    CodeSpec target = rotated_surface_code(d_to, diamond_placement(origin));
    for (const auto &pl : detail::plaquettes_of_type(d_to, origin, false)) {
        // Z rounds of the expansion visit W, N, S, E.
        static const int kDirs[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
        std::vector<uint32_t> support;
        std::vector<int> steps;
        for (const auto &g : pl.data) {
            support.push_back((uint32_t)target.index_of(g.row, g.col));
            for (int k = 0; k < 4; k++) {
                if (g.row - pl.center.row == kDirs[k][0] && g.col - pl.center.col == kDirs[k][1]) {
                    steps.push_back(k);
                }
            }
        }
        e.z_support.push_back(support);
        e.z_step.push_back(steps);
    }
    std::string name = std::string(protocol) + "-d" + std::to_string(d_to) + "-" + expansion_mode_name(mode);
    e.protocol = detail::finish(name, std::move(main_b), &plus_b, target, steane);

    Circuit &c = e.protocol.circuit;
    for (size_t k = 0; k < e.z_support.size(); k++) {
        e.z_rounds.push_back(find_check(c, "expand-z-rounds-" + std::to_string(k)).slots);
    }
    for (size_t k = 0;; k++) {
        std::string n = "expand-x-rounds-" + std::to_string(k);
        if (std::none_of(c.checks.begin(), c.checks.end(), [&](const AcceptanceCheck &a) { return a.name == n; })) {
            break;
        }
        e.x_rounds.push_back(find_check(c, n).slots);
    }
    // First-round checks on plaquettes with a random first outcome end up empty.
    std::erase_if(c.checks, [&](const AcceptanceCheck &chk) {
        if (chk.stage != kStageExpansion) {
            return false;
        }
        if (mode == ExpansionMode::Correction) {
            return true;
        }
        return chk.slots.empty() || (chk.predicate == CheckPredicate::AllEqual && chk.slots.size() < 2);
    });
    return e;
}

ExpansionEvaluator::ExpansionEvaluator(const Expansion &e)
    : e_(&e), base_(e.protocol.circuit, e.protocol.target, false), graph_(0) {
    const Circuit &c = e.protocol.circuit;
    const PlacedCode &target = e.protocol.target;
    size_t n = c.num_qubits();

    Circuit raw = c;
    for (auto &m : raw.moments) {
        std::erase_if(m.gates, [](const Gate &g) { return g.kind == GateKind::CPauli; });
    }
    std::vector<PauliString> obs;
    for (const auto &support : e.z_support) {
        PauliString p(target.code.layout.size());
        for (uint32_t q : support) {
            p.set_letter(q, 'Z');
        }
        obs.push_back(target.embed(p, n));
    }
    ReferenceModel m = build_reference_model(raw, Variant::Pi4, obs);
    auto toggle = [](std::vector<uint32_t> &v, uint32_t s) {
        auto it = std::find(v.begin(), v.end(), s);
        if (it == v.end()) {
            v.push_back(s);
        } else {
            v.erase(it);
        }
    };
    auto add_deps = [&](std::vector<uint32_t> &v, const BitVec &dep) {
        for (size_t j = 0; j < m.random_slots.size(); j++) {
            if (dep.get(j)) {
                toggle(v, m.random_slots[j]);
            }
        }
    };

    size_t np = e.z_support.size();
    size_t layers = e.rounds + 1;
    std::vector<std::vector<int32_t>> node(np, std::vector<int32_t>(layers, MatchingGraph::kBoundary));
    for (size_t l = 0; l < layers; l++) {
        for (size_t k = 0; k < np; k++) {
            const auto &r = e.z_rounds[k];
            Detector d;
            if (l == 0) {
                BitVec dep;
                bool constant;
                slot_parity_form(m, {r[0]}, dep, constant);
                d.slots = {r[0]};
                add_deps(d.slots, dep);
                if (d.slots.empty()) {
                    continue;
                }
            } else if (l < e.rounds) {
                d.slots = {r[l - 1], r[l]};
            } else {
                d.slots = {r.back()};
                add_deps(d.slots, m.observable_deps[k]);
                d.final_plaquette = (int)k;
            }
            std::sort(d.slots.begin(), d.slots.end());
            node[k][l] = (int32_t)detectors_.size();
            detectors_.push_back(std::move(d));
        }
    }

    graph_ = MatchingGraph(detectors_.size());
    size_t nd = target.code.layout.size();
    // owners[q]: (plaquette, step) pairs, earliest step first.
    std::vector<std::vector<std::pair<size_t, int>>> owners(nd);
    for (size_t k = 0; k < np; k++) {
        for (size_t a = 0; a < e.z_support[k].size(); a++) {
            owners[e.z_support[k][a]].push_back({k, e.z_step[k][a]});
        }
    }
    for (auto &o : owners) {
        std::sort(o.begin(), o.end(), [](const auto &x, const auto &y) { return x.second < y.second; });
    }
    auto link = [&](int32_t a, int32_t b, int32_t qubit) {
        if (a == MatchingGraph::kBoundary && b == MatchingGraph::kBoundary) {
            return;
        }
        graph_.add_edge(a, b, qubit);
    };
    for (size_t l = 0; l < layers; l++) {
        for (size_t q = 0; q < nd; q++) {
            const auto &o = owners[q];
            if (o.empty() || o.size() > 2) {
                throw std::logic_error("expansion: data qubit outside the Z plaquette graph");
            }
            link(node[o[0].first][l], o.size() == 2 ? node[o[1].first][l] : MatchingGraph::kBoundary, (int32_t)q);
            // An error between the two visits of one round.
            if (o.size() == 2 && l + 1 < layers && o[0].second != o[1].second) {
                link(node[o[1].first][l], node[o[0].first][l + 1], (int32_t)q);
            }
        }
        if (l + 1 < layers) {
            for (size_t k = 0; k < np; k++) {
                link(node[k][l], node[k][l + 1], MatchingGraph::kNoQubit);
            }
        }
    }

    for (const auto &support : e.z_support) {
        std::vector<uint32_t> qs;
        for (uint32_t q : support) {
            qs.push_back(target.qubits[q]);
        }
        z_support_.push_back(qs);
    }
    in_lz_.assign(nd, 0);
    for (size_t q = 0; q < nd; q++) {
        if (target.code.logical_z.z(q)) {
            in_lz_[q] = 1;
            lz_.push_back(target.qubits[q]);
        }
    }
}

std::vector<int32_t> ExpansionEvaluator::defects(const BatchResult &r, size_t shot) const {
    std::vector<int32_t> out;
    for (size_t k = 0; k < detectors_.size(); k++) {
        const Detector &d = detectors_[k];
        uint64_t bit = 0;
        for (uint32_t s : d.slots) {
            bit ^= r.flips[s];
        }
        if (d.final_plaquette >= 0) {
            for (uint32_t q : z_support_[(size_t)d.final_plaquette]) {
                bit ^= r.fx[q];
            }
        }
        if (bit >> shot & 1) {
            out.push_back((int32_t)k);
        }
    }
    return out;
}

std::vector<int32_t> ExpansionEvaluator::correction(const std::vector<int32_t> &defects) const {
    return graph_.match(defects);
}

void ExpansionEvaluator::evaluate(const BatchResult &r, std::vector<ShotVerdict> &out) const {
    base_.evaluate(r, out);
    if (e_->mode == ExpansionMode::Detection) {
        return;
    }
    uint64_t lz = 0;
    for (uint32_t q : lz_) {
        lz ^= r.fx[q];
    }
    for (size_t s = 0; s < r.shots; s++) {
        if (!out[s].accepted) {
            continue;
        }
        bool flip = lz >> s & 1;
        for (int32_t q : correction(defects(r, s))) {
            flip ^= in_lz_[(size_t)q] != 0;
        }
        out[s].logical_error = flip;
        out[s].outside_codespace = false;
    }
}

}  // namespace zld
