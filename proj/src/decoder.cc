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

#include "zld/decoder.h"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

namespace zld {

namespace {

constexpr int32_t kInf = INT32_MAX / 4;

}  // namespace

MatchingGraph::MatchingGraph(size_t num_nodes) : adj_(num_nodes) {
}

void MatchingGraph::add_edge(int32_t a, int32_t b, int32_t qubit) {
    if (a == kBoundary) {
        std::swap(a, b);
    }
    if (a < 0 || (size_t)a >= adj_.size() || b >= (int32_t)adj_.size()) {
        throw std::out_of_range("MatchingGraph::add_edge: node out of range");
    }
    auto insert = [&](int32_t from, int32_t to) {
        auto &v = adj_[from];
        Edge e{to, qubit};
        auto it = std::lower_bound(v.begin(), v.end(), e, [](const Edge &x, const Edge &y) {
            return x.qubit != y.qubit ? x.qubit < y.qubit : x.to < y.to;
        });
        v.insert(it, e);
    };
    insert(a, b);
    if (b != kBoundary) {
        insert(b, a);
    }
}

MatchingGraph::Paths MatchingGraph::bfs(int32_t src) const {
    Paths p;
    size_t n = adj_.size();
    p.dist.assign(n, -1);
    p.parent.assign(n, -1);
    p.parent_edge_qubit.assign(n, kNoQubit);
    std::deque<int32_t> queue{src};
    p.dist[src] = 0;
    while (!queue.empty()) {
        int32_t u = queue.front();
        queue.pop_front();
        for (const Edge &e : adj_[u]) {
            if (e.to == kBoundary) {
                if (p.boundary_dist < 0) {
                    p.boundary_dist = p.dist[u] + 1;
                    p.boundary_via = u;
                    p.boundary_qubit = e.qubit;
                }
                continue;
            }
            if (p.dist[e.to] < 0) {
                p.dist[e.to] = p.dist[u] + 1;
                p.parent[e.to] = u;
                p.parent_edge_qubit[e.to] = e.qubit;
                queue.push_back(e.to);
            }
        }
    }
    return p;
}

void MatchingGraph::trace(const Paths &p, int32_t node, std::vector<int32_t> &flips) const {
    while (p.parent[node] >= 0) {
        if (p.parent_edge_qubit[node] != kNoQubit) {
            flips.push_back(p.parent_edge_qubit[node]);
        }
        node = p.parent[node];
    }
}

std::vector<int32_t> MatchingGraph::match(const std::vector<int32_t> &defects) const {
    size_t k = defects.size();
    if (k == 0) {
        return {};
    }
    std::vector<Paths> paths;
    paths.reserve(k);
    for (int32_t d : defects) {
        paths.push_back(bfs(d));
    }
    auto pair_cost = [&](size_t i, size_t j) {
        int32_t d = paths[i].dist[defects[j]];
        return d < 0 ? kInf : d;
    };
    auto edge_cost = [&](size_t i) {
        return paths[i].boundary_dist < 0 ? kInf : paths[i].boundary_dist;
    };

    // partner[i] = j, or -1 for the boundary.
    std::vector<int32_t> partner(k, -2);
    if (k <= kExhaustiveLimit) {
        size_t full = ((size_t)1 << k) - 1;
        std::vector<int32_t> dp(full + 1, kInf);
        std::vector<int8_t> choice(full + 1, -1);
        dp[0] = 0;
        for (size_t mask = 1; mask <= full; mask++) {
            int i = __builtin_ctzll(mask);
            size_t rest = mask & ~((size_t)1 << i);
            int32_t best = std::min(kInf, dp[rest] + edge_cost(i));
            int8_t pick = -1;
            for (size_t j = i + 1; j < k; j++) {
                if (!(rest >> j & 1)) {
                    continue;
                }
                int32_t c = dp[rest & ~((size_t)1 << j)] + pair_cost(i, j);
                if (c < best) {
                    best = c;
                    pick = (int8_t)j;
                }
            }
            dp[mask] = std::min(best, kInf);
            choice[mask] = pick;
        }
        if (dp[full] >= kInf) {
            throw std::runtime_error("MatchingGraph::match: defects cannot be matched");
        }
        size_t mask = full;
        while (mask) {
            int i = __builtin_ctzll(mask);
            int j = choice[mask];
            partner[i] = j;
            mask &= ~((size_t)1 << i);
            if (j >= 0) {
                partner[j] = i;
                mask &= ~((size_t)1 << j);
            }
        }
    } else {
        // Closest remaining pair or boundary first.
        size_t left = k;
        while (left) {
            int32_t best = kInf + 1;
            int bi = -1;
            int bj = -2;
            for (size_t i = 0; i < k; i++) {
                if (partner[i] != -2) {
                    continue;
                }
                if (edge_cost(i) < best) {
                    best = edge_cost(i);
                    bi = (int)i;
                    bj = -1;
                }
                for (size_t j = i + 1; j < k; j++) {
                    if (partner[j] == -2 && pair_cost(i, j) < best) {
                        best = pair_cost(i, j);
                        bi = (int)i;
                        bj = (int)j;
                    }
                }
            }
            if (best >= kInf) {
                throw std::runtime_error("MatchingGraph::match: defects cannot be matched");
            }
            partner[bi] = bj;
            left--;
            if (bj >= 0) {
                partner[bj] = bi;
                left--;
            }
        }
    }

    std::vector<int32_t> flips;
    for (size_t i = 0; i < k; i++) {
        int32_t j = partner[i];
        if (j == -1) {
            flips.push_back(paths[i].boundary_qubit);
            trace(paths[i], paths[i].boundary_via, flips);
        } else if (j > (int32_t)i) {
            trace(paths[i], defects[j], flips);
        }
    }
    std::sort(flips.begin(), flips.end());
    std::vector<int32_t> odd;
    for (size_t a = 0; a < flips.size();) {
        size_t b = a;
        while (b < flips.size() && flips[b] == flips[a]) {
            b++;
        }
        if ((b - a) % 2 == 1 && flips[a] != kNoQubit) {
            odd.push_back(flips[a]);
        }
        a = b;
    }
    return odd;
}

namespace {

bool is_type(const PauliString &p, char letter) {
    for (size_t q = 0; q < p.size(); q++) {
        char l = p.letter(q);
        if (l != 'I' && l != letter) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> checks_of_type(const CodeSpec &code, CheckType type) {
    std::vector<size_t> out;
    char letter = type == CheckType::X ? 'X' : 'Z';
    for (size_t k = 0; k < code.stabilizers.size(); k++) {
        if (is_type(code.stabilizers[k], letter)) {
            out.push_back(k);
        }
    }
    return out;
}

}  // namespace

Decoder::Decoder(const CodeSpec &code, CheckType type)
    : code_(&code), type_(type), checks_(checks_of_type(code, type)), graph_(checks_.size()) {
    size_t n = code.layout.size();
    for (size_t q = 0; q < n; q++) {
        std::vector<int32_t> touching;
        for (size_t k = 0; k < checks_.size(); k++) {
            const PauliString &s = code.stabilizers[checks_[k]];
            if (s.x(q) || s.z(q)) {
                touching.push_back((int32_t)k);
            }
        }
        if (touching.size() == 1) {
            graph_.add_edge(touching[0], MatchingGraph::kBoundary, (int32_t)q);
        } else if (touching.size() == 2) {
            graph_.add_edge(touching[0], touching[1], (int32_t)q);
        } else if (touching.size() > 2) {
            throw std::invalid_argument("Decoder: qubit " + std::to_string(q) + " is in more than two checks");
        }
    }
}

PauliString Decoder::decode(const std::vector<uint8_t> &syndrome) const {
    std::vector<int32_t> defects;
    for (size_t k = 0; k < checks_.size(); k++) {
        if (syndrome.at(k)) {
            defects.push_back((int32_t)k);
        }
    }
    PauliString out(code_->layout.size());
    char letter = type_ == CheckType::Z ? 'X' : 'Z';
    for (int32_t q : graph_.match(defects)) {
        out.set_letter((size_t)q, letter);
    }
    return out;
}

std::vector<uint8_t> syndrome_of(const CodeSpec &code, const PauliString &error) {
    std::vector<uint8_t> out;
    for (const auto &s : code.stabilizers) {
        out.push_back(!commutes(s, error));
    }
    return out;
}

PauliString decode_syndrome(const CodeSpec &code, const std::vector<uint8_t> &syndrome) {
    PauliString out(code.layout.size());
    for (CheckType t : {CheckType::Z, CheckType::X}) {
        Decoder d(code, t);
        std::vector<uint8_t> part;
        for (size_t k : d.check_indices()) {
            part.push_back(syndrome.at(k));
        }
        out.mul_inplace(d.decode(part));
    }
    out.set_negative(false);
    return out;
}

}  // namespace zld
