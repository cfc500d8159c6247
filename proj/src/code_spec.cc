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

#include "zld/code_spec.h"

#include <cstdint>
#include <stdexcept>

namespace zld {

namespace {

PauliString support_op(size_t n, const std::vector<int> &support, char letter) {
    PauliString p(n);
    for (int q : support) {
        p.set_letter((size_t)q, letter);
    }
    return p;
}

/// Rows of `ops` rewritten so that at most one row has an X (or Z, per
/// `use_x`) component on qubit q; that row, if any, is returned last.
std::vector<PauliString> pivot_out(std::vector<PauliString> ops, size_t q, bool use_x) {
    auto hits = [&](const PauliString &p) {
        return use_x ? p.x(q) : p.z(q);
    };
    int pivot = -1;
    for (size_t k = 0; k < ops.size(); k++) {
        if (hits(ops[k])) {
            if (pivot < 0) {
                pivot = (int)k;
            } else {
                ops[k].mul_inplace(ops[pivot]);
            }
        }
    }
    if (pivot >= 0) {
        PauliString p = ops[pivot];
        ops.erase(ops.begin() + pivot);
        ops.push_back(p);
    }
    return ops;
}

PauliString drop_qubit(const PauliString &p, size_t q) {
    PauliString r(p.size() - 1);
    r.set_negative(p.negative());
    for (size_t k = 0, j = 0; k < p.size(); k++) {
        if (k != q) {
            r.set_letter(j++, p.letter(k));
        }
    }
    return r;
}

}  // namespace

int CodeSpec::index_of(int row, int col) const {
    for (size_t k = 0; k < layout.size(); k++) {
        if (layout[k].row == row && layout[k].col == col) {
            return (int)k;
        }
    }
    return -1;
}

std::vector<std::string> validate_code_spec(const CodeSpec &code) {
    std::vector<std::string> out;
    size_t n = code.layout.size();
    for (size_t a = 0; a < code.stabilizers.size(); a++) {
        if (code.stabilizers[a].size() != n) {
            out.push_back("stabilizer " + std::to_string(a) + " has the wrong size");
            return out;
        }
        for (size_t b = a + 1; b < code.stabilizers.size(); b++) {
            if (!commutes(code.stabilizers[a], code.stabilizers[b])) {
                out.push_back("stabilizers " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
            }
        }
    }
    if (!code.has_logical()) {
        return out;
    }
    for (size_t a = 0; a < code.stabilizers.size(); a++) {
        if (!commutes(code.stabilizers[a], code.logical_x)) {
            out.push_back("logical X anticommutes with stabilizer " + std::to_string(a));
        }
        if (!commutes(code.stabilizers[a], code.logical_z)) {
            out.push_back("logical Z anticommutes with stabilizer " + std::to_string(a));
        }
    }
    if (commutes(code.logical_x, code.logical_z)) {
        out.push_back("logical X commutes with logical Z");
    }
    return out;
}

CodeSpec steane_code_from_supports(const std::vector<GridQubit> &positions,
                                   const std::vector<std::vector<int>> &supports, const std::vector<int> &logical) {
    CodeSpec code;
    code.name = "steane";
    code.layout = positions;
    size_t n = positions.size();
    for (const auto &s : supports) {
        code.stabilizers.push_back(support_op(n, s, 'X'));
    }
    for (const auto &s : supports) {
        code.stabilizers.push_back(support_op(n, s, 'Z'));
    }
    code.logical_x = support_op(n, logical, 'X');
    code.logical_z = support_op(n, logical, 'Z');
    return code;
}

CodeSpec steane_code() {
    std::vector<GridQubit> pos;
    for (int k = 0; k < 7; k++) {
        pos.push_back({0, k, QubitRole::Data});
    }
    return steane_code_from_supports(pos, {{0, 2, 4, 6}, {0, 1, 4, 5}, {0, 2, 3, 5}}, {0, 1, 2});
}

CodeSpec six_qubit_code(const CodeSpec &steane, int removed) {
    size_t q = (size_t)removed;
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (const auto &s : steane.stabilizers) {
        bool has_x = false;
        for (size_t k = 0; k < s.size(); k++) {
            has_x |= s.x(k);
        }
        (has_x ? xs : zs).push_back(s);
    }
    xs = pivot_out(xs, q, true);
    zs = pivot_out(zs, q, false);
    if (!zs.empty() && zs.back().z(q)) {
        zs.pop_back();
    }

    CodeSpec code;
    code.name = "six-qubit";
    for (size_t k = 0; k < steane.layout.size(); k++) {
        if (k != q) {
            code.layout.push_back(steane.layout[k]);
        }
    }
    for (const auto &s : xs) {
        code.stabilizers.push_back(drop_qubit(s, q));
    }
    for (const auto &s : zs) {
        code.stabilizers.push_back(drop_qubit(s, q));
    }

    auto best_rep = [&](const PauliString &logical, bool x_type, bool want_q) {
        std::vector<PauliString> gens;
        for (const auto &st : steane.stabilizers) {
            bool has_x = false;
            bool has_z = false;
            for (size_t k = 0; k < st.size(); k++) {
                has_x |= st.x(k);
                has_z |= st.z(k);
            }
            if (x_type ? (has_x && !has_z) : (has_z && !has_x)) {
                gens.push_back(st);
            }
        }
        PauliString best = logical;
        size_t best_w = SIZE_MAX;
        for (size_t mask = 0; mask < (size_t{1} << gens.size()); mask++) {
            PauliString cand = logical;
            for (size_t k = 0; k < gens.size(); k++) {
                if (mask >> k & 1) {
                    cand.mul_inplace(gens[k]);
                }
            }
            bool on_q = x_type ? cand.x(q) : cand.z(q);
            if (on_q != want_q) {
                continue;
            }
            size_t w = cand.weight() - (on_q ? 1 : 0);
            if (w < best_w) {
                best_w = w;
                best = cand;
            }
        }
        return best;
    };
    PauliString lz = best_rep(steane.logical_z, false, false);
    PauliString lx = best_rep(steane.logical_x, true, true);
    code.logical_z = drop_qubit(lz, q);
    code.logical_x = drop_qubit(lx, q);
    return code;
}

Placement diamond_placement(GridQubit origin) {
    return [origin](int i, int j) {
        return GridQubit{origin.row - i + j, origin.col + i + j, QubitRole::Data};
    };
}

GridQubit diamond_plaquette_center(GridQubit origin, int a, int b) {
    return GridQubit{origin.row + b - a, origin.col + a + b + 1, QubitRole::Ancilla};
}

CodeSpec rotated_surface_code(int d, const Placement &data_at) {
    if (d < 2) {
        throw std::invalid_argument("rotated surface code needs d >= 2");
    }
    CodeSpec code;
    code.name = "rotated-d" + std::to_string(d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            code.layout.push_back(data_at(i, j));
        }
    }
    size_t n = code.layout.size();
    auto idx = [d](int i, int j) {
        return i * d + j;
    };
    for (int a = -1; a < d; a++) {
        for (int b = -1; b < d; b++) {
            bool x_type = ((a + b) % 2 + 2) % 2 == 0;
            bool a_edge = a == -1 || a == d - 1;
            bool b_edge = b == -1 || b == d - 1;
            if (a_edge && b_edge) {
                continue;
            }
            if (a_edge && !x_type) {
                continue;
            }
            if (b_edge && x_type) {
                continue;
            }
            std::vector<int> support;
            for (int di = 0; di < 2; di++) {
                for (int dj = 0; dj < 2; dj++) {
                    int i = a + di;
                    int j = b + dj;
                    if (i >= 0 && i < d && j >= 0 && j < d) {
                        support.push_back(idx(i, j));
                    }
                }
            }
            code.stabilizers.push_back(support_op(n, support, x_type ? 'X' : 'Z'));
        }
    }
    std::vector<int> row0;
    std::vector<int> col0;
    for (int k = 0; k < d; k++) {
        row0.push_back(idx(0, k));
        col0.push_back(idx(k, 0));
    }
    code.logical_z = support_op(n, row0, 'Z');
    code.logical_x = support_op(n, col0, 'X');
    return code;
}

CodeSpec planar_surface_code(int d, GridQubit origin) {
    if (d < 2) {
        throw std::invalid_argument("planar surface code needs d >= 2");
    }
    int w = 2 * d - 1;
    CodeSpec code;
    code.name = "planar-d" + std::to_string(d);
    std::vector<std::vector<int>> at(w, std::vector<int>(w, -1));
    for (int r = 0; r < w; r++) {
        for (int c = 0; c < w; c++) {
            if ((r + c) % 2 == 0) {
                at[r][c] = (int)code.layout.size();
                code.layout.push_back({origin.row + r, origin.col + c, QubitRole::Data});
            }
        }
    }
    size_t n = code.layout.size();
    for (int r = 0; r < w; r++) {
        for (int c = 0; c < w; c++) {
            if ((r + c) % 2 == 0) {
                continue;
            }
            std::vector<int> support;
            const int dr[4] = {-1, 1, 0, 0};
            const int dc[4] = {0, 0, -1, 1};
            for (int k = 0; k < 4; k++) {
                int rr = r + dr[k];
                int cc = c + dc[k];
                if (rr >= 0 && rr < w && cc >= 0 && cc < w) {
                    support.push_back(at[rr][cc]);
                }
            }
            code.stabilizers.push_back(support_op(n, support, r % 2 == 1 ? 'Z' : 'X'));
        }
    }
    std::vector<int> top;
    std::vector<int> left;
    for (int k = 0; k < w; k += 2) {
        top.push_back(at[0][k]);
        left.push_back(at[k][0]);
    }
    code.logical_z = support_op(n, top, 'Z');
    code.logical_x = support_op(n, left, 'X');
    return code;
}

CodeSpec cat_code(const std::vector<GridQubit> &positions) {
    CodeSpec code;
    code.name = "cat" + std::to_string(positions.size());
    code.layout = positions;
    size_t n = positions.size();
    for (size_t k = 0; k + 1 < n; k++) {
        code.stabilizers.push_back(support_op(n, {(int)k, (int)k + 1}, 'Z'));
    }
    std::vector<int> all;
    for (size_t k = 0; k < n; k++) {
        all.push_back((int)k);
    }
    code.stabilizers.push_back(support_op(n, all, 'X'));
    return code;
}

PauliString PlacedCode::embed(const PauliString &p, size_t n) const {
    PauliString out(n);
    out.set_negative(p.negative());
    for (size_t k = 0; k < p.size(); k++) {
        out.set_letter(qubits[k], p.letter(k));
    }
    return out;
}

PlacedCode place_code(const CodeSpec &code, const Circuit &c) {
    PlacedCode pc;
    pc.code = code;
    for (const auto &q : code.layout) {
        uint32_t k = c.find_qubit(q.row, q.col);
        if (k == kNoQubit) {
            throw std::invalid_argument("code position " + qubit_text(q) + " is not in the circuit");
        }
        pc.qubits.push_back(k);
    }
    return pc;
}

}  // namespace zld
