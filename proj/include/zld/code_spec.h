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

#ifndef ZLD_CODE_SPEC_H
#define ZLD_CODE_SPEC_H

#include <functional>
#include <string>
#include <vector>

#include "zld/circuit.h"
#include "zld/pauli.h"

namespace zld {

/// Stabilizer code on named grid positions. Pauli strings are indexed by
/// position in `layout`. Codes without a logical qubit (cat states) leave the
/// logical operators empty.
struct CodeSpec {
    std::string name;
    std::vector<GridQubit> layout;
    std::vector<PauliString> stabilizers;
    PauliString logical_x;
    PauliString logical_z;

    bool has_logical() const {
        return logical_x.size() == layout.size() && !layout.empty();
    }
    /// Position of (row, col) in the layout, or -1.
    int index_of(int row, int col) const;
};

/// Empty when the code satisfies all commutation invariants.
std::vector<std::string> validate_code_spec(const CodeSpec &code);

/// Steane code with the generators XIXIXIX, XXIIXXI, XIXXIXI and their Z
/// counterparts, qubits at (0,0)..(0,6).
CodeSpec steane_code();

/// Steane code given by three weight-4 supports (used for both X and Z) and a
/// weight-3 logical support, on explicit positions.
CodeSpec steane_code_from_supports(const std::vector<GridQubit> &positions,
                                   const std::vector<std::vector<int>> &supports, const std::vector<int> &logical);

/// The distance-two code left after measuring qubit `removed` of a Steane
/// code in the X basis.
CodeSpec six_qubit_code(const CodeSpec &steane, int removed);

/// Maps lattice coordinates (i, j) of a rotated or planar patch to the grid.
using Placement = std::function<GridQubit(int i, int j)>;

/// Rotated surface code. Data (i, j), 0 <= i, j < d. Plaquette (a, b) covers
/// data {a, a+1} x {b, b+1}; X-type when a+b is even. X boundaries on the
/// i-sides, Z boundaries on the j-sides. Logical Z is row i = 0 and logical X
/// is column j = 0.
CodeSpec rotated_surface_code(int d, const Placement &data_at);

/// Placement of rotated-code data on a square grid, tilted by 45 degrees so
/// that every plaquette has a lattice site at its centre adjacent to all its
/// data: data (i, j) sits at origin + i*(-1, 1) + j*(1, 1).
Placement diamond_placement(GridQubit origin);
/// Grid position of the centre of plaquette (a, b) under diamond_placement.
GridQubit diamond_plaquette_center(GridQubit origin, int a, int b);

/// Unrotated planar code with data on sites (r, c), r + c even, inside a
/// (2d-1) x (2d-1) square whose corner is `origin`. Z checks sit on (odd,
/// even) sites and X checks on (even, odd) sites. Logical Z is the top row.
CodeSpec planar_surface_code(int d, GridQubit origin);

/// GHZ state on the given positions: Z_i Z_{i+1} and X...X.
CodeSpec cat_code(const std::vector<GridQubit> &positions);

/// A code whose position k lives on circuit qubit qubits[k].
struct PlacedCode {
    CodeSpec code;
    std::vector<uint32_t> qubits;

    /// `p` (over the code's positions) as a string over all n circuit qubits.
    PauliString embed(const PauliString &p, size_t n) const;
};

/// Looks up every layout position of `code` in `c`; throws when one is missing.
PlacedCode place_code(const CodeSpec &code, const Circuit &c);

}  // namespace zld

#endif
