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

#ifndef ZLD_CIRCUIT_H
#define ZLD_CIRCUIT_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zld {

enum class QubitRole : uint8_t { Data, Ancilla, BoundaryAncilla };

struct GridQubit {
    int row = 0;
    int col = 0;
    QubitRole role = QubitRole::Data;

    bool operator==(const GridQubit &o) const {
        return row == o.row && col == o.col;
    }
    bool operator<(const GridQubit &o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

inline bool adjacent(const GridQubit &a, const GridQubit &b) {
    int dr = a.row - b.row;
    int dc = a.col - b.col;
    return (dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc) == 1;
}

std::string qubit_text(const GridQubit &q);

enum class GateKind : uint8_t { PrepZ, PrepX, H, X, Y, Z, S, Sdg, A, Adg, CNOT, MeasZ, MeasX, CPauli };

constexpr uint32_t kNoQubit = UINT32_MAX;

/// One operation. Qubits are indices into Circuit::layout.
///
/// For CPauli the Pauli `pauli` is applied to q0 when the parity of the
/// record bits listed in `condition` is odd; an empty condition means always.
struct Gate {
    GateKind kind = GateKind::H;
    uint32_t q0 = kNoQubit;
    uint32_t q1 = kNoQubit;
    int32_t record = -1;
    std::vector<uint32_t> condition;
    char pauli = 'X';

    bool is_two_qubit() const {
        return kind == GateKind::CNOT;
    }
};

bool is_measurement(GateKind k);
bool is_preparation(GateKind k);
bool is_single_qubit_unitary(GateKind k);
const char *gate_name(GateKind k);

struct Moment {
    std::vector<Gate> gates;
};

enum class CheckPredicate : uint8_t { ParityEven, ParityOdd, AllEqual };

struct AcceptanceCheck {
    std::string name;
    std::vector<uint32_t> slots;
    CheckPredicate predicate = CheckPredicate::ParityEven;
    int stage = 0;
};

/// True iff the check passes on the given record.
bool evaluate_check(const AcceptanceCheck &check, const std::vector<uint8_t> &record);

struct Circuit {
    std::vector<GridQubit> layout;
    std::vector<Moment> moments;
    uint32_t record_len = 0;
    std::vector<AcceptanceCheck> checks;

    size_t num_qubits() const {
        return layout.size();
    }
    /// Index of the qubit at the given coordinates, or kNoQubit.
    uint32_t find_qubit(int row, int col) const;
    /// Checks sorted by stage, ties kept in declaration order.
    std::vector<const AcceptanceCheck *> checks_in_stage_order() const;
};

size_t depth(const Circuit &c);

struct Violation {
    int moment = -1;
    std::string kind;
    std::string message;
};

/// Structural audit: adjacency, moment disjointness, record discipline,
/// gates on unprepared qubits, coordinate sanity.
std::vector<Violation> validate_circuit(const Circuit &c);

/// Incremental construction with explicit moment placement.
class CircuitBuilder {
   public:
    /// Returns the index of the qubit at (row, col), adding it if new.
    uint32_t qubit(int row, int col, QubitRole role = QubitRole::Data);

    void prep_z(size_t t, uint32_t q);
    void prep_x(size_t t, uint32_t q);
    void gate1(size_t t, GateKind k, uint32_t q);
    void cnot(size_t t, uint32_t control, uint32_t target);
    uint32_t meas_z(size_t t, uint32_t q);
    uint32_t meas_x(size_t t, uint32_t q);
    void cpauli(size_t t, uint32_t q, char pauli, std::vector<uint32_t> condition);
    void check(std::string name, std::vector<uint32_t> slots, CheckPredicate pred, int stage);

    /// Shifts coordinates so the minimum row and column are zero.
    void normalize_coordinates();
    Circuit build() const;
    Circuit &peek() {
        return c_;
    }

   private:
    Moment &at(size_t t);
    Circuit c_;
    std::map<std::pair<int, int>, uint32_t> index_;
};

}  // namespace zld

#endif
