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

#ifndef ZLD_PROTOCOLS_H
#define ZLD_PROTOCOLS_H

#include <string>
#include <string_view>
#include <vector>

#include "zld/circuit.h"
#include "zld/code_spec.h"

namespace zld {

/// A complete distillation circuit together with the code its output lives
/// in. The same circuit serves both variants: A/Adg denote pi/8 rotations
/// under Variant::Pi8 and pi/4 rotations under Variant::Pi4.
struct Protocol {
    std::string name;
    Circuit circuit;
    PlacedCode target;
    /// Steane code as placed by the encoder, before any data moves.
    PlacedCode steane;
};

enum class TeleportKind { Rotated, Planar };

/// Stage numbers used by the builders.
constexpr int kStageHadamardTest = 0;
constexpr int kStageSyndrome = 1;
constexpr int kStageReadout = 2;

/// Unitary Steane encoder of the magic state, data on (0,0)..(0,6).
Circuit build_steane_encode();
/// Seven-qubit cat state on (0,0)..(0,6), no measurements.
Circuit build_cat7();
/// Encoder, cat state and the transversal controlled-Hadamard measurement
/// with its parity check.
Circuit build_hadamard_test();

/// Teleportation of the encoded magic state into a distance-3 surface code.
Protocol build_teleport(TeleportKind kind);
/// Conversion of the encoded magic state into a rotated distance-3 code.
Protocol build_conversion();

/// "rotated", "planar" or "conversion".
Protocol build_protocol(std::string_view name);
std::vector<std::string> protocol_names();

namespace detail {

struct Prefix {
    uint32_t data[7];
    uint32_t cat[7];
    uint32_t cat_slots[7];
    /// First moment in which every data qubit is free.
    size_t end;
};

/// Encoder on row `row`, cat state on row `row + 1`, Hadamard test ending
/// with the cat X measurements and a parity check.
Prefix add_prefix(CircuitBuilder &b, int row, bool plus_input, bool with_test);

/// Steane code with the encoder's generators on the prefix data qubits.
CodeSpec prefix_steane_code(const Circuit &c, const Prefix &p);

/// Protocol bodies. Each adds its operations to `b` and reports the output
/// code and the encoder's Steane code in builder coordinates. `plus_input`
/// omits the magic rotation and the controlled-Hadamard gates, so the same
/// operations carry a logical |+>.
void teleport_body(CircuitBuilder &b, TeleportKind kind, bool plus_input, CodeSpec &target, CodeSpec &steane);
void rotated_teleport_body(CircuitBuilder &b, bool plus_input, CodeSpec &target, CodeSpec &steane);
void planar_teleport_body(CircuitBuilder &b, bool plus_input, CodeSpec &target, CodeSpec &steane);
void conversion_body(CircuitBuilder &b, bool plus_input, CodeSpec &target, CodeSpec &steane);

/// Plaquette of a diamond-placed rotated patch: ancilla site and data.
struct Plaquette {
    GridQubit center;
    std::vector<GridQubit> data;
};

/// X- or Z-type plaquettes of the distance-d patch at `origin`.
std::vector<Plaquette> plaquettes_of_type(int d, GridQubit origin, bool want_x);

/// Z-type check measured by an ancilla at `ancilla` whose data neighbours
/// are visited in the fixed order W, S, N, E: prep at t, CNOTs at t+1..t+4,
/// measurement at t+5. Returns the record slot. `swapped` exchanges the
/// Z and X orders, which turns two-qubit ancilla faults perpendicular to
/// the logical operator of the same type.
uint32_t z_check_round(CircuitBuilder &b, GridQubit ancilla, const std::vector<GridQubit> &data, size_t t,
                       bool swapped = false);
/// X-type counterpart, neighbours in the order W, N, S, E.
uint32_t x_check_round(CircuitBuilder &b, GridQubit ancilla, const std::vector<GridQubit> &data, size_t t,
                       bool swapped = false);

/// Normalizes coordinates, numbers records in time order, places the codes
/// (given in builder coordinates), completes checks and appends frames.
/// `plus_b` may be null for a protocol with a stabilizer-state output.
Protocol finish(std::string name, CircuitBuilder main_b, CircuitBuilder *plus_b, const CodeSpec &target,
                const CodeSpec &steane);

}  // namespace detail

}  // namespace zld

#endif
