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

#ifndef ZLD_SCHEDULE_H
#define ZLD_SCHEDULE_H

#include <cstdint>
#include <vector>

#include "zld/circuit.h"

namespace zld {

/// One gate of the circuit in simulation order, with the simulator slots its
/// qubits occupy at that point.
struct ScheduledOp {
    uint32_t moment = 0;
    uint32_t gate = 0;
    uint32_t slot0 = kNoQubit;
    uint32_t slot1 = kNoQubit;
};

/// A static execution order of a circuit's gates. Gates on disjoint qubits
/// commute, so any order that keeps every qubit's own gate sequence is
/// equivalent; conditional Paulis run last, in moment order. A slot is taken
/// at a preparation and released after the measurement that ends the
/// qubit's lifetime.
struct Schedule {
    std::vector<ScheduledOp> ops;
    /// Highest number of simultaneously live slots.
    size_t peak = 0;
    /// Slot count needed, equal to `peak` when reuse is on.
    size_t slots = 0;
};

/// Greedy order that delays preparations and runs measurements as early as
/// the qubit sequences allow. With `reuse` false the moment order is kept
/// and every circuit qubit owns the slot with its own index.
Schedule schedule_circuit(const Circuit &c, bool reuse = true);

}  // namespace zld

#endif
