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

#ifndef ZLD_FRAME_H
#define ZLD_FRAME_H

#include <utility>
#include <vector>

#include "zld/pauli.h"

namespace zld {

/// Classical record of pending Pauli corrections.
struct PauliFrame {
    PauliString accumulated;
    std::vector<std::pair<int, PauliString>> log;

    PauliFrame() = default;
    explicit PauliFrame(size_t num_qubits) : accumulated(num_qubits) {
    }
};

/// Returns `f` multiplied by `conditional` when `record_bit` is set. The
/// update is logged either way with `record_index`.
PauliFrame frame_update(const PauliFrame &f, bool record_bit, const PauliString &conditional, int record_index = -1);

}  // namespace zld

#endif
