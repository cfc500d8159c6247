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

#include "zld/frame.h"

namespace zld {

PauliFrame frame_update(const PauliFrame &f, bool record_bit, const PauliString &conditional, int record_index) {
    PauliFrame out = f;
    if (record_bit) {
        out.accumulated.mul_inplace(conditional);
    }
    out.log.emplace_back(record_index, conditional);
    return out;
}

}  // namespace zld
