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

#ifndef ZLD_CIRCUIT_TEXT_H
#define ZLD_CIRCUIT_TEXT_H

#include <string>
#include <string_view>

#include "zld/circuit.h"

namespace zld {

/// Line-oriented text form; see docs/circuit_format.md for the grammar.
std::string circuit_to_text(const Circuit &c);
Circuit circuit_from_text(std::string_view text);

std::string circuit_to_json(const Circuit &c);
Circuit circuit_from_json(std::string_view text);

}  // namespace zld

#endif
