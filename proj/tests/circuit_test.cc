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

#include "doctest.h"
#include "zld/circuit.h"
#include "zld/circuit_text.h"
#include "zld/protocols.h"

using namespace zld;

TEST_CASE("builder output validates and reports depth") {
    CircuitBuilder b;
    uint32_t a = b.qubit(0, 0);
    uint32_t c = b.qubit(0, 1, QubitRole::Ancilla);
    b.prep_x(0, a);
    b.prep_z(0, c);
    b.cnot(1, a, c);
    uint32_t s = b.meas_z(2, c);
    b.check("parity", {s}, CheckPredicate::ParityEven, 0);
    Circuit circ = b.build();
    CHECK(validate_circuit(circ).empty());
    CHECK(depth(circ) == 3);
    CHECK(circ.record_len == 1);
}

TEST_CASE("validation rejects non-adjacent CNOT") {
    CircuitBuilder b;
    uint32_t a = b.qubit(0, 0);
    uint32_t c = b.qubit(0, 2);
    b.prep_z(0, a);
    b.prep_z(0, c);
    b.cnot(1, a, c);
    CHECK_FALSE(validate_circuit(b.build()).empty());
}

TEST_CASE("check predicates") {
    AcceptanceCheck even{"e", {0, 1}, CheckPredicate::ParityEven, 0};
    AcceptanceCheck odd{"o", {0, 1}, CheckPredicate::ParityOdd, 0};
    AcceptanceCheck eq{"q", {0, 1, 2}, CheckPredicate::AllEqual, 0};
    CHECK(evaluate_check(even, {1, 1, 0}));
    CHECK_FALSE(evaluate_check(odd, {1, 1, 0}));
    CHECK_FALSE(evaluate_check(eq, {1, 1, 0}));
    CHECK(evaluate_check(eq, {1, 1, 1}));
}

TEST_CASE("text and json formats round trip every protocol") {
    for (const auto &name : protocol_names()) {
        Protocol p = build_protocol(name);
        std::string text = circuit_to_text(p.circuit);
        Circuit back = circuit_from_text(text);
        CHECK(circuit_to_text(back) == text);
        Circuit from_json = circuit_from_json(circuit_to_json(p.circuit));
        CHECK(circuit_to_text(from_json) == text);
    }
}

TEST_CASE("export is deterministic") {
    CHECK(circuit_to_text(build_protocol("rotated").circuit) == circuit_to_text(build_protocol("rotated").circuit));
}
