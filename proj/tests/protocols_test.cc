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

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "zld/analysis.h"
#include "zld/expansion.h"
#include "zld/protocols.h"
#include "zld/schedule.h"

using namespace zld;

namespace {

void audit(const Protocol &p) {
    PauliString lz = p.target.embed(p.target.code.logical_z, p.circuit.num_qubits());
    auto problems = audit_noiseless(p.circuit, Variant::Pi4, p.target, &lz, 7, 5);
    for (const auto &s : problems) {
        MESSAGE(s);
    }
    CHECK(problems.empty());
}

}  // namespace

TEST_CASE("published depths") {
    CHECK(depth(build_protocol("rotated").circuit) == 25);
    CHECK(depth(build_protocol("planar").circuit) == 23);
    CHECK(depth(build_protocol("conversion").circuit) == 42);
}

TEST_CASE("peak widths under slot reuse") {
    CHECK(schedule_circuit(build_protocol("rotated").circuit).peak <= 23);
    CHECK(schedule_circuit(build_protocol("planar").circuit).peak <= 23);
    CHECK(schedule_circuit(build_protocol("conversion").circuit).peak <= 15);
}

TEST_CASE("circuits validate and pass the noiseless audit") {
    for (const auto &name : protocol_names()) {
        Protocol p = build_protocol(name);
        CHECK(validate_circuit(p.circuit).empty());
        CHECK(validate_code_spec(p.target.code).empty());
        CHECK(p.target.code.layout.size() == (name == "planar" ? 13u : 9u));
        audit(p);
    }
}

TEST_CASE("check names are unique and the hadamard test is present") {
    for (const auto &name : protocol_names()) {
        Protocol p = build_protocol(name);
        std::set<std::string> names;
        bool test = false;
        for (const auto &c : p.circuit.checks) {
            CHECK(names.insert(c.name).second);
            test |= c.name == "hadamard-test";
        }
        CHECK(test);
    }
}

TEST_CASE("unknown protocol throws") {
    CHECK_THROWS_AS(build_protocol("triangle"), std::invalid_argument);
}

TEST_CASE("expansions validate and pass the audit") {
    for (const char *name : {"rotated", "conversion"}) {
        for (int d : {5, 7}) {
            for (ExpansionMode m : {ExpansionMode::Detection, ExpansionMode::Correction}) {
                Expansion e = build_expansion(name, d, m);
                CHECK(validate_circuit(e.protocol.circuit).empty());
                CHECK(e.protocol.target.code.layout.size() == (size_t)(d * d));
                CHECK(e.rounds == (size_t)d);
                CHECK(e.z_rounds.size() == (size_t)(d * d - 1) / 2);
                audit(e.protocol);
                bool has_expansion_checks = false;
                for (const auto &c : e.protocol.circuit.checks) {
                    has_expansion_checks |= c.stage == kStageExpansion;
                }
                CHECK(has_expansion_checks == (m == ExpansionMode::Detection));
            }
        }
    }
    CHECK_THROWS(build_expansion("planar", 5, ExpansionMode::Detection));
    CHECK_THROWS(build_expansion("rotated", 9, ExpansionMode::Detection));
    CHECK(build_expansion("rotated", 5, ExpansionMode::Correction, 2).rounds == 2);
}
