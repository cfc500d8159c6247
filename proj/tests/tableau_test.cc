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
#include "zld/rng.h"
#include "zld/tableau.h"

using namespace zld;

TEST_CASE("bell pair measurements agree") {
    Rng rng(3);
    for (int s = 0; s < 50; s++) {
        Tableau t(2);
        t.h(0);
        t.cnot(0, 1);
        auto a = t.measure_z(0, -1, &rng);
        auto b = t.measure_z(1, -1, &rng);
        CHECK(a.random);
        CHECK_FALSE(b.random);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("deterministic outcomes follow the stabilizers") {
    Tableau t(3);
    t.x(1);
    CHECK(t.peek(PauliString::from_text("IZI")) == -1);
    CHECK(t.peek(PauliString::from_text("ZIZ")) == 1);
    CHECK(t.peek(PauliString::from_text("XII")) == 0);
    t.h(0);
    CHECK(t.peek(PauliString::from_text("XII")) == 1);
    t.s(0);
    CHECK(t.peek(PauliString::from_text("YII")) == 1);
    t.sdg(0);
    t.z(0);
    CHECK(t.peek(PauliString::from_text("XII")) == -1);
}

TEST_CASE("sqrt_y maps Z to X") {
    Tableau t(1);
    t.sqrt_y(0);
    CHECK(t.peek(PauliString::from_text("X")) == 1);
    t.sqrt_y_dag(0);
    CHECK(t.peek(PauliString::from_text("Z")) == 1);
}

TEST_CASE("forced outcomes are honoured for random measurements") {
    for (int forced : {0, 1}) {
        Tableau t(1);
        t.h(0);
        auto o = t.measure_z(0, forced, nullptr);
        CHECK(o.random);
        CHECK((int)o.value == forced);
        CHECK(t.peek(PauliString::from_text("Z")) == (forced ? -1 : 1));
    }
}

TEST_CASE("ghz parity survives x-basis measurement") {
    Rng rng(5);
    for (int s = 0; s < 40; s++) {
        Tableau t(3);
        t.h(0);
        t.cnot(0, 1);
        t.cnot(1, 2);
        int parity = 0;
        for (size_t q = 0; q < 3; q++) {
            parity ^= t.measure_x(q, -1, &rng).value;
        }
        CHECK(parity == 0);
    }
}

TEST_CASE("resets prepare fresh states") {
    Rng rng(1);
    Tableau t(2);
    t.h(0);
    t.cnot(0, 1);
    t.reset_z(0, &rng);
    CHECK(t.peek(PauliString::from_text("ZI")) == 1);
    t.reset_x(1, &rng);
    CHECK(t.peek(PauliString::from_text("IX")) == 1);
}
