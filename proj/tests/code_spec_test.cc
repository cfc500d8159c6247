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
#include "zld/code_spec.h"

using namespace zld;

namespace {

void check_code(const CodeSpec &c, size_t n, size_t stabs) {
    CHECK(validate_code_spec(c).empty());
    CHECK(c.layout.size() == n);
    CHECK(c.stabilizers.size() == stabs);
    for (size_t i = 0; i < c.stabilizers.size(); i++) {
        for (size_t j = 0; j < c.stabilizers.size(); j++) {
            CHECK(commutes(c.stabilizers[i], c.stabilizers[j]));
        }
        if (c.has_logical()) {
            CHECK(commutes(c.stabilizers[i], c.logical_x));
            CHECK(commutes(c.stabilizers[i], c.logical_z));
        }
    }
    if (c.has_logical()) {
        CHECK_FALSE(commutes(c.logical_x, c.logical_z));
    }
}

}  // namespace

TEST_CASE("steane code") {
    check_code(steane_code(), 7, 6);
}

TEST_CASE("rotated surface codes") {
    for (int d : {3, 5, 7}) {
        CodeSpec c = rotated_surface_code(d, diamond_placement({0, 0}));
        check_code(c, (size_t)(d * d), (size_t)(d * d - 1));
        CHECK(c.logical_z.weight() >= (size_t)d);
        CHECK(c.logical_x.weight() >= (size_t)d);
    }
}

TEST_CASE("planar surface code") {
    CodeSpec c = planar_surface_code(3, {0, 0});
    CHECK(validate_code_spec(c).empty());
    CHECK(c.logical_z.weight() >= 3);
    CHECK(c.stabilizers.size() + 1 == c.layout.size());
}

TEST_CASE("index_of finds layout positions") {
    CodeSpec c = steane_code();
    for (size_t i = 0; i < c.layout.size(); i++) {
        CHECK(c.index_of(c.layout[i].row, c.layout[i].col) == (int)i);
    }
    CHECK(c.index_of(-100, -100) == -1);
}
