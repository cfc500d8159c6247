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
#include "zld/decoder.h"

using namespace zld;

namespace {

/// Applies decode_syndrome to the syndrome of `e`; returns whether the
/// residual is a stabilizer (commutes with both logicals and has no syndrome).
bool corrects(const CodeSpec &c, const PauliString &e) {
    PauliString r = e;
    r.mul_inplace(decode_syndrome(c, syndrome_of(c, e)));
    for (uint8_t s : syndrome_of(c, r)) {
        if (s) {
            return false;
        }
    }
    return commutes(r, c.logical_x) && commutes(r, c.logical_z);
}

}  // namespace

TEST_CASE("matching a path graph") {
    // 0 - 1 - 2 - 3 with boundary edges at both ends; qubit ids on edges.
    MatchingGraph g(4);
    g.add_edge(-1, 0, 10);
    g.add_edge(0, 1, 11);
    g.add_edge(1, 2, 12);
    g.add_edge(2, 3, 13);
    g.add_edge(3, -1, 14);
    CHECK(g.match({}).empty());
    CHECK(g.match({1, 2}) == std::vector<int32_t>{12});
    CHECK(g.match({0}) == std::vector<int32_t>{10});
    CHECK(g.match({3}) == std::vector<int32_t>{14});
    // Two defects far apart go to their own boundaries.
    CHECK(g.match({0, 3}) == std::vector<int32_t>{10, 14});
}

TEST_CASE("single errors are corrected on every distance") {
    for (int d : {3, 5, 7}) {
        CodeSpec c = rotated_surface_code(d, diamond_placement({0, 0}));
        size_t n = c.layout.size();
        for (size_t q = 0; q < n; q++) {
            for (char l : {'X', 'Y', 'Z'}) {
                CHECK(corrects(c, PauliString::single(n, q, l)));
            }
        }
    }
}

TEST_CASE("all weight-two errors are corrected at d = 5") {
    CodeSpec c = rotated_surface_code(5, diamond_placement({0, 0}));
    size_t n = c.layout.size();
    size_t bad = 0;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            for (char l : {'X', 'Y', 'Z'}) {
                for (char m : {'X', 'Y', 'Z'}) {
                    PauliString e(n);
                    e.set_letter(a, l);
                    e.set_letter(b, m);
                    bad += !corrects(c, e);
                }
            }
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("weight-three errors at d = 7") {
    CodeSpec c = rotated_surface_code(7, diamond_placement({0, 0}));
    size_t n = c.layout.size();
    size_t bad = 0;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            for (size_t k = b + 1; k < n; k++) {
                PauliString e(n);
                e.set_letter(a, 'X');
                e.set_letter(b, 'X');
                e.set_letter(k, 'X');
                bad += !corrects(c, e);
            }
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("decoder output clears the syndrome of a logical-length chain") {
    CodeSpec c = rotated_surface_code(3, diamond_placement({0, 0}));
    PauliString e = c.logical_x;
    auto s = syndrome_of(c, e);
    for (uint8_t b : s) {
        CHECK(b == 0);
    }
    CHECK(decode_syndrome(c, s).is_identity());
}
