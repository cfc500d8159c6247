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
#include "zld/pauli.h"

using zld::PauliString;

TEST_CASE("pauli text round trip") {
    PauliString p = PauliString::from_text("XIZY");
    CHECK(p.str() == "+X_ZY");
    CHECK(p.weight() == 3);
    CHECK(p.letter(3) == 'Y');
    CHECK(p.x(3));
    CHECK(p.z(3));
    CHECK_FALSE(p.is_identity());
}

TEST_CASE("single-qubit products match the Pauli algebra") {
    PauliString x = PauliString::single(1, 0, 'X');
    PauliString y = PauliString::single(1, 0, 'Y');
    PauliString z = PauliString::single(1, 0, 'Z');
    // XY = iZ and YX = -iZ: the letters agree, the phases differ.
    PauliString xy = zld::pauli_mul(x, y);
    PauliString yx = zld::pauli_mul(y, x);
    CHECK(xy.letter(0) == 'Z');
    CHECK(yx.letter(0) == 'Z');
    PauliString a = x;
    PauliString b = y;
    unsigned pa = a.mul_inplace(y);
    unsigned pb = b.mul_inplace(x);
    CHECK((pa + 2) % 4 == pb % 4);
    CHECK(zld::pauli_mul(z, z).is_identity());
}

TEST_CASE("commutation counts overlapping anticommuting sites") {
    CHECK(zld::commutes(PauliString::from_text("XX"), PauliString::from_text("ZZ")));
    CHECK_FALSE(zld::commutes(PauliString::from_text("XI"), PauliString::from_text("ZZ")));
    CHECK(zld::commutes(PauliString::from_text("XYZ"), PauliString::from_text("XYZ")));
    CHECK_FALSE(zld::commutes(PauliString::from_text("XIY"), PauliString::from_text("YII")));
}

TEST_CASE("wide strings span several words") {
    PauliString p(130);
    p.set_letter(0, 'X');
    p.set_letter(64, 'Y');
    p.set_letter(129, 'Z');
    CHECK(p.weight() == 3);
    PauliString q(130);
    q.set_letter(129, 'X');
    CHECK_FALSE(zld::commutes(p, q));
    q.set_letter(64, 'X');
    CHECK(zld::commutes(p, q));
}
