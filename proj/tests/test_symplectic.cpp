// Copyright 2026 The qrstab Authors
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
#include "qrstab/error.hpp"
#include "qrstab/symplectic.hpp"

using namespace qrstab;

TEST_CASE("pauli round trip") {
    for (const char *s : {"IXYZ", "XXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXZ", "I", "YYIZ"}) {
        CHECK(to_pauli(from_pauli(s)) == s);
    }
    SymplecticVector y = from_pauli("IY");
    CHECK(y.x(1));
    CHECK(y.z(1));
    CHECK_FALSE(y.x(0));
    CHECK_THROWS_AS(from_pauli("XQ"), Error);
}

TEST_CASE("symplectic product is commutation") {
    CHECK(symplectic_product(from_pauli("X"), from_pauli("Z")) == 1);
    CHECK(symplectic_product(from_pauli("X"), from_pauli("Y")) == 1);
    CHECK(symplectic_product(from_pauli("XX"), from_pauli("ZZ")) == 0);
    CHECK(symplectic_product(from_pauli("XZ"), from_pauli("XZ")) == 0);
    try {
        symplectic_product(from_pauli("X"), from_pauli("XX"));
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
}

TEST_CASE("weight and sum") {
    CHECK(weight(from_pauli("IXYZI")) == 3);
    CHECK(to_pauli(from_pauli("XZY") + from_pauli("ZZY")) == "YII");
}

TEST_CASE("sip check and syndrome") {
    // Five-qubit code generators.
    Gf2Matrix h(4, 10);
    const char *gens[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    for (std::size_t r = 0; r < 4; ++r) {
        set_row_vector(h, r, from_pauli(gens[r]));
    }
    CHECK(sip_check(h));
    CHECK(sip_check(h.col_block(0, 5), h.col_block(5, 5)));
    CHECK(to_pauli(row_vector(h, 2)) == "XIXZZ");
    auto s = syndrome(h, from_pauli("ZIIII"));
    CHECK(s == std::vector<std::uint8_t>{1, 0, 1, 0});

    Gf2Matrix bad(2, 4);
    set_row_vector(bad, 0, from_pauli("XI"));
    set_row_vector(bad, 1, from_pauli("ZI"));
    CHECK_FALSE(sip_check(bad));
}
