/*
   Copyright 2026 the gqc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqc/field.hpp"

using namespace gqc;

TEST_CASE("prime and extension field construction") {
    Field f2(2, 1);
    CHECK(f2.order() == 2);
    CHECK(f2.extension_degree() == 1);

    Field f4(2, 2, {1, 1, 1});
    CHECK(f4.order() == 4);

    // t^2 + 1 has no root mod 3, so it is irreducible
    Field f9(3, 2, {1, 0, 1});
    CHECK(f9.order() == 9);

    // defaults exist for every binary extension up to 2^16
    for (unsigned s = 1; s <= 16; ++s) {
        Field f(2, s);
        CHECK(f.order() == 1u << s);
    }
}

TEST_CASE("constructor rejections") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);              // not prime
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);              // degree 0
    CHECK_THROWS_AS(Field(2, 17), std::invalid_argument);             // above 2^16
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);   // (t+1)^2
    CHECK_THROWS_AS(Field(3, 2), std::invalid_argument);              // no default modulus
    CHECK_THROWS_AS(Field(2, 2, {1, 1, 2}), std::invalid_argument);   // coefficient >= p
    CHECK_THROWS_AS(Field(2, 3, {1, 1, 1}), std::invalid_argument);   // wrong degree
}

TEST_CASE("characteristic-2 arithmetic") {
    Field f2(2);
    CHECK(f2.add(1, 1) == 0);

    Field f4(2, 2, {1, 1, 1});
    CHECK(f4.mul(2, 2) == 3);  // t * t = t + 1
    CHECK(f4.add(2, 3) == 1);
    CHECK(f4.div(1, 2) == 3);  // t^-1 = t + 1
}

TEST_CASE("inverses over GF(9)") {
    Field f9(3, 2, {1, 0, 1});
    for (Fe a = 1; a < 9; ++a) {
        Fe inv = f9.div(1, a);
        CHECK(f9.mul(a, inv) == 1);
    }
    CHECK_THROWS_AS(f9.div(1, 0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    std::vector<Field> fields;
    fields.push_back(Field(2));
    fields.push_back(Field(3));
    fields.push_back(Field(5));
    fields.push_back(Field(2, 2));
    fields.push_back(Field(2, 3));
    fields.push_back(Field(2, 4));
    fields.push_back(Field(3, 2, {1, 0, 1}));
    fields.push_back(Field(3, 3, {1, 2, 0, 1}));
    fields.push_back(Field(5, 2, {1, 1, 1}));

    for (const Field& f : fields) {
        const unsigned q = f.order();
        const unsigned p = f.characteristic();
        for (Fe a = 0; a < q; ++a) {
            // a + (p-1) a = 0
            Fe acc = a;
            for (unsigned i = 1; i < p; ++i) acc = f.add(acc, a);
            CHECK(acc == 0);
            for (Fe b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                if (b != 0) CHECK(f.div(f.mul(a, b), b) == a);
                CHECK(f.sub(f.add(a, b), b) == a);
                for (Fe c = 0; c < q; c += (q > 9 ? 3 : 1)) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("operation counting is exact per call") {
    Field f4(2, 2);
    OpCounter counter;
    {
        CountingScope scope(counter);
        for (int i = 0; i < 57; ++i) (void)f4.mul(2, 3);
        (void)f4.add(1, 2);
        (void)f4.sub(1, 2);
        (void)f4.div(3, 2);
    }
    CHECK(counter.muls == 57);
    CHECK(counter.adds == 1);
    CHECK(counter.subs == 1);
    CHECK(counter.divs == 1);
    CHECK(counter.total() == 60);

    // outside the scope nothing ticks
    (void)f4.mul(2, 3);
    CHECK(counter.muls == 57);
}

TEST_CASE("counting scopes nest") {
    Field f2(2);
    OpCounter outer, inner;
    CountingScope a(outer);
    (void)f2.add(1, 1);
    {
        CountingScope b(inner);
        (void)f2.add(1, 1);
        (void)f2.add(1, 1);
    }
    (void)f2.add(1, 1);
    CHECK(outer.adds == 2);
    CHECK(inner.adds == 2);
}

TEST_CASE("field equality is structural") {
    CHECK(Field(2, 2) == Field(2, 2, {1, 1, 1}));
    CHECK(Field(3) != Field(2));
    CHECK(Field(2, 3) != Field(2, 2));
}
