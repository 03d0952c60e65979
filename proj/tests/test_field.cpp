#include "doctest.h"
#include "qt2w/field.hpp"

#include <stdexcept>

using namespace qt2w;

TEST_CASE("gf4 matches the 0,1,a,b naming") {
    Field f(2, 2);
    CHECK(f.q() == 4);
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1});  // x^2 + x + 1
    CHECK(f.add(1, 2) == 3);                                 // 1 + a = b
    CHECK(f.mul(2, 3) == 1);                                 // a * b = a^3 = 1
    CHECK(f.mul(2, 2) == 3);                                 // a^2 = b
    CHECK(f.mul(3, 3) == 2);                                 // b^2 = a
    CHECK(f.mul(2, 0) == 0);
    CHECK(f.element_order(3) == 3);
    CHECK(f.element_order(2) == 3);
    CHECK(f.element_order(1) == 1);
    CHECK(f.elements_of_order(3) == std::vector<gfelem>{2, 3});
}

TEST_CASE("prime fields") {
    Field f2(2, 1), f3(3, 1);
    CHECK(f2.elements_of_order(1) == std::vector<gfelem>{1});
    CHECK(f3.element_order(2) == 2);
    CHECK(f3.elements_of_order(2) == std::vector<gfelem>{2});
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.sub(0, 1) == 2);
}

TEST_CASE("moduli are deterministic and lex-least") {
    CHECK(Field(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1});     // x^3+x^2+1
    CHECK(Field(3, 2).modulus() == std::vector<std::uint32_t>{2, 1});        // x^2+x+2
    CHECK(Field(2, 4).modulus() == std::vector<std::uint32_t>{1, 0, 0, 1});  // x^4+x^3+1
    Field a(2, 2), b(2, 2);
    CHECK(a == b);
    CHECK(a.exp_table() == b.exp_table());
    CHECK(a.log_table() == b.log_table());
}

TEST_CASE("exp/log round trip") {
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 4}, {3, 2}, {5, 1}, {2, 6}}) {
        Field f(p, e);
        for (gfelem x = 1; x < f.q(); ++x) CHECK(f.exp_table()[f.log_table()[x]] == x);
        // period q-1: walking one more step from the top wraps to 1
        CHECK(f.exp_table()[0] == 1);
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        Field f(p, e);
        const gfelem q = f.q();
        for (gfelem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (gfelem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (gfelem c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("pow(a, q-1) = 1 for all prime powers q <= 64") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u,
                            47u, 53u, 59u, 61u}) {
        for (std::uint32_t e = 1;; ++e) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < e; ++i) q *= p;
            if (q > 64) break;
            Field f(p, e);
            for (gfelem a = 1; a < f.q(); ++a) CHECK(f.pow(a, f.q() - 1) == 1);
            CHECK(f.pow(0, 0) == 1);
            CHECK(f.pow(0, 5) == 0);
        }
    }
}

TEST_CASE("negative exponents") {
    Field f(2, 2);
    CHECK(f.pow(2, -1) == f.inv(2));
    CHECK(f.pow(3, -3) == 1);  // b^3 = 1
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS(Field(2, 21), std::invalid_argument);  // beyond size bound
    Field f(2, 2);
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    CHECK_THROWS_AS(f.element_order(0), std::invalid_argument);
    CHECK_THROWS_AS(f.elements_of_order(2), std::invalid_argument);  // 2 does not divide 3
    CHECK_THROWS_AS(f.add(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(f.pow(0, -1), std::invalid_argument);
}
