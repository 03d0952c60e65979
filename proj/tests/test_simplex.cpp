#include "doctest.h"
#include "qt2w/simplex.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

using namespace qt2w;

namespace {

// generator of the [21,3,16]_4 example: weight 16, paired with lambda = b
const std::vector<gfelem> kExampleGen = {1, 3, 0, 3, 3, 3, 2, 1, 1, 2,
                                         1, 2, 0, 1, 0, 2, 3, 1, 1};

}  // namespace

TEST_CASE("twistulant matrix follows the consta-cyclic shift") {
    Field f4(2, 2);
    GfMatrix t = twistulant_matrix({3, 3, Poly(f4, {1, 1})});  // c = 1 + x, lambda = b
    gfelem want[3][3] = {{1, 1, 0}, {0, 1, 1}, {3, 0, 1}};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) CHECK(t.at(i, j) == want[i][j]);

    Field f2(2, 1);
    GfMatrix id = twistulant_matrix({2, 1, constant(f2, 1)});
    CHECK(id.at(0, 0) == 1);
    CHECK(id.at(0, 1) == 0);
    CHECK(id.at(1, 0) == 0);
    CHECK(id.at(1, 1) == 1);

    Field f3(3, 1);
    GfMatrix s = twistulant_matrix({3, 2, monomial(f3, 2)});  // c = x^2, lambda = 2
    gfelem want3[3][3] = {{0, 0, 1}, {2, 0, 0}, {0, 2, 0}};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) CHECK(s.at(i, j) == want3[i][j]);

    CHECK_THROWS_AS(twistulant_matrix({2, 1, Poly(f2, {1, 1, 1})}), std::invalid_argument);
}

TEST_CASE("twistulant_row closed form equals the shifted rows") {
    Field f4(2, 2);
    for (gfelem lambda : {1u, 2u, 3u}) {
        Poly c(f4, {3, 0, 2, 1});
        GfMatrix t = twistulant_matrix({4, lambda, c});
        std::vector<gfelem> row(4);
        for (unsigned i = 0; i < 4; ++i) {
            twistulant_row(c, 4, lambda, i, row);
            for (unsigned j = 0; j < 4; ++j) CHECK(row[j] == t.at(i, j));
        }
    }
}

TEST_CASE("build_simplex reproduces the [21,3,16]_4 example generator") {
    Field f(2, 2);
    SimplexCode code = build_simplex(f, 3, 3, 8);
    CHECK(code.n == 21);
    CHECK(code.dimension() == 3);
    CHECK(code.g == Poly(f, kExampleGen));
    CHECK(code.g.degree() == 18);
    CHECK(hamming_weight(code.g) == 16);
    CHECK(code.h == Poly(f, {3, 2, 1, 1}));  // b + a*x + x^2 + x^3
    CHECK_FALSE(code.cyclic_equivalent);     // gcd(3, 3) != 1
    // g*h = x^21 - lambda exactly
    CHECK(poly_mul(code.g, code.h) == xn_minus_lambda(f, 21, 3));
}

TEST_CASE("binary and ternary constructions") {
    Field f2(2, 1);
    SimplexCode c2 = build_simplex(f2, 4, 1, 0);
    CHECK(c2.n == 15);
    CHECK(c2.g.degree() == 11);
    CHECK(c2.g == Poly(f2, {1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1}));
    CHECK(c2.cyclic_equivalent);
    CHECK(poly_mul(c2.g, c2.h) == xn_minus_lambda(f2, 15, 1));

    Field f3(3, 1);
    SimplexCode c3 = build_simplex(f3, 2, 2, 0);
    CHECK(c3.n == 4);
    CHECK(c3.dimension() == 2);
    CHECK(c3.g == Poly(f3, {2, 2, 1}));
    CHECK(poly_mul(c3.g, c3.h) == xn_minus_lambda(f3, 4, 2));
}

TEST_CASE("incompatible pairing fails loudly instead of proceeding") {
    Field f(2, 2);
    // h_index 8 pairs with lambda = b; asking for lambda = a must error
    CHECK_THROWS_AS(build_simplex(f, 3, 2, 8), std::runtime_error);
    // and scanning finds partners for both lambdas
    int works_a = 0, works_b = 0;
    for (unsigned idx = 0; idx < primitive_polynomial_count(f, 3); ++idx) {
        try {
            build_simplex(f, 3, 2, idx);
            ++works_a;
        } catch (const std::runtime_error&) {}
        try {
            build_simplex(f, 3, 3, idx);
            ++works_b;
        } catch (const std::runtime_error&) {}
    }
    CHECK(works_a == 6);
    CHECK(works_b == 6);
}

TEST_CASE("lambda must have order q-1") {
    Field f4(2, 2), f3(3, 1);
    CHECK_THROWS_AS(build_simplex(f4, 3, 1, 0), std::invalid_argument);  // order 1, not 3
    CHECK_THROWS_AS(build_simplex(f4, 3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_simplex(f3, 2, 1, 0), std::invalid_argument);
    CHECK(default_lambda(f4) == 2);
    CHECK(default_lambda(f3) == 2);
    CHECK(default_lambda(Field(2, 1)) == 1);
}

TEST_CASE("full consta-cyclic matrix realizes the code") {
    Field f(2, 2);
    SimplexCode code = build_simplex(f, 3, 3, 8);
    GfMatrix c = full_constacyclic_matrix(code);
    CHECK(c.rows() == 21);
    for (unsigned j = 0; j < 21; ++j) CHECK(c.at(0, j) == code.g.coeff(j));
    // every row is the lambda-shift of the previous one
    for (unsigned i = 1; i < 21; ++i) {
        CHECK(c.at(i, 0) == f.mul(code.lambda, c.at(i - 1, 20)));
        for (unsigned j = 1; j < 21; ++j) CHECK(c.at(i, j) == c.at(i - 1, j - 1));
    }
    CHECK(gf_rank(c) == 3);
    for (unsigned i = 0; i < 21; ++i) CHECK(row_weight(c.row(i)) == 16);
}

TEST_CASE("rows of the full matrix are equidistant across constructions") {
    const std::vector<std::tuple<unsigned, unsigned, unsigned>> cases = {
        {2, 1, 4}, {3, 1, 3}, {2, 2, 2}, {2, 3, 2}};
    for (auto [p, e, t] : cases) {
        Field f(p, e);
        SimplexCode code = build_simplex(f, t, default_lambda(f), 0);
        GfMatrix c = full_constacyclic_matrix(code);
        int want = 1;
        for (unsigned i = 0; i + 1 < t; ++i) want *= f.q();
        for (unsigned i = 0; i < code.n; ++i) CHECK(row_weight(c.row(i)) == want);
        CHECK(gf_rank(c) == t);
    }
}
