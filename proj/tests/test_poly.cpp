#include "doctest.h"
#include "qt2w/poly.hpp"
#include "qt2w/render.hpp"

#include <random>
#include <tuple>
#include <vector>
#include <stdexcept>

using namespace qt2w;

namespace {

Poly random_poly(const Field& f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<gfelem> elem(0, f.q() - 1);
    std::vector<gfelem> c(deg(rng) + 1);
    for (auto& x : c) x = elem(rng);
    return Poly(f, std::move(c));
}

// reference reduction: substitute x^m -> lambda until the degree drops below m
Poly reduce_by_substitution(Poly p, unsigned m, gfelem lambda) {
    const Field& f = p.field();
    while (p.degree() >= (int)m) {
        std::vector<gfelem> c = p.coeffs();
        gfelem top = c.back();
        std::size_t d = c.size() - 1;
        c.pop_back();
        c[d - m] = f.add(c[d - m], f.mul(lambda, top));
        p = Poly(f, std::move(c));
    }
    return p;
}

}  // namespace

TEST_CASE("ring basics") {
    Field f2(2, 1), f4(2, 2);
    Poly one_x(f2, {1, 1});
    CHECK(poly_add(one_x, one_x).is_zero());                       // characteristic 2
    CHECK(poly_add(one_x, one_x).degree() == Poly::zero_degree);
    Poly ax(f4, {2, 1});                                            // a + x
    CHECK(poly_mul(ax, monomial(f4, 1)) == Poly(f4, {0, 2, 1}));    // a*x + x^2
    Poly any(f4, {3, 0, 2});
    CHECK(poly_mul(any, constant(f4, 1)) == any);
    CHECK(poly_mul(any, Poly(f4)).is_zero());
}

TEST_CASE("normalization strips trailing zeros") {
    Field f(3, 1);
    Poly p(f, {1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().size() == 2);
    CHECK(p.coeff(7) == 0);
}

TEST_CASE("divmod") {
    Field f2(2, 1);
    auto [q, r] = poly_divmod(xn_minus_lambda(f2, 3, 1), Poly(f2, {1, 1}));
    CHECK(q == Poly(f2, {1, 1, 1}));  // x^3+1 = (x+1)(x^2+x+1) over GF(2)
    CHECK(r.is_zero());

    Field f4(2, 2);
    Poly a(f4, {3, 2, 1});
    auto dm = poly_divmod(a, a);
    CHECK(dm.quotient == constant(f4, 1));
    CHECK(dm.remainder.is_zero());

    auto dm2 = poly_divmod(monomial(f4, 2), monomial(f4, 3));
    CHECK(dm2.quotient.is_zero());
    CHECK(dm2.remainder == monomial(f4, 2));

    CHECK_THROWS_AS(poly_divmod(a, Poly(f4)), std::invalid_argument);
}

TEST_CASE("divmod round trip on random inputs") {
    std::mt19937 rng(7);
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        Field f(p, e);
        for (int it = 0; it < 200; ++it) {
            Poly num = random_poly(f, 12, rng);
            Poly den = random_poly(f, 6, rng);
            if (den.is_zero()) continue;
            auto [q, r] = poly_divmod(num, den);
            CHECK(poly_add(poly_mul(den, q), r) == num);
            if (!r.is_zero()) CHECK(r.degree() < den.degree());
        }
    }
}

TEST_CASE("mul_mod_twisted") {
    Field f4(2, 2);
    // no wrap
    CHECK(mul_mod_twisted(monomial(f4, 1), Poly(f4, {2, 1}), 3, 3) == Poly(f4, {0, 2, 1}));
    // b*x^3 wraps to b*b = a
    CHECK(mul_mod_twisted(monomial(f4, 1), Poly(f4, {0, 2, 3}), 3, 3) == Poly(f4, {2, 0, 2}));
    Poly a(f4, {1, 0, 3});
    CHECK(mul_mod_twisted(constant(f4, 1), a, 3, 2) == a);
    CHECK_THROWS_AS(mul_mod_twisted(a, a, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mul_mod_twisted(monomial(f4, 3), a, 3, 2), std::invalid_argument);
}

TEST_CASE("multiplying by x preserves hamming weight, exhaustively m <= 4, q <= 4") {
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        Field f(p, e);
        for (unsigned m = 2; m <= 4; ++m) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < m; ++i) count *= f.q();
            Poly x = monomial(f, 1);
            for (std::uint64_t packed = 0; packed < count; ++packed) {
                std::vector<gfelem> c(m);
                std::uint64_t v = packed;
                for (unsigned i = 0; i < m; ++i) { c[i] = (gfelem)(v % f.q()); v /= f.q(); }
                Poly a(f, std::move(c));
                for (gfelem lambda = 1; lambda < f.q(); ++lambda)
                    CHECK(hamming_weight(mul_mod_twisted(x, a, m, lambda)) == hamming_weight(a));
            }
        }
    }
}

TEST_CASE("mul_mod_twisted agrees with full product plus substitution") {
    std::mt19937 rng(11);
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        Field f(p, e);
        for (int it = 0; it < 200; ++it) {
            unsigned m = 2 + (unsigned)(rng() % 6);
            Poly a = random_poly(f, (int)m - 1, rng);
            Poly b = random_poly(f, (int)m - 1, rng);
            gfelem lambda = 1 + (gfelem)(rng() % (f.q() - 1));
            CHECK(mul_mod_twisted(a, b, m, lambda) ==
                  reduce_by_substitution(poly_mul(a, b), m, lambda));
        }
    }
}

TEST_CASE("hamming weight") {
    Field f4(2, 2);
    CHECK(hamming_weight(Poly(f4, {1, 1})) == 2);
    CHECK(hamming_weight(constant(f4, 3)) == 1);
    CHECK(hamming_weight(Poly(f4)) == 0);
}

TEST_CASE("primitive polynomial enumeration") {
    Field f2(2, 1), f3(3, 1), f4(2, 2);
    CHECK(find_primitive_polynomial(f2, 2, 0) == Poly(f2, {1, 1, 1}));
    // lex order from the constant term up puts x^4+x^3+1 before x^4+x+1
    CHECK(find_primitive_polynomial(f2, 4, 0) == Poly(f2, {1, 0, 0, 1, 1}));
    CHECK(find_primitive_polynomial(f2, 4, 1) == Poly(f2, {1, 1, 0, 0, 1}));
    CHECK(find_primitive_polynomial(f3, 2, 0) == Poly(f3, {2, 1, 1}));  // x^2+x+2
    CHECK(primitive_polynomial_count(f2, 2) == 1);
    CHECK(primitive_polynomial_count(f2, 4) == 2);
    CHECK(primitive_polynomial_count(f4, 3) == 12);
    CHECK_THROWS_AS(find_primitive_polynomial(f2, 4, 2), std::out_of_range);
    CHECK_THROWS_AS(find_primitive_polynomial(f2, 1, 0), std::invalid_argument);
}

TEST_CASE("every returned primitive polynomial has a root of full order") {
    // independent check: walk powers of x in GF(q)[x]/(h) one multiply at a
    // time and record when 1 first reappears
    const std::vector<std::tuple<unsigned, unsigned, unsigned>> cases = {
        {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {3, 1, 2}, {2, 2, 3}};
    for (auto [p, e, t] : cases) {
        Field f(p, e);
        std::uint64_t group = 1;
        for (unsigned i = 0; i < t; ++i) group *= f.q();
        --group;
        for (unsigned idx = 0; idx < primitive_polynomial_count(f, t); ++idx) {
            Poly h = find_primitive_polynomial(f, t, idx);
            CHECK(h.degree() == (int)t);
            CHECK(h.coeffs().back() == 1);
            Poly cur = constant(f, 1);
            Poly x = monomial(f, 1);
            std::uint64_t first_one = 0;
            for (std::uint64_t k = 1; k <= group; ++k) {
                cur = poly_divmod(poly_mul(cur, x), h).remainder;
                if (cur == constant(f, 1)) { first_one = k; break; }
            }
            CHECK(first_one == group);
        }
    }
}

TEST_CASE("field mismatch is rejected") {
    Field f2(2, 1), f4(2, 2);
    CHECK_THROWS_AS(poly_add(Poly(f2, {1}), Poly(f4, {1})), std::invalid_argument);
}

TEST_CASE("rendering") {
    Field f4(2, 2), f3(3, 1);
    CHECK(to_string(Poly(f4)) == "0");
    CHECK(to_string(Poly(f4, {1, 1})) == "1 + x");
    CHECK(to_string(Poly(f4, {3, 1, 2})) == "b + x + a*x^2");
    CHECK(to_string(constant(f4, 3)) == "b");
    CHECK(to_string(Poly(f3, {0, 2, 1})) == "2*x + x^2");
    CHECK(parse_element(f4, "b") == 3);
    CHECK(parse_element(f4, "2") == 2);
    CHECK_THROWS_AS(parse_element(f3, "b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(f4, "5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(f4, "x"), std::invalid_argument);
}
