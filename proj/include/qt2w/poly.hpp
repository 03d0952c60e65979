// Polynomials over GF(q): coefficient vectors, least significant first.

#ifndef QT2W_POLY_HPP
#define QT2W_POLY_HPP

#include <limits>
#include <vector>

#include "qt2w/field.hpp"

namespace qt2w {

class Poly {
public:
    // Degree reported for the zero polynomial; a large negative sentinel
    // rather than -1 so degree bookkeeping bugs blow up instead of
    // off-by-one-ing quietly.
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    Poly() = default;  // detached zero; only useful as a container placeholder
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<gfelem> coeffs);

    const Field& field() const;
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? zero_degree : (int)coeffs_.size() - 1; }

    // Coefficient of x^i; zero beyond the stored degree.
    gfelem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<gfelem>& coeffs() const { return coeffs_; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    const Field* field_ = nullptr;
    std::vector<gfelem> coeffs_;  // normalized: highest stored coefficient nonzero
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, gfelem s);

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

// num = den*quotient + remainder, degree(remainder) < degree(den). den != 0.
PolyDivMod poly_divmod(const Poly& num, const Poly& den);

// a*b reduced by x^m -> lambda. Requires degree(a), degree(b) < m, lambda != 0.
Poly mul_mod_twisted(const Poly& a, const Poly& b, unsigned m, gfelem lambda);

// Number of nonzero coefficients.
int hamming_weight(const Poly& a);

Poly monomial(const Field& f, unsigned degree, gfelem coeff = 1);
Poly constant(const Field& f, gfelem c);
// x^n - lambda
Poly xn_minus_lambda(const Field& f, unsigned n, gfelem lambda);

// The index-th monic primitive polynomial of degree t over the given field,
// coefficient vectors enumerated in ascending lex order from the constant
// term up. Primitivity is certified by checking that the class of x in
// GF(q)[x]/(h) has multiplicative order exactly q^t - 1.
Poly find_primitive_polynomial(const Field& f, unsigned t, unsigned index);

// phi(q^t - 1) / t
std::uint64_t primitive_polynomial_count(const Field& f, unsigned t);

}  // namespace qt2w

#endif
