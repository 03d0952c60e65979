// Consta-cyclic simplex codes and the twistulant matrices that realize them.

#ifndef QT2W_SIMPLEX_HPP
#define QT2W_SIMPLEX_HPP

#include "qt2w/matrix.hpp"
#include "qt2w/poly.hpp"

namespace qt2w {

// An m x m twistulant (lambda-consta-cyclic) matrix: row 0 is the coefficient
// vector of the defining polynomial c, every later row is the previous one
// shifted right with the wrapped entry multiplied by lambda.
struct TwistulantSpec {
    unsigned m = 0;
    gfelem lambda = 1;
    Poly c;
};

GfMatrix twistulant_matrix(const TwistulantSpec& spec);

// Row `row` of the matrix without building the whole thing, straight from the
// closed form: out[v] = c_{v-row} for v >= row, lambda * c_{m-row+v} below.
void twistulant_row(const Poly& c, unsigned m, gfelem lambda, unsigned row,
                    std::span<gfelem> out);

// A lambda-consta-cyclic simplex code of length n = (q^t - 1)/(q - 1),
// dimension t, generated by g = (x^n - lambda)/h for a primitive h of
// degree t. All nonzero codewords have weight q^{t-1}.
struct SimplexCode {
    const Field* field = nullptr;
    unsigned t = 0;
    unsigned n = 0;
    gfelem lambda = 1;
    unsigned h_index = 0;
    Poly h;
    Poly g;
    // Whether gcd(t, q-1) = 1, in which case the code is equivalent to a
    // cyclic code. Informational only.
    bool cyclic_equivalent = false;

    unsigned dimension() const { return t; }
};

// Fails with a diagnostic when (x^n - lambda) is not divisible by the chosen
// h: that signals an incompatible (lambda, h_index) pairing and the caller
// should try another one, not proceed.
SimplexCode build_simplex(const Field& f, unsigned t, gfelem lambda, unsigned h_index);

// The n x n twistulant matrix defined by g; its row space is the code.
GfMatrix full_constacyclic_matrix(const SimplexCode& code);

// Default lambda choice: smallest canonical value of multiplicative order q-1.
gfelem default_lambda(const Field& f);

}  // namespace qt2w

#endif
