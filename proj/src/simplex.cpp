#include "qt2w/simplex.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qt2w {

GfMatrix twistulant_matrix(const TwistulantSpec& spec) {
    const Field& f = spec.c.field();
    f.check_element(spec.lambda);
    if (spec.c.degree() >= (int)spec.m)
        throw std::invalid_argument("twistulant_matrix: defining polynomial degree not below m");
    GfMatrix out(f, spec.m, spec.m);
    for (unsigned j = 0; j < spec.m; ++j) out.set(0, j, spec.c.coeff(j));
    for (unsigned i = 1; i < spec.m; ++i) {
        out.set(i, 0, f.mul(spec.lambda, out.at(i - 1, spec.m - 1)));
        for (unsigned j = 1; j < spec.m; ++j) out.set(i, j, out.at(i - 1, j - 1));
    }
    return out;
}

void twistulant_row(const Poly& c, unsigned m, gfelem lambda, unsigned row,
                    std::span<gfelem> out) {
    const Field& f = c.field();
    if (out.size() != m) throw std::invalid_argument("twistulant_row: output span size mismatch");
    if (row >= m) throw std::invalid_argument("twistulant_row: row index out of range");
    for (unsigned v = 0; v < m; ++v) {
        out[v] = v >= row ? c.coeff(v - row) : f.mul(lambda, c.coeff(m - row + v));
    }
}

gfelem default_lambda(const Field& f) { return f.elements_of_order(f.q() - 1).front(); }

SimplexCode build_simplex(const Field& f, unsigned t, gfelem lambda, unsigned h_index) {
    f.check_element(lambda);
    if (t < 2) throw std::invalid_argument("build_simplex: t must be >= 2");
    if (lambda == 0 || f.element_order(lambda) != f.q() - 1)
        throw std::invalid_argument("build_simplex: lambda must have multiplicative order q-1");
    std::uint64_t qt = 1;
    for (unsigned i = 0; i < t; ++i) {
        qt *= f.q();
        if (qt > (std::uint64_t(1) << 40))
            throw std::invalid_argument("build_simplex: q^t too large");
    }
    const unsigned n = (unsigned)((qt - 1) / (f.q() - 1));
    Poly h = find_primitive_polynomial(f, t, h_index);
    auto [g, rem] = poly_divmod(xn_minus_lambda(f, n, lambda), h);
    if (!rem.is_zero())
        throw std::runtime_error(
            "build_simplex: x^" + std::to_string(n) + " - lambda is not divisible by h (lambda=" +
            std::to_string(lambda) + ", h_index=" + std::to_string(h_index) +
            "); the pairing is incompatible, try another h_index or lambda");
    SimplexCode code;
    code.field = &f;
    code.t = t;
    code.n = n;
    code.lambda = lambda;
    code.h_index = h_index;
    code.h = std::move(h);
    code.g = std::move(g);
    code.cyclic_equivalent = std::gcd(t, f.q() - 1) == 1;
    if (code.g.degree() != (int)(n - t))
        throw std::logic_error("build_simplex: generator degree mismatch");
    return code;
}

GfMatrix full_constacyclic_matrix(const SimplexCode& code) {
    const Field& f = *code.field;
    GfMatrix out(f, code.n, code.n);
    for (unsigned i = 0; i < code.n; ++i)
        twistulant_row(code.g, code.n, code.lambda, i, out.row(i));
    return out;
}

}  // namespace qt2w
