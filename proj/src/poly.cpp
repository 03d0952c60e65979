#include "qt2w/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qt2w {

static void normalize(std::vector<gfelem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly::Poly(const Field& f, std::vector<gfelem> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
    for (gfelem c : coeffs_) f.check_element(c);
    normalize(coeffs_);
}

const Field& Poly::field() const {
    if (!field_) throw std::logic_error("Poly: detached polynomial has no field");
    return *field_;
}

static const Field& common_field(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    if (f != b.field()) throw std::invalid_argument("Poly: operands belong to different fields");
    return f;
}

Poly poly_add(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    std::vector<gfelem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    std::vector<gfelem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(out));
}

Poly poly_scale(const Poly& a, gfelem s) {
    const Field& f = a.field();
    std::vector<gfelem> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeff(i), s);
    return Poly(f, std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<gfelem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        gfelem ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(ai, b.coeff(j)));
    }
    return Poly(f, std::move(out));
}

PolyDivMod poly_divmod(const Poly& num, const Poly& den) {
    const Field& f = common_field(num, den);
    if (den.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<gfelem> rem = num.coeffs();
    if ((int)rem.size() < (int)den.coeffs().size())
        return {Poly(f), Poly(f, std::move(rem))};
    const std::size_t dd = den.coeffs().size();  // degree(den) + 1
    std::vector<gfelem> quot(rem.size() - dd + 1, 0);
    const gfelem lead_inv = f.inv(den.coeffs().back());
    for (std::size_t k = rem.size(); k >= dd; --k) {
        const std::size_t pos = k - 1;  // coefficient being eliminated
        const gfelem factor = f.mul(rem[pos], lead_inv);
        if (factor == 0) continue;
        const std::size_t shift = pos - (dd - 1);
        quot[shift] = factor;
        for (std::size_t i = 0; i < dd; ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, den.coeff(i)));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly mul_mod_twisted(const Poly& a, const Poly& b, unsigned m, gfelem lambda) {
    const Field& f = common_field(a, b);
    f.check_element(lambda);
    if (lambda == 0) throw std::invalid_argument("mul_mod_twisted: lambda must be nonzero");
    if (a.degree() >= (int)m || b.degree() >= (int)m)
        throw std::invalid_argument("mul_mod_twisted: operand degree not below m");
    std::vector<gfelem> buf(2 * m, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        gfelem ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            buf[i + j] = f.add(buf[i + j], f.mul(ai, b.coeff(j)));
    }
    // fold the upper half back with x^m -> lambda; one pass suffices since
    // the product degree is at most 2m-2
    for (std::size_t i = 2 * m - 1; i >= m; --i) {
        if (buf[i] != 0) buf[i - m] = f.add(buf[i - m], f.mul(lambda, buf[i]));
    }
    buf.resize(m);
    return Poly(f, std::move(buf));
}

int hamming_weight(const Poly& a) {
    int w = 0;
    for (gfelem c : a.coeffs())
        if (c != 0) ++w;
    return w;
}

Poly monomial(const Field& f, unsigned degree, gfelem coeff) {
    std::vector<gfelem> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(f, std::move(c));
}

Poly constant(const Field& f, gfelem c) { return Poly(f, {c}); }

Poly xn_minus_lambda(const Field& f, unsigned n, gfelem lambda) {
    std::vector<gfelem> c(n + 1, 0);
    c[0] = f.neg(lambda);
    c[n] = 1;
    return Poly(f, std::move(c));
}

// ---- primitive polynomial search -------------------------------------------

static Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) {
    return poly_divmod(poly_mul(a, b), mod).remainder;
}

static Poly poly_powmod(const Poly& base, std::uint64_t n, const Poly& mod) {
    Poly result = constant(base.field(), 1);
    Poly b = poly_divmod(base, mod).remainder;
    while (n) {
        if (n & 1) result = poly_mulmod(result, b, mod);
        b = poly_mulmod(b, b, mod);
        n >>= 1;
    }
    return result;
}

static std::uint64_t pow_checked(std::uint64_t q, unsigned t) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (v > (std::uint64_t(1) << 48) / q)
            throw std::invalid_argument("primitive polynomial search: q^t too large");
        v *= q;
    }
    return v;
}

static bool root_has_full_order(const Poly& h, std::uint64_t group_order,
                                const std::vector<std::uint64_t>& factors) {
    if (h.coeff(0) == 0) return false;  // x divides h
    const Field& f = h.field();
    Poly x = monomial(f, 1);
    if (poly_powmod(x, group_order, h) != constant(f, 1)) return false;
    for (std::uint64_t ell : factors)
        if (poly_powmod(x, group_order / ell, h) == constant(f, 1)) return false;
    return true;
}

Poly find_primitive_polynomial(const Field& f, unsigned t, unsigned index) {
    if (t < 2) throw std::invalid_argument("find_primitive_polynomial: degree must be >= 2");
    const std::uint64_t group_order = pow_checked(f.q(), t) - 1;
    const auto factors = prime_factors(group_order);
    std::vector<gfelem> c(t, 0);
    c[0] = 1;
    unsigned found = 0;
    auto advance = [&]() -> bool {
        for (unsigned i = t; i-- > 0;) {
            if (++c[i] < f.q()) return true;
            c[i] = 0;
        }
        return false;
    };
    do {
        if (c[0] == 0) continue;
        std::vector<gfelem> coeffs = c;
        coeffs.push_back(1);
        Poly h(f, std::move(coeffs));
        if (root_has_full_order(h, group_order, factors)) {
            if (found == index) return h;
            ++found;
        }
    } while (advance());
    throw std::out_of_range("find_primitive_polynomial: index " + std::to_string(index) +
                            " out of range (only " + std::to_string(found) + " primitive polynomials)");
}

std::uint64_t primitive_polynomial_count(const Field& f, unsigned t) {
    if (t < 2) throw std::invalid_argument("primitive_polynomial_count: degree must be >= 2");
    std::uint64_t n = pow_checked(f.q(), t) - 1;
    std::uint64_t phi = n;
    for (std::uint64_t ell : prime_factors(n)) phi = phi / ell * (ell - 1);
    return phi / t;
}

}  // namespace qt2w
