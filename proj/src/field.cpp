#include "qt2w/field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qt2w {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

static std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) r = (unsigned __int128)r * a % m;
        a = (unsigned __int128)a * a % m;
        n >>= 1;
    }
    return r;
}

std::uint32_t order_mod_p(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) return 0;
    std::uint64_t ord = p - 1;
    for (std::uint64_t ell : prime_factors(p - 1)) {
        while (ord % ell == 0 && pow_mod_u64(a, ord / ell, p) == 1) ord /= ell;
    }
    return (std::uint32_t)ord;
}

Field::Field(std::uint32_t p, std::uint32_t e, std::uint64_t size_bound) : p_(p), e_(e) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Field: p = " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 31) throw std::invalid_argument("Field: extension degree out of range");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > size_bound)
            throw std::invalid_argument("Field: p^e exceeds size bound " + std::to_string(size_bound));
    }
    q_ = (std::uint32_t)q;
    find_modulus();
    build_tables();
}

// Multiply the residue polynomial of a by x and reduce by the monic modulus.
gfelem Field::mul_by_x(gfelem a, const std::vector<std::uint32_t>& modulus) const {
    std::uint32_t digits[32];
    gfelem v = a;
    for (std::uint32_t i = 0; i < e_; ++i) { digits[i] = v % p_; v /= p_; }
    std::uint32_t over = digits[e_ - 1];
    for (std::uint32_t i = e_ - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    if (over) {
        for (std::uint32_t i = 0; i < e_; ++i)
            digits[i] = (digits[i] + (p_ - modulus[i]) % p_ * over) % p_;
    }
    gfelem out = 0;
    for (std::uint32_t i = e_; i-- > 0;) out = out * p_ + digits[i];
    return out;
}

void Field::find_modulus() {
    if (e_ == 1) {
        // Candidates x + c in ascending c; the root is p - c.
        for (std::uint32_t c = 1; c < p_; ++c) {
            if (order_mod_p((p_ - c) % p_, p_) == p_ - 1) {
                modulus_ = {c};
                return;
            }
        }
        throw std::logic_error("Field: no primitive linear modulus found");
    }
    // Walk coefficient vectors (c0..c_{e-1}) in ascending lex order with c0
    // most significant. x is primitive iff its power walk first returns to 1
    // after exactly q-1 steps; imprimitive candidates exit early.
    std::vector<std::uint32_t> c(e_, 0);
    c[0] = 1;
    std::uint64_t n = q_ - 1;
    auto advance = [&]() -> bool {
        for (std::uint32_t i = e_; i-- > 0;) {
            if (++c[i] < p_) return true;
            c[i] = 0;
        }
        return false;
    };
    do {
        if (c[0] == 0) continue;
        gfelem cur = 1;
        for (std::uint64_t k = 1; k <= n; ++k) {
            cur = mul_by_x(cur, c);
            if (cur == 1) {
                if (k == n) {
                    modulus_ = c;
                    return;
                }
                break;
            }
        }
    } while (advance());
    throw std::logic_error("Field: no primitive modulus found");
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    gfelem cur = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_by_x(cur, modulus_);
    }
    if (cur != 1) throw std::logic_error("Field: exp table period mismatch");
}

void Field::check_element(gfelem a) const {
    if (a >= q_)
        throw std::invalid_argument("Field: element value " + std::to_string(a) +
                                    " out of range for q=" + std::to_string(q_));
}

gfelem Field::add(gfelem a, gfelem b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    gfelem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

gfelem Field::neg(gfelem a) const {
    check_element(a);
    if (p_ == 2) return a;
    gfelem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

gfelem Field::mul(gfelem a, gfelem b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    return exp_[((std::uint64_t)log_[a] + log_[b]) % (q_ - 1)];
}

gfelem Field::inv(gfelem a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("Field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

gfelem Field::pow(gfelem a, long long n) const {
    check_element(a);
    if (a == 0) {
        if (n < 0) throw std::invalid_argument("Field: negative power of zero");
        return n == 0 ? 1 : 0;
    }
    long long m = q_ - 1;
    long long idx = ((long long)log_[a] * (n % m)) % m;
    if (idx < 0) idx += m;
    return exp_[idx];
}

std::uint32_t Field::element_order(gfelem a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("Field: order of zero is undefined");
    return (q_ - 1) / std::gcd<std::uint32_t>(log_[a], q_ - 1);
}

std::vector<gfelem> Field::elements_of_order(std::uint32_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw std::invalid_argument("Field: order " + std::to_string(n) + " does not divide q-1");
    std::vector<gfelem> out;
    for (gfelem a = 1; a < q_; ++a)
        if (element_order(a) == n) out.push_back(a);
    return out;
}

}  // namespace qt2w
