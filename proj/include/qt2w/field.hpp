// Exact arithmetic in GF(p^e) via exponent/log tables over a primitive modulus.

#ifndef QT2W_FIELD_HPP
#define QT2W_FIELD_HPP

#include <cstdint>
#include <vector>

namespace qt2w {

// Canonical element value in [0, q). For e > 1 the value packs the residue
// polynomial's coefficients in base p, constant digit least significant, so
// in GF(4) the class of x is 2 and 1+x is 3.
using gfelem = std::uint32_t;

class Field {
public:
    // Builds GF(p^e). The modulus is the lexicographically smallest primitive
    // monic degree-e polynomial over GF(p), coefficients compared from the
    // constant term up, so construction is deterministic.
    Field(std::uint32_t p, std::uint32_t e, std::uint64_t size_bound = 1u << 20);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    // Modulus coefficients c0..c_{e-1} over GF(p); the leading 1 is implicit.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    gfelem add(gfelem a, gfelem b) const;
    gfelem sub(gfelem a, gfelem b) const { return add(a, neg(b)); }
    gfelem neg(gfelem a) const;
    gfelem mul(gfelem a, gfelem b) const;
    gfelem inv(gfelem a) const;           // a != 0
    gfelem pow(gfelem a, long long n) const;

    // Smallest n >= 1 with a^n = 1; divides q-1. a != 0.
    std::uint32_t element_order(gfelem a) const;
    // All elements of exact multiplicative order n, ascending. n must divide q-1.
    std::vector<gfelem> elements_of_order(std::uint32_t n) const;

    const std::vector<gfelem>& exp_table() const { return exp_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    void check_element(gfelem a) const;

private:
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<gfelem> exp_;             // exp_[i] = x^i, period q-1
    std::vector<std::uint32_t> log_;      // log_[exp_[i]] = i; log_[0] unused

    gfelem mul_by_x(gfelem a, const std::vector<std::uint32_t>& modulus) const;
    void find_modulus();
    void build_tables();
};

inline Field make_field(std::uint32_t p, std::uint32_t e) { return Field(p, e); }

// Multiplicative order of a residue in Z/p (helper shared with the modulus
// search; exposed for tests).
std::uint32_t order_mod_p(std::uint32_t a, std::uint32_t p);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

}  // namespace qt2w

#endif
