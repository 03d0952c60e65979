#include "qt2w/qtform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qt2w {

std::vector<std::uint32_t> qt_permutation(unsigned n, unsigned m, unsigned r) {
    if ((std::uint64_t)m * r != n)
        throw std::invalid_argument("qt_permutation: n != m*r");
    std::vector<std::uint32_t> perm(n);
    std::size_t pos = 0;
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < m; ++j) perm[pos++] = j * r + i;
    return perm;
}

GfMatrix permuted_matrix(const SimplexCode& code, unsigned m, unsigned r) {
    const auto perm = qt_permutation(code.n, m, r);
    GfMatrix C = full_constacyclic_matrix(code);
    GfMatrix out(*code.field, code.n, code.n);
    for (unsigned u = 0; u < code.n; ++u)
        for (unsigned v = 0; v < code.n; ++v) out.set(u, v, C.at(perm[u], perm[v]));
    return out;
}

QtDecomposition decompose(const SimplexCode& code, unsigned m, unsigned r) {
    if ((std::uint64_t)m * r != code.n)
        throw std::invalid_argument("decompose: m*r = " + std::to_string((std::uint64_t)m * r) +
                                    " does not match n = " + std::to_string(code.n));
    const Field& f = *code.field;
    const auto perm = qt_permutation(code.n, m, r);
    QtDecomposition dec;
    dec.code = code;
    dec.m = m;
    dec.r = r;
    dec.defining_polys.reserve(r);
    // The permuted matrix's row 0 is g read through the column permutation,
    // so the first block-row's defining polynomials come straight off it.
    // The full block structure is validated against this extraction by
    // qt_structure_consistent / realize_block_matrix.
    for (unsigned i = 0; i < r; ++i) {
        std::vector<gfelem> c(m);
        for (unsigned j = 0; j < m; ++j) c[j] = code.g.coeff(perm[(std::size_t)i * m + j]);
        dec.defining_polys.emplace_back(f, std::move(c));
    }
    return dec;
}

// x * p mod (x^m - lambda); for m = 1 the class of x is lambda itself.
static Poly x_times(const Poly& p, unsigned m, gfelem lambda) {
    if (m == 1) return poly_scale(p, lambda);
    return mul_mod_twisted(monomial(p.field(), 1), p, m, lambda);
}

std::vector<Poly> block_poly_row(const QtDecomposition& dec, unsigned i) {
    if (i >= dec.r) throw std::invalid_argument("block_poly_row: index out of range");
    std::vector<Poly> row = dec.defining_polys;
    for (unsigned s = 0; s < i; ++s) {
        Poly wrapped = x_times(row.back(), dec.m, dec.lambda());
        row.pop_back();
        row.insert(row.begin(), std::move(wrapped));
    }
    return row;
}

int WeightMatrix::row_total() const {
    return std::accumulate(first_row.begin(), first_row.end(), 0);
}

WeightMatrix weight_matrix(const QtDecomposition& dec) {
    WeightMatrix w;
    w.r = dec.r;
    w.first_row.reserve(dec.r);
    for (const Poly& p : dec.defining_polys) w.first_row.push_back(hamming_weight(p));
    return w;
}

GfMatrix realize_block_matrix(const QtDecomposition& dec) {
    const Field& f = dec.field();
    const unsigned n = dec.m * dec.r;
    GfMatrix out(f, n, n);
    for (unsigned i = 0; i < dec.r; ++i) {
        std::vector<Poly> polys = block_poly_row(dec, i);
        for (unsigned j2 = 0; j2 < dec.r; ++j2) {
            for (unsigned j1 = 0; j1 < dec.m; ++j1) {
                auto row = out.row((std::size_t)i * dec.m + j1);
                twistulant_row(polys[j2], dec.m, dec.lambda(), j1,
                               row.subspan((std::size_t)j2 * dec.m, dec.m));
            }
        }
    }
    return out;
}

bool qt_structure_consistent(const SimplexCode& code, unsigned m, unsigned r) {
    const Field& f = *code.field;
    const unsigned n = code.n;
    const auto perm = qt_permutation(n, m, r);
    QtDecomposition dec = decompose(code, m, r);

    // Padded coefficient buffers keep the hot loop allocation-free; the
    // x-shift mod (x^m - lambda) on such a buffer is a rotate with one
    // multiply: (a_0..a_{m-1}) -> (lambda*a_{m-1}, a_0, .., a_{m-2}).
    auto x_shift = [&](std::span<gfelem> buf) {
        gfelem top = f.mul(code.lambda, buf[m - 1]);
        for (unsigned j = m - 1; j > 0; --j) buf[j] = buf[j - 1];
        buf[0] = top;
    };
    std::vector<gfelem> row_polys(n), work(n), source_row(n);
    for (unsigned j2 = 0; j2 < r; ++j2)
        for (unsigned j = 0; j < m; ++j)
            row_polys[(std::size_t)j2 * m + j] = dec.defining_polys[j2].coeff(j);

    for (unsigned i = 0; i < r; ++i) {
        if (i > 0) {
            // rotate the block-row right: the wrapped entry picks up an x
            std::rotate(row_polys.begin(), row_polys.end() - m, row_polys.end());
            x_shift(std::span<gfelem>(row_polys.data(), m));
        }
        work = row_polys;
        for (unsigned j1 = 0; j1 < m; ++j1) {
            const unsigned u = i * m + j1;
            twistulant_row(code.g, n, code.lambda, perm[u], source_row);
            for (unsigned v = 0; v < n; ++v)
                if (source_row[perm[v]] != work[v]) return false;
            if (j1 + 1 < m)
                for (unsigned j2 = 0; j2 < r; ++j2)
                    x_shift(std::span<gfelem>(work.data() + (std::size_t)j2 * m, m));
        }
    }
    return true;
}

}  // namespace qt2w
