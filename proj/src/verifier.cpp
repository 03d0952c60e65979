#include "qt2w/verifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace qt2w {

GfMatrix selected_block_rows(const QtDecomposition& dec, const std::vector<unsigned>& columns) {
    if (columns.empty()) throw std::invalid_argument("selected_block_rows: empty selection");
    for (unsigned c : columns)
        if (c < 1 || c > dec.r)
            throw std::invalid_argument("selected_block_rows: column index out of range");
    const Field& f = dec.field();
    const unsigned m = dec.m;
    GfMatrix out(f, (std::size_t)dec.r * m, (std::size_t)columns.size() * m);
    for (unsigned i = 0; i < dec.r; ++i) {
        std::vector<Poly> polys = block_poly_row(dec, i);
        for (unsigned j1 = 0; j1 < m; ++j1) {
            auto row = out.row((std::size_t)i * m + j1);
            for (std::size_t s = 0; s < columns.size(); ++s) {
                // row j1 of the twistulant block is x^{j1} * a mod (x^m - lambda)
                twistulant_row(polys[columns[s] - 1], m, dec.lambda(), j1,
                               row.subspan(s * m, m));
            }
        }
    }
    return out;
}

LinearCodeInstance build_selected_generator(const QtDecomposition& dec,
                                            const std::vector<unsigned>& columns) {
    GfMatrix rows = selected_block_rows(dec, columns);
    LinearCodeInstance code = code_from_rows(rows);
    if (code.k == 0)
        throw std::invalid_argument("build_selected_generator: all selected polynomials are zero");
    return code;
}

LinearCodeInstance code_from_rows(const GfMatrix& rows) {
    LinearCodeInstance code;
    code.field = &rows.field();
    code.generator = row_basis(rows);
    code.length = (unsigned)rows.cols();
    code.k = (unsigned)code.generator.rows();
    return code;
}

WeightDistribution weight_distribution(const LinearCodeInstance& code,
                                       std::uint64_t enumeration_bound) {
    const Field& f = *code.field;
    const unsigned k = code.k;
    const unsigned n = code.length;
    std::uint64_t messages = 1;
    for (unsigned i = 0; i < k; ++i) {
        messages *= f.q();
        if (messages > enumeration_bound)
            throw std::runtime_error("weight_distribution: q^k exceeds enumeration bound " +
                                     std::to_string(enumeration_bound));
    }

    WeightDistribution dist;
    if (k == 0) return dist;

    // Base-q odometer over message digits. Stepping digit i from value v to
    // v' changes the codeword by (elem(v') - elem(v)) * row_i, so carries and
    // increments are both single row updates.
    std::vector<gfelem> cw(n, 0);
    std::vector<gfelem> digits(k, 0);
    std::vector<gfelem> step(f.q());  // delta from canonical value v to v+1 (wrapping)
    for (gfelem v = 0; v < f.q(); ++v) step[v] = f.sub((v + 1) % f.q(), v);

    auto bump = [&](unsigned row, gfelem delta) {
        auto r = code.generator.row(row);
        if (delta == 1) {
            for (unsigned j = 0; j < n; ++j) cw[j] = f.add(cw[j], r[j]);
        } else {
            for (unsigned j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(delta, r[j]));
        }
    };

    for (std::uint64_t count = 1; count < messages; ++count) {
        unsigned i = 0;
        while (digits[i] == f.q() - 1) {
            bump(i, step[f.q() - 1]);
            digits[i] = 0;
            ++i;
        }
        bump(i, step[digits[i]]);
        ++digits[i];
        int w = 0;
        for (gfelem x : cw)
            if (x != 0) ++w;
        ++dist.counts[w];
    }
    return dist;
}

std::optional<std::pair<int, int>> is_two_weight(const WeightDistribution& dist) {
    if (dist.counts.size() != 2) return std::nullopt;
    auto it = dist.counts.begin();
    int w1 = it->first;
    int w2 = std::next(it)->first;
    if (w1 == 0) return std::nullopt;  // zero weight means duplicate codewords upstream
    return std::make_pair(w1, w2);
}

bool is_projective(const LinearCodeInstance& code) {
    const Field& f = *code.field;
    std::set<std::vector<gfelem>> seen;
    for (unsigned c = 0; c < code.length; ++c) {
        std::vector<gfelem> col(code.k);
        for (unsigned r = 0; r < code.k; ++r) col[r] = code.generator.at(r, c);
        gfelem lead = 0;
        for (gfelem x : col)
            if (x != 0) { lead = x; break; }
        if (lead == 0) return false;  // zero coordinate
        const gfelem scale = f.inv(lead);
        for (gfelem& x : col) x = f.mul(x, scale);
        if (!seen.insert(std::move(col)).second) return false;  // dependent pair
    }
    return true;
}

bool oracle_weights_equal_row_sums(const QtDecomposition& dec, const std::vector<unsigned>& columns,
                                   const WeightMatrix& w, std::uint64_t enumeration_bound) {
    const std::vector<int> sums = row_sums(w, columns);
    GfMatrix rows = selected_block_rows(dec, columns);
    for (unsigned i = 0; i < dec.r; ++i)
        for (unsigned j1 = 0; j1 < dec.m; ++j1)
            if (row_weight(rows.row((std::size_t)i * dec.m + j1)) != sums[i]) return false;

    LinearCodeInstance code = code_from_rows(rows);
    if (code.k == 0) return false;
    WeightDistribution dist = weight_distribution(code, enumeration_bound);
    std::set<int> support;
    for (auto& [weight, count] : dist.counts) support.insert(weight);
    return support == std::set<int>(sums.begin(), sums.end());
}

}  // namespace qt2w
