#include "qt2w/matrix.hpp"

#include <stdexcept>

namespace qt2w {

const Field& GfMatrix::field() const {
    if (!field_) throw std::logic_error("GfMatrix: detached matrix has no field");
    return *field_;
}

std::vector<std::size_t> independent_row_indices(const GfMatrix& m) {
    const Field& f = m.field();
    // Maintain a reduced workspace; keep the index whenever a row adds rank.
    std::vector<std::vector<gfelem>> ws;      // reduced rows
    std::vector<std::size_t> pivots;          // pivot column per workspace row
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<gfelem> w(m.row(r).begin(), m.row(r).end());
        for (std::size_t k = 0; k < ws.size(); ++k) {
            gfelem x = w[pivots[k]];
            if (x == 0) continue;
            gfelem factor = f.mul(x, f.inv(ws[k][pivots[k]]));
            for (std::size_t c = 0; c < w.size(); ++c)
                w[c] = f.sub(w[c], f.mul(factor, ws[k][c]));
        }
        std::size_t piv = w.size();
        for (std::size_t c = 0; c < w.size(); ++c) {
            if (w[c] != 0) { piv = c; break; }
        }
        if (piv == w.size()) continue;  // dependent row
        ws.push_back(std::move(w));
        pivots.push_back(piv);
        kept.push_back(r);
    }
    return kept;
}

unsigned gf_rank(const GfMatrix& m) { return (unsigned)independent_row_indices(m).size(); }

GfMatrix row_basis(const GfMatrix& m) {
    auto idx = independent_row_indices(m);
    GfMatrix out(m.field(), idx.size(), m.cols());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(i, c, m.at(idx[i], c));
    return out;
}

int row_weight(std::span<const gfelem> row) {
    int w = 0;
    for (gfelem x : row)
        if (x != 0) ++w;
    return w;
}

}  // namespace qt2w
