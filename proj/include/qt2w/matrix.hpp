// Dense matrices over GF(q) with the Gaussian-elimination helpers the code
// constructions need (rank, first-independent-row basis).

#ifndef QT2W_MATRIX_HPP
#define QT2W_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qt2w/field.hpp"

namespace qt2w {

class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    const Field& field() const;
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    gfelem at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, gfelem x) { v_[r * cols_ + c] = x; }

    std::span<const gfelem> row(std::size_t r) const { return {v_.data() + r * cols_, cols_}; }
    std::span<gfelem> row(std::size_t r) { return {v_.data() + r * cols_, cols_}; }

    bool operator==(const GfMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }
    bool operator!=(const GfMatrix& o) const { return !(*this == o); }

private:
    const Field* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<gfelem> v_;
};

// Indices of the first maximal set of linearly independent rows, in order.
std::vector<std::size_t> independent_row_indices(const GfMatrix& m);

unsigned gf_rank(const GfMatrix& m);

// The rows picked by independent_row_indices, with their original content.
GfMatrix row_basis(const GfMatrix& m);

int row_weight(std::span<const gfelem> row);

}  // namespace qt2w

#endif
