// Permutation of a consta-cyclic matrix of composite length n = m*r into
// quasi-twisted block form, extraction of the r defining polynomials, and the
// circulant weight matrix built from them.

#ifndef QT2W_QTFORM_HPP
#define QT2W_QTFORM_HPP

#include "qt2w/simplex.hpp"

namespace qt2w {

// Index permutation that groups residues mod r: position i*m + j maps to
// j*r + i. Applied identically to rows and columns.
std::vector<std::uint32_t> qt_permutation(unsigned n, unsigned m, unsigned r);

struct QtDecomposition {
    SimplexCode code;
    unsigned m = 0;
    unsigned r = 0;
    std::vector<Poly> defining_polys;  // a_1 .. a_r, each of degree < m

    gfelem lambda() const { return code.lambda; }
    const Field& field() const { return *code.field; }
};

// Permute the full consta-cyclic matrix and read the defining polynomials off
// the first block-row. The extraction is cross-checked against the direct
// coefficient map a_i[j] = g_{j*r + i - 1}.
QtDecomposition decompose(const SimplexCode& code, unsigned m, unsigned r);

// Block-row i of the defining-polynomial matrix: row 0 is (a_1 .. a_r); each
// later row is the previous one rotated right by one with the wrapped entry
// multiplied by x, reduced mod x^m - lambda.
std::vector<Poly> block_poly_row(const QtDecomposition& dec, unsigned i);

// r x r circulant matrix of defining-polynomial weights. Every row sums to
// q^{t-1}.
struct WeightMatrix {
    unsigned r = 0;
    std::vector<int> first_row;  // d_1 .. d_r

    int at(unsigned i, unsigned j) const { return first_row[(j + r - i % r) % r]; }
    int row_total() const;  // common row sum
};

WeightMatrix weight_matrix(const QtDecomposition& dec);

// Reference constructions used as the ground truth for the block structure.
GfMatrix permuted_matrix(const SimplexCode& code, unsigned m, unsigned r);
GfMatrix realize_block_matrix(const QtDecomposition& dec);

// Entry-by-entry comparison of the permuted matrix against the block
// realization, without materializing either (O(n) memory).
bool qt_structure_consistent(const SimplexCode& code, unsigned m, unsigned r);

}  // namespace qt2w

#endif
