// Brute-force ground truth: materialize the generator of a selected QT code,
// enumerate every nonzero codeword, and confirm dimension, weights and
// projectivity independently of the weight-matrix shortcut.

#ifndef QT2W_VERIFIER_HPP
#define QT2W_VERIFIER_HPP

#include <map>
#include <optional>
#include <utility>

#include "qt2w/search.hpp"

namespace qt2w {

inline constexpr std::uint64_t default_enum_bound = std::uint64_t(1) << 24;

struct LinearCodeInstance {
    const Field* field = nullptr;
    GfMatrix generator;  // k x length row basis, linearly independent rows
    unsigned length = 0;
    unsigned k = 0;
};

// All r*m realized rows of the block matrix restricted to the selected
// 1-based block-columns (no reduction).
GfMatrix selected_block_rows(const QtDecomposition& dec, const std::vector<unsigned>& columns);

// Row basis (first linearly independent rows) of the selected block rows;
// k is the computed rank, which puncturing may drop below t.
LinearCodeInstance build_selected_generator(const QtDecomposition& dec,
                                            const std::vector<unsigned>& columns);

// Reduce arbitrary generator rows to a basis (used for externally supplied
// matrices).
LinearCodeInstance code_from_rows(const GfMatrix& rows);

struct WeightDistribution {
    std::map<int, std::uint64_t> counts;  // weight -> number of nonzero codewords
};

// Exact distribution over all q^k - 1 nonzero codewords, enumerated in
// base-q message order with incremental row updates. Errors out when q^k
// exceeds the bound.
WeightDistribution weight_distribution(const LinearCodeInstance& code,
                                       std::uint64_t enumeration_bound = default_enum_bound);

// The sorted pair when the support has exactly two weights, else nullopt.
std::optional<std::pair<int, int>> is_two_weight(const WeightDistribution& dist);

// True iff no generator column is zero and no column is a scalar multiple of
// another (equivalently, dual minimum distance >= 3).
bool is_projective(const LinearCodeInstance& code);

// End-to-end consistency between the search shortcut and ground truth: the
// weight-distribution support must equal the set of row-sum values of W over
// the selected columns, and every realized block row's weight must equal its
// block-row's sum.
bool oracle_weights_equal_row_sums(const QtDecomposition& dec, const std::vector<unsigned>& columns,
                                   const WeightMatrix& w,
                                   std::uint64_t enumeration_bound = default_enum_bound);

}  // namespace qt2w

#endif
