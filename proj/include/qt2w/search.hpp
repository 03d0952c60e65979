// Subset search over the circulant weight matrix: find column sets whose row
// sums take exactly two distinct nonzero values.

#ifndef QT2W_SEARCH_HPP
#define QT2W_SEARCH_HPP

#include <cstdint>

#include "qt2w/qtform.hpp"

namespace qt2w {

struct SearchConfig {
    enum class Mode { exhaustive, sampled };

    unsigned p_max = 0;  // 0 means floor(r/2)
    Mode mode = Mode::exhaustive;
    std::uint64_t budget = 10'000'000;  // max subsets examined
    std::uint64_t rng_seed = 0;         // sampled mode only
    // Collapse hits that are cyclic rotations of each other (W is circulant,
    // so rotations share the same weight pair) to the lexicographically least
    // rotation. Off = raw mode.
    bool canonicalize = true;
};

struct SearchHit {
    std::vector<unsigned> columns;  // sorted, 1-based
    int w1 = 0;
    int w2 = 0;

    unsigned p() const { return (unsigned)columns.size(); }
    bool operator==(const SearchHit& o) const {
        return columns == o.columns && w1 == o.w1 && w2 == o.w2;
    }
};

struct SearchResult {
    std::vector<SearchHit> hits;
    // Subsets whose row sums take exactly the two values {0, w} with w below
    // the full row total. Not two-weight themselves, but their complements
    // are; the pipeline turns them into hits the plain complement pass cannot
    // reach.
    std::vector<SearchHit> complement_seeds;  // w1 == 0
    bool complete = true;
    std::uint64_t examined = 0;
};

// Component i is the sum of W[i][j] over the selected 1-based columns.
std::vector<int> row_sums(const WeightMatrix& w, const std::vector<unsigned>& columns);

// Lexicographically least cyclic rotation of a 1-based column set.
std::vector<unsigned> canonical_rotation(const std::vector<unsigned>& columns, unsigned r);

SearchResult find_two_weight_subsets(const WeightMatrix& w, const SearchConfig& cfg);

// Hit for the unselected columns; weights are (total - w2, total - w1) where
// total is the common row sum. Requires a nonempty complement and w2 < total
// (otherwise the complement has a zero row sum and is not two-weight).
SearchHit complement_hit(const SearchHit& hit, const WeightMatrix& w);

}  // namespace qt2w

#endif
