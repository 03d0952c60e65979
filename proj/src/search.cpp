#include "qt2w/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace qt2w {

std::vector<int> row_sums(const WeightMatrix& w, const std::vector<unsigned>& columns) {
    if (columns.empty()) throw std::invalid_argument("row_sums: empty column subset");
    for (unsigned c : columns)
        if (c < 1 || c > w.r) throw std::invalid_argument("row_sums: column index out of range");
    std::vector<int> out(w.r, 0);
    for (unsigned i = 0; i < w.r; ++i)
        for (unsigned c : columns) out[i] += w.at(i, c - 1);
    return out;
}

std::vector<unsigned> canonical_rotation(const std::vector<unsigned>& columns, unsigned r) {
    std::vector<unsigned> best, cur(columns.size());
    for (unsigned k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            cur[i] = (columns[i] - 1 + k) % r + 1;
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

namespace {

// Distinct values of a row-sum vector, tracked up to the first three.
struct ValuePair {
    int v1 = -1, v2 = -1;
    bool more = false;

    void add(int v) {
        if (v == v1 || v == v2) return;
        if (v1 < 0)
            v1 = v;
        else if (v2 < 0)
            v2 = v;
        else
            more = true;
    }
};

class SubsetScanner {
public:
    SubsetScanner(const WeightMatrix& w, bool canonicalize)
        : w_(w), canonicalize_(canonicalize), total_(w.row_total()), sums_(w.r, 0) {}

    // Record the subset currently loaded in sums_.
    void evaluate(const std::vector<unsigned>& cols, SearchResult& res) {
        ++res.examined;
        ValuePair vp;
        for (int s : sums_) {
            vp.add(s);
            if (vp.more) return;
        }
        if (vp.v2 < 0) return;  // single value: equidistant, not two-weight
        int lo = std::min(vp.v1, vp.v2), hi = std::max(vp.v1, vp.v2);
        SearchHit hit;
        hit.columns = canonicalize_ ? canonical_rotation(cols, w_.r) : cols;
        hit.w1 = lo;
        hit.w2 = hi;
        auto& bucket = lo == 0 ? seed_keys_ : hit_keys_;
        if (!bucket.insert(hit.columns).second) return;
        if (lo == 0) {
            if (hi < total_) res.complement_seeds.push_back(std::move(hit));
        } else {
            res.hits.push_back(std::move(hit));
        }
    }

    void push(unsigned col) {
        for (unsigned i = 0; i < w_.r; ++i) sums_[i] += w_.at(i, col - 1);
    }
    void pop(unsigned col) {
        for (unsigned i = 0; i < w_.r; ++i) sums_[i] -= w_.at(i, col - 1);
    }

private:
    const WeightMatrix& w_;
    bool canonicalize_;
    int total_;
    std::vector<int> sums_;
    std::set<std::vector<unsigned>> hit_keys_, seed_keys_;
};

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    unsigned __int128 v = 1;
    const unsigned __int128 limit = (unsigned __int128)cap + 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        v = v * (n - k + i) / i;
        if (v > limit) v = limit;
    }
    return (std::uint64_t)v;
}

void enumerate(SubsetScanner& scan, std::vector<unsigned>& cols, unsigned first, unsigned r,
               unsigned p, SearchResult& res) {
    if (cols.size() == p) {
        scan.evaluate(cols, res);
        return;
    }
    for (unsigned c = first; c + (p - cols.size()) <= r + 1; ++c) {
        cols.push_back(c);
        scan.push(c);
        enumerate(scan, cols, c + 1, r, p, res);
        scan.pop(c);
        cols.pop_back();
    }
}

}  // namespace

SearchResult find_two_weight_subsets(const WeightMatrix& w, const SearchConfig& cfg) {
    if (w.r == 0) throw std::invalid_argument("find_two_weight_subsets: empty weight matrix");
    if (cfg.budget == 0) throw std::invalid_argument("find_two_weight_subsets: budget must be positive");
    const unsigned p_max = cfg.p_max == 0 ? w.r / 2 : cfg.p_max;
    if (p_max > w.r) throw std::invalid_argument("find_two_weight_subsets: p_max exceeds r");

    SearchResult res;
    SubsetScanner scan(w, cfg.canonicalize);

    if (cfg.mode == SearchConfig::Mode::exhaustive) {
        std::uint64_t total = 0;
        for (unsigned p = 1; p <= p_max; ++p) {
            total += binomial_capped(w.r, p, cfg.budget);
            if (total > cfg.budget)
                throw std::runtime_error(
                    "find_two_weight_subsets: exhaustive enumeration exceeds budget; raise the "
                    "budget, lower p_max, or use sampled mode");
        }
        std::vector<unsigned> cols;
        for (unsigned p = 1; p <= p_max; ++p) enumerate(scan, cols, 1, w.r, p, res);
        res.complete = true;
    } else {
        std::mt19937_64 rng(cfg.rng_seed);
        // direct engine draws keep the sequence bit-exact across platforms,
        // unlike uniform_int_distribution
        auto pick = [&rng](unsigned lo, unsigned hi) {
            return lo + (unsigned)(rng() % (hi - lo + 1));
        };
        const std::uint64_t per_size = std::max<std::uint64_t>(1, cfg.budget / p_max);
        std::vector<unsigned> pool(w.r);
        for (unsigned i = 0; i < w.r; ++i) pool[i] = i + 1;
        for (unsigned p = 1; p <= p_max; ++p) {
            for (std::uint64_t d = 0; d < per_size && res.examined < cfg.budget; ++d) {
                // partial Fisher-Yates draw of a p-subset
                for (unsigned i = 0; i < p; ++i) std::swap(pool[i], pool[pick(i, w.r - 1)]);
                std::vector<unsigned> cols(pool.begin(), pool.begin() + p);
                std::sort(cols.begin(), cols.end());
                for (unsigned c : cols) scan.push(c);
                scan.evaluate(cols, res);
                for (unsigned c : cols) scan.pop(c);
            }
        }
        res.complete = false;  // sampling never certifies coverage
    }

    auto order = [](const SearchHit& a, const SearchHit& b) {
        if (a.p() != b.p()) return a.p() < b.p();
        if (a.w1 != b.w1) return a.w1 < b.w1;
        return a.columns < b.columns;
    };
    std::sort(res.hits.begin(), res.hits.end(), order);
    std::sort(res.complement_seeds.begin(), res.complement_seeds.end(), order);
    return res;
}

SearchHit complement_hit(const SearchHit& hit, const WeightMatrix& w) {
    const int total = w.row_total();
    if (hit.columns.empty() || hit.columns.size() >= w.r)
        throw std::invalid_argument("complement_hit: complement is empty");
    if (hit.w2 >= total)
        throw std::invalid_argument("complement_hit: complement has a zero row sum, not two-weight");
    SearchHit out;
    out.columns.reserve(w.r - hit.columns.size());
    std::size_t k = 0;
    for (unsigned c = 1; c <= w.r; ++c) {
        if (k < hit.columns.size() && hit.columns[k] == c)
            ++k;
        else
            out.columns.push_back(c);
    }
    out.w1 = total - hit.w2;
    out.w2 = total - hit.w1;
    return out;
}

}  // namespace qt2w
