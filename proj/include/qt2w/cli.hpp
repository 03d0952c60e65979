// Command pipeline behind the qt2w binary: search end-to-end, the worked
// [21,3,16]_4 example, generator-file verification, and factorization
// listings. Kept argv-free so it is directly testable.

#ifndef QT2W_CLI_HPP
#define QT2W_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "qt2w/verifier.hpp"

namespace qt2w {

// Factor q as p^e; throws when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint32_t q);

// QT2W_ENUM_BOUND override, or the built-in default.
std::uint64_t enum_bound_from_env();

struct SearchParams {
    unsigned q = 0;
    unsigned t = 0;
    unsigned m = 0;
    std::string lambda;  // symbol or canonical value; empty = default choice
    unsigned h_index = 0;
    unsigned p_max = 0;  // 0 = floor(r/2)
    bool sampled = false;
    std::uint64_t budget = 10'000'000;
    std::optional<std::uint64_t> seed;  // required in sampled mode
    bool verify = false;
    bool json = false;
    bool raw = false;  // keep rotational duplicates
    std::uint64_t enum_bound = default_enum_bound;
};

struct ResultRecord {
    unsigned q = 0;
    unsigned k = 0;
    unsigned m = 0;
    unsigned p = 0;
    int w1 = 0;
    int w2 = 0;
    std::vector<unsigned> columns;  // 1-based
    gfelem lambda = 0;
    unsigned h_index = 0;
    bool verified = false;
    std::optional<bool> projective;   // set only when the verifier ran
    std::optional<unsigned> rank;     // set only when the verifier ran

    bool operator==(const ResultRecord& o) const;
};

struct SearchOutcome {
    std::vector<ResultRecord> records;
    bool complete = true;
    std::uint64_t examined = 0;
    bool any_verify_failed = false;
    // context for reporting
    unsigned n = 0, r = 0;
    gfelem lambda = 0;
    std::string h_text;
    std::vector<int> weight_row;
    bool cyclic_equivalent = false;
};

// The constructive pipeline: simplex -> decompose -> weight matrix -> subset
// search -> complement pass (hits and seeds) -> optional verifier. Throws
// std::invalid_argument / std::runtime_error on bad input.
SearchOutcome run_search(const SearchParams& params);

std::string record_to_json(const ResultRecord& rec);
ResultRecord record_from_json(const std::string& line);
std::vector<ResultRecord> parse_records_json(std::istream& in);
std::vector<ResultRecord> parse_records_text(std::istream& in);

int cmd_search(const SearchParams& params, std::ostream& out, std::ostream& err);
int cmd_demo(std::ostream& out);
int cmd_verify(std::istream& matrix_file, std::ostream& out, std::ostream& err,
               std::uint64_t enum_bound = default_enum_bound);
int cmd_factorizations(unsigned q, unsigned t, bool json, std::ostream& out, std::ostream& err);

}  // namespace qt2w

#endif
