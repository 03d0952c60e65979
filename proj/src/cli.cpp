#include "qt2w/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qt2w/render.hpp"

namespace qt2w {

using nlohmann::json;

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    std::uint32_t e = 0, v = q;
    while (v % p == 0) { v /= p; ++e; }
    if (v != 1)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

std::uint64_t enum_bound_from_env() {
    if (const char* s = std::getenv("QT2W_ENUM_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("QT2W_ENUM_BOUND must be a positive integer");
    }
    return default_enum_bound;
}

bool ResultRecord::operator==(const ResultRecord& o) const {
    return q == o.q && k == o.k && m == o.m && p == o.p && w1 == o.w1 && w2 == o.w2 &&
           columns == o.columns && lambda == o.lambda && h_index == o.h_index &&
           verified == o.verified && projective == o.projective && rank == o.rank;
}

namespace {

ResultRecord base_record(const SearchParams& params, const SearchOutcome& ctx, const SearchHit& hit) {
    ResultRecord rec;
    rec.q = params.q;
    rec.k = params.t;
    rec.m = params.m;
    rec.p = hit.p();
    rec.w1 = hit.w1;
    rec.w2 = hit.w2;
    rec.columns = hit.columns;
    rec.lambda = ctx.lambda;
    rec.h_index = params.h_index;
    return rec;
}

}  // namespace

SearchOutcome run_search(const SearchParams& params) {
    auto [p, e] = prime_power_split(params.q);
    const Field f(p, e);

    if (params.t < 2) throw std::invalid_argument("t must be >= 2");
    if (params.sampled && !params.seed)
        throw std::invalid_argument("sampled mode requires an explicit seed");

    const gfelem lambda =
        params.lambda.empty() ? default_lambda(f) : parse_element(f, params.lambda);
    SimplexCode code = build_simplex(f, params.t, lambda, params.h_index);
    if (params.m == 0 || code.n % params.m != 0)
        throw std::invalid_argument("m = " + std::to_string(params.m) + " does not divide n = " +
                                    std::to_string(code.n));
    const unsigned r = code.n / params.m;

    QtDecomposition dec = decompose(code, params.m, r);
    WeightMatrix w = weight_matrix(dec);

    SearchConfig cfg;
    cfg.p_max = params.p_max;
    cfg.mode = params.sampled ? SearchConfig::Mode::sampled : SearchConfig::Mode::exhaustive;
    cfg.budget = params.budget;
    cfg.rng_seed = params.seed.value_or(0);
    cfg.canonicalize = !params.raw;
    SearchResult found = find_two_weight_subsets(w, cfg);

    SearchOutcome out;
    out.n = code.n;
    out.r = r;
    out.lambda = lambda;
    out.h_text = to_string(code.h);
    out.weight_row = w.first_row;
    out.cyclic_equivalent = code.cyclic_equivalent;
    out.complete = found.complete;
    out.examined = found.examined;

    // Direct hits, their complements, and complements of {0,w} seeds. The
    // complement of a hit keeps its literal column set; dedup keys are
    // rotation-canonical unless raw mode asked for everything.
    std::set<std::vector<unsigned>> seen;
    auto key_of = [&](const std::vector<unsigned>& cols) {
        return params.raw ? cols : canonical_rotation(cols, r);
    };
    std::vector<SearchHit> all;
    for (const SearchHit& h : found.hits) {
        if (seen.insert(key_of(h.columns)).second) all.push_back(h);
    }
    const int total = w.row_total();
    auto add_complement = [&](const SearchHit& h) {
        if (h.columns.size() >= r || h.w2 >= total) return;
        SearchHit comp = complement_hit(h, w);
        if (seen.insert(key_of(comp.columns)).second) all.push_back(std::move(comp));
    };
    for (const SearchHit& h : found.hits) add_complement(h);
    for (const SearchHit& s : found.complement_seeds) add_complement(s);

    for (const SearchHit& h : all) {
        ResultRecord rec = base_record(params, out, h);
        if (params.verify) {
            LinearCodeInstance inst = build_selected_generator(dec, h.columns);
            WeightDistribution dist = weight_distribution(inst, params.enum_bound);
            auto pair = is_two_weight(dist);
            bool oracle_ok = oracle_weights_equal_row_sums(dec, h.columns, w, params.enum_bound);
            rec.verified = pair && pair->first == h.w1 && pair->second == h.w2 && oracle_ok;
            rec.projective = is_projective(inst);
            rec.rank = inst.k;
            if (!rec.verified) out.any_verify_failed = true;
        }
        out.records.push_back(std::move(rec));
    }

    std::sort(out.records.begin(), out.records.end(), [](const ResultRecord& a, const ResultRecord& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.w1 != b.w1) return a.w1 < b.w1;
        return a.columns < b.columns;
    });
    return out;
}

namespace {

std::string columns_csv(const std::vector<unsigned>& cols) {
    std::ostringstream s;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) s << ',';
        s << cols[i];
    }
    return s.str();
}

std::string lambda_symbol(unsigned q, gfelem lambda) {
    if (q == 4) {
        static const char* names[] = {"0", "1", "a", "b"};
        return names[lambda];
    }
    return std::to_string(lambda);
}

gfelem lambda_from_symbol(const std::string& s) {
    if (s == "a") return 2;
    if (s == "b") return 3;
    return (gfelem)std::stoul(s);
}

}  // namespace

std::string record_to_json(const ResultRecord& rec) {
    json j;
    j["q"] = rec.q;
    j["k"] = rec.k;
    j["m"] = rec.m;
    j["p"] = rec.p;
    j["w1"] = rec.w1;
    j["w2"] = rec.w2;
    j["columns"] = rec.columns;
    j["lambda"] = rec.lambda;
    j["h_index"] = rec.h_index;
    j["verified"] = rec.verified;
    j["projective"] = rec.projective ? json(*rec.projective) : json(nullptr);
    j["rank"] = rec.rank ? json(*rec.rank) : json(nullptr);
    return j.dump();
}

ResultRecord record_from_json(const std::string& line) {
    json j = json::parse(line);
    ResultRecord rec;
    rec.q = j.at("q");
    rec.k = j.at("k");
    rec.m = j.at("m");
    rec.p = j.at("p");
    rec.w1 = j.at("w1");
    rec.w2 = j.at("w2");
    rec.columns = j.at("columns").get<std::vector<unsigned>>();
    rec.lambda = j.at("lambda");
    rec.h_index = j.at("h_index");
    rec.verified = j.at("verified");
    if (!j.at("projective").is_null()) rec.projective = j.at("projective").get<bool>();
    if (!j.at("rank").is_null()) rec.rank = j.at("rank").get<unsigned>();
    return rec;
}

std::vector<ResultRecord> parse_records_json(std::istream& in) {
    std::vector<ResultRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(record_from_json(line));
    }
    return out;
}

std::vector<ResultRecord> parse_records_text(std::istream& in) {
    std::vector<ResultRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string q;
        row >> q;
        if (q == "q") continue;  // header
        ResultRecord rec;
        std::string cols, lam, verified, projective, rank;
        rec.q = std::stoul(q);
        row >> rec.k >> rec.m >> rec.p >> rec.w1 >> rec.w2 >> cols >> lam >> rec.h_index >>
            verified >> projective >> rank;
        if (!row) throw std::invalid_argument("bad record line: " + line);
        std::istringstream cs(cols);
        std::string tok;
        while (std::getline(cs, tok, ',')) rec.columns.push_back(std::stoul(tok));
        rec.lambda = lambda_from_symbol(lam);
        rec.verified = verified == "yes";
        if (projective != "-") rec.projective = projective == "yes";
        if (rank != "-") rec.rank = std::stoul(rank);
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

void write_records_text(const std::vector<ResultRecord>& records, std::ostream& out) {
    out << "q k m p w1 w2 columns lambda h_index verified projective rank\n";
    for (const ResultRecord& rec : records) {
        out << rec.q << ' ' << rec.k << ' ' << rec.m << ' ' << rec.p << ' ' << rec.w1 << ' '
            << rec.w2 << ' ' << columns_csv(rec.columns) << ' '
            << lambda_symbol(rec.q, rec.lambda) << ' ' << rec.h_index << ' '
            << (rec.verified ? "yes" : "no") << ' '
            << (rec.projective ? (*rec.projective ? "yes" : "no") : "-") << ' ';
        if (rec.rank)
            out << *rec.rank;
        else
            out << '-';
        out << '\n';
    }
}

}  // namespace

int cmd_search(const SearchParams& params, std::ostream& out, std::ostream& err) {
    SearchOutcome outcome;
    try {
        outcome = run_search(params);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
    if (params.json) {
        for (const ResultRecord& rec : outcome.records) out << record_to_json(rec) << '\n';
    } else {
        out << "# q=" << params.q << " t=" << params.t << " n=" << outcome.n << " m=" << params.m
            << " r=" << outcome.r << " lambda=" << lambda_symbol(params.q, outcome.lambda)
            << " h_index=" << params.h_index << " h=" << outcome.h_text
            << (outcome.cyclic_equivalent ? " (cyclic-equivalent)" : "") << '\n';
        out << "# weight row:";
        for (int d : outcome.weight_row) out << ' ' << d;
        out << '\n';
        out << "# subsets examined: " << outcome.examined
            << (outcome.complete ? "" : " (partial: sampled/budgeted search)") << '\n';
        write_records_text(outcome.records, out);
    }
    if (!outcome.complete) err << "note: search incomplete (sampled or budget-limited)\n";
    for (const ResultRecord& rec : outcome.records) {
        if (rec.rank && *rec.rank < rec.k)
            err << "warning: columns {" << columns_csv(rec.columns) << "} dropped rank to "
                << *rec.rank << " (design dimension " << rec.k << ")\n";
    }
    if (outcome.any_verify_failed) {
        err << "error: verifier rejected at least one search hit\n";
        return 1;
    }
    return 0;
}

int cmd_verify(std::istream& matrix_file, std::ostream& out, std::ostream& err,
               std::uint64_t enum_bound) {
    try {
        std::uint32_t q;
        unsigned n, k;
        if (!(matrix_file >> q >> n >> k)) throw std::invalid_argument("bad header, expected: q n k");
        if (n == 0 || k == 0) throw std::invalid_argument("n and k must be positive");
        auto [p, e] = prime_power_split(q);
        Field f(p, e);
        GfMatrix rows(f, k, n);
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                std::string tok;
                if (!(matrix_file >> tok))
                    throw std::invalid_argument("matrix file truncated at row " + std::to_string(i));
                rows.set(i, j, parse_element(f, tok));
            }
        }
        LinearCodeInstance code = code_from_rows(rows);
        out << "q: " << q << "\nlength: " << n << "\ngiven rows: " << k << "\nrank: " << code.k
            << '\n';
        if (code.k == 0) {
            out << "weight distribution: {}\ntwo-weight: no\nprojective: no\n";
            return 0;
        }
        WeightDistribution dist = weight_distribution(code, enum_bound);
        out << "weight distribution: {";
        bool first = true;
        for (auto& [w, c] : dist.counts) {
            if (!first) out << ", ";
            first = false;
            out << w << ": " << c;
        }
        out << "}\n";
        auto pair = is_two_weight(dist);
        if (pair)
            out << "two-weight: (" << pair->first << "," << pair->second << ")\n";
        else
            out << "two-weight: no\n";
        out << "projective: " << (is_projective(code) ? "yes" : "no") << '\n';
        return 0;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
}

int cmd_factorizations(unsigned q, unsigned t, bool as_json, std::ostream& out, std::ostream& err) {
    try {
        auto [p, e] = prime_power_split(q);
        Field f(p, e);
        if (t < 2) throw std::invalid_argument("t must be >= 2");
        std::uint64_t qt = 1;
        for (unsigned i = 0; i < t; ++i) qt *= q;
        const unsigned n = (unsigned)((qt - 1) / (q - 1));
        if (!as_json) out << "# n = " << n << '\n';
        for (unsigned m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            unsigned r = n / m;
            bool trivial = m == 1 || r == 1;
            if (as_json) {
                json j;
                j["m"] = m;
                j["r"] = r;
                j["trivial"] = trivial;
                out << j.dump() << '\n';
            } else {
                out << "m=" << m << " r=" << r << (trivial ? " (trivial)" : "") << '\n';
            }
        }
        return 0;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
}

int cmd_demo(std::ostream& out) {
    // The (lambda, h_index) pairing whose generator polynomial is the
    // [21,3,16]_4 example walked through in the README.
    constexpr gfelem example_lambda = 3;   // b
    constexpr unsigned example_h_index = 8;

    Field f(2, 2);
    SimplexCode code = build_simplex(f, 3, example_lambda, example_h_index);
    unsigned wgt = 1;
    for (unsigned i = 0; i + 1 < code.t; ++i) wgt *= f.q();
    out << "consta-cyclic simplex [" << code.n << "," << code.t << "," << wgt << "]_" << f.q()
        << " code, lambda = " << element_symbol(f, code.lambda) << "\n";
    out << "h(x) = " << to_string(code.h) << "  (h_index " << code.h_index << ")\n";
    out << "g(x) = " << to_string(code.g) << "\n\n";

    const unsigned m = 3, r = 7;
    auto perm = qt_permutation(code.n, m, r);
    out << "index order for rows and columns (m=" << m << ", r=" << r << "):\n  ";
    for (std::size_t i = 0; i < perm.size(); ++i) out << perm[i] << (i + 1 < perm.size() ? " " : "\n\n");

    QtDecomposition dec = decompose(code, m, r);
    out << "permuted matrix (" << r << " x " << r << " blocks of order " << m << "):\n"
        << to_string(permuted_matrix(code, m, r)) << '\n';
    for (unsigned i = 0; i < r; ++i)
        out << "a" << i + 1 << "(x) = " << to_string(dec.defining_polys[i]) << '\n';

    WeightMatrix w = weight_matrix(dec);
    out << "\nweight matrix W (circulant):\n";
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = 0; j < r; ++j) out << (j ? " " : "") << w.at(i, j);
        out << '\n';
    }

    SearchConfig cfg;
    SearchResult found = find_two_weight_subsets(w, cfg);
    out << "\ntwo-weight column subsets (p <= " << r / 2 << "):\n";
    std::vector<SearchHit> picks = found.hits;
    for (const SearchHit& h : found.hits)
        if (h.columns.size() < r && h.w2 < w.row_total()) picks.push_back(complement_hit(h, w));
    for (const SearchHit& h : picks) {
        out << "  columns {" << columns_csv(h.columns) << "}  row sums {" << h.w1 << "," << h.w2
            << "}  -> [" << m * h.p() << "," << code.t << ";" << h.w1 << "," << h.w2 << "]_"
            << f.q() << " code\n";
        LinearCodeInstance inst = build_selected_generator(dec, h.columns);
        out << "  generator matrix (rank " << inst.k << "):\n";
        std::istringstream lines(to_string(inst.generator));
        std::string ln;
        while (std::getline(lines, ln)) out << "    " << ln << '\n';
        WeightDistribution dist = weight_distribution(inst);
        std::uint64_t cw = 0;
        for (auto& [weight, count] : dist.counts) cw += count;
        out << "  verifier: " << cw << " codewords enumerated, weights {";
        bool first = true;
        for (auto& [weight, count] : dist.counts) {
            if (!first) out << ", ";
            first = false;
            out << weight << ": " << count;
        }
        auto pair = is_two_weight(dist);
        out << "}, two-weight " << (pair ? "yes" : "no") << ", projective "
            << (is_projective(inst) ? "yes" : "no") << ", matches row sums "
            << (oracle_weights_equal_row_sums(dec, h.columns, w) ? "yes" : "no") << "\n\n";
    }
    return 0;
}

}  // namespace qt2w
