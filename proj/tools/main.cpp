// qt2w: construct consta-cyclic simplex codes, put them in quasi-twisted
// block form, search the circulant weight matrix for two-weight column
// subsets, and verify hits by exhaustive codeword enumeration.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qt2w/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quasi-twisted two-weight code search"};
    app.require_subcommand(1);

    qt2w::SearchParams params;
    bool seed_set = false;
    std::uint64_t seed_value = 0;
    std::string mode = "exhaustive";

    auto* search = app.add_subcommand("search", "run the full construction + subset search");
    search->add_option("q", params.q, "field size (prime power)")->required();
    search->add_option("t", params.t, "code dimension (degree of h)")->required();
    search->add_option("m", params.m, "twistulant block order; must divide n=(q^t-1)/(q-1)")
        ->required();
    search->add_option("--lambda", params.lambda,
                       "consta-cyclic unit, canonical value or a/b (default: smallest of order q-1)");
    search->add_option("--h-index", params.h_index, "which primitive h(x) to use (default 0)");
    search->add_option("--p-max", params.p_max, "largest subset size (default floor(r/2))");
    search->add_option("--mode", mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    search->add_option("--budget", params.budget, "max subsets examined");
    search->add_option("--seed", seed_value, "rng seed (required for sampled mode)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { seed_set = true; });
    search->add_flag("--verify", params.verify, "confirm every hit by codeword enumeration");
    search->add_flag("--json", params.json, "emit line-delimited JSON records");
    search->add_flag("--raw", params.raw, "keep rotational duplicates");

    std::string matrix_path;
    auto* verify = app.add_subcommand("verify", "analyze a generator-matrix file (q n k header)");
    verify->add_option("file", matrix_path, "matrix file; '-' for stdin")->required();

    auto* demo = app.add_subcommand("demo", "walk through the [21,3,16]_4 example end to end");

    unsigned fq = 0, ft = 0;
    bool fjson = false;
    auto* fact = app.add_subcommand("factorizations", "list the m*r splits of n=(q^t-1)/(q-1)");
    fact->add_option("q", fq, "field size (prime power)")->required();
    fact->add_option("t", ft, "code dimension")->required();
    fact->add_flag("--json", fjson, "emit line-delimited JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*search) {
            if (seed_set) params.seed = seed_value;
            params.sampled = mode == "sampled";
            params.enum_bound = qt2w::enum_bound_from_env();
            return qt2w::cmd_search(params, std::cout, std::cerr);
        }
        if (*verify) {
            if (matrix_path == "-")
                return qt2w::cmd_verify(std::cin, std::cout, std::cerr, qt2w::enum_bound_from_env());
            std::ifstream in(matrix_path);
            if (!in) {
                std::cerr << "error: cannot open " << matrix_path << '\n';
                return 2;
            }
            return qt2w::cmd_verify(in, std::cout, std::cerr, qt2w::enum_bound_from_env());
        }
        if (*demo) return qt2w::cmd_demo(std::cout);
        if (*fact) return qt2w::cmd_factorizations(fq, ft, fjson, std::cout, std::cerr);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}
