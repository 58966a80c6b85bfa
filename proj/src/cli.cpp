#include "intpart/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intpart/constructive.hpp"
#include "intpart/errors.hpp"
#include "intpart/experiments.hpp"
#include "intpart/generation.hpp"
#include "intpart/graph.hpp"
#include "intpart/heuristic.hpp"
#include "intpart/oracle.hpp"
#include "intpart/partition.hpp"
#include "intpart/sparsity.hpp"

namespace intpart::cli {

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

Graph load_graph(const std::string& path) { return Graph::load_edge_list(path); }

DemandFunctions resolve_demands(const Graph& g, std::optional<int> a, std::optional<int> b,
                                const std::string& demands_path, bool split_default) {
    if (!demands_path.empty()) {
        if (a || b)
            throw std::invalid_argument("--demands conflicts with --a/--b");
        return load_demands(demands_path, g.n());
    }
    if (a || b) {
        if (!a || !b) throw std::invalid_argument("--a and --b must be given together");
        return DemandFunctions::uniform(g.n(), *a, *b);
    }
    return split_default ? DemandFunctions::half_split(g)
                         : DemandFunctions::half_ceiling(g);
}

void output_partition(const Partition& p, const std::string& out_path) {
    if (out_path.empty()) {
        write_partition(std::cout, p);
    } else {
        save_partition(out_path, p);
    }
}

template <typename Fn>
void with_output_file(const std::string& path, Fn fn) {
    if (path.empty()) {
        fn(std::cout);
    } else {
        std::ofstream out(path);
        if (!out) throw FormatError("cannot open output file: " + path);
        fn(out);
        if (!out) throw FormatError("write failed: " + path);
    }
}

int cmd_generate(const std::string& out_path, int n, int d, std::uint64_t seed,
                 int max_attempts, const std::string& method,
                 const std::string& named, const std::vector<int>& params) {
    Graph g;
    if (!named.empty()) {
        g = named_graph(named, params);
    } else {
        GenSpec spec;
        spec.n = n;
        spec.d = d;
        spec.seed = seed;
        spec.max_attempts = max_attempts;
        spec.method = method == "auto" ? auto_regular_method(d) : parse_regular_method(method);
        g = random_regular(spec);
    }
    with_output_file(out_path, [&](std::ostream& out) { g.write_edge_list(out); });
    return kOk;
}

int cmd_check(const std::string& in_path, bool sparse) {
    Graph g = load_graph(in_path);
    std::cerr << "graph: n=" << g.n() << " m=" << g.m()
              << " max_degree=" << g.max_degree() << "\n";
    if (!sparse) return kOk;
    if (auto witness = find_dense_four_set(g)) {
        std::cout << "not 4-sparse; witness: " << (*witness)[0] << ' ' << (*witness)[1]
                  << ' ' << (*witness)[2] << ' ' << (*witness)[3] << "\n";
        return kNegative;
    }
    std::cout << "4-sparse\n";
    return kOk;
}

int cmd_solve(const std::string& algorithm, const std::string& in_path,
              std::optional<int> a, std::optional<int> b, const std::string& demands_path,
              bool force, std::uint64_t seed, int max_iters, int slack,
              const std::string& trace_path, const std::string& out_path) {
    Graph g = load_graph(in_path);
    Algorithm algo = parse_algorithm(algorithm);
    DemandFunctions dem =
        resolve_demands(g, a, b, demands_path, algo == Algorithm::constructive);

    switch (algo) {
        case Algorithm::constructive: {
            ConstructiveOptions opts;
            opts.force = force;
            ConstructiveResult res = find_internal_partition_4sparse(g, dem, opts);
            if (!trace_path.empty()) {
                std::ofstream trace(trace_path);
                if (!trace) throw FormatError("cannot open trace file: " + trace_path);
                write_trace_jsonl(trace, res.trace);
            }
            std::cerr << "constructive: partition found after " << res.trace.size()
                      << " steps, final w=" << res.final_w << "\n";
            output_partition(res.partition, out_path);
            return kOk;
        }
        case Algorithm::heuristic: {
            HeuristicConfig cfg;
            cfg.seed = seed;
            cfg.max_iters = max_iters;
            cfg.balance_slack = slack;
            HeuristicResult res = local_search(g, dem, cfg);
            if (!res.converged) {
                std::cerr << "heuristic: not converged after " << res.iterations
                          << " iterations (objective " << res.final_objective << ")\n";
                return kNegative;
            }
            std::cerr << "heuristic: converged after " << res.iterations
                      << " iterations\n";
            output_partition(*res.partition, out_path);
            return kOk;
        }
        case Algorithm::brute: {
            auto found = brute_force_partition(g, dem);
            if (!found) {
                std::cerr << "brute: no internal partition exists for these demands\n";
                return kNegative;
            }
            std::cerr << "brute: partition found\n";
            output_partition(*found, out_path);
            return kOk;
        }
    }
    return kError;
}

int cmd_verify(const std::string& in_path, const std::string& partition_path,
               std::optional<int> a, std::optional<int> b,
               const std::string& demands_path) {
    Graph g = load_graph(in_path);
    Partition p = load_partition(partition_path, g.n());
    DemandFunctions dem = resolve_demands(g, a, b, demands_path, false);
    auto report = verify_internal(g, p, dem);
    std::cout << report.summary() << "\n";
    return report.ok ? kOk : kNegative;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path) {
    SweepSpec spec = SweepSpec::from_json_file(spec_path);
    auto records = run_sweep(spec);
    with_output_file(out_path, [&](std::ostream& out) { write_records_csv(out, records); });
    return kOk;
}

int cmd_sparsity(const std::vector<int>& n_values, int d, int runs, std::uint64_t seed,
                 const std::string& out_path) {
    auto points = sparsity_frequency(n_values, d, runs, seed);
    with_output_file(out_path, [&](std::ostream& out) { write_sparsity_csv(out, points); });
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"internal graph partition toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "write a graph as an edge list");
    int gen_n = 0, gen_d = 0, gen_max_attempts = 200000;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_method = "auto", gen_named;
    std::vector<int> gen_params;
    generate->add_option("--n", gen_n, "vertex count");
    generate->add_option("--d", gen_d, "degree");
    generate->add_option("--seed", gen_seed, "random seed");
    generate->add_option("--out", gen_out, "output file (default stdout)");
    generate->add_option("--max-attempts", gen_max_attempts, "rejection budget");
    generate->add_option("--method", gen_method, "rejection|pairing|auto")
        ->check(CLI::IsMember({"rejection", "pairing", "auto"}));
    generate->add_option("--named", gen_named,
                         "catalog graph: complete|complete_bipartite|cycle|circulant|petersen");
    generate->add_option("--params", gen_params, "parameters for --named")->delimiter(',');

    // check
    auto* check = app.add_subcommand("check", "validate a graph file");
    std::string check_in;
    bool check_sparse = false;
    check->add_option("--in", check_in, "graph file")->required();
    check->add_flag("--sparse", check_sparse, "also test 4-sparsity");

    // solve
    auto* solve = app.add_subcommand("solve", "find an internal partition");
    std::string solve_algo, solve_in, solve_demands, solve_trace, solve_out;
    std::optional<int> solve_a, solve_b;
    bool solve_force = false;
    std::uint64_t solve_seed = 0;
    int solve_max_iters = -1, solve_slack = -1;
    solve->add_option("--algorithm", solve_algo, "constructive|heuristic|brute")
        ->required()
        ->check(CLI::IsMember({"constructive", "heuristic", "brute"}));
    solve->add_option("--in", solve_in, "graph file")->required();
    solve->add_option("--a", solve_a, "uniform demand on side A");
    solve->add_option("--b", solve_b, "uniform demand on side B");
    solve->add_option("--demands", solve_demands, "per-vertex demands file");
    solve->add_flag("--force", solve_force, "constructive: skip the 4-sparsity gate");
    solve->add_option("--seed", solve_seed, "heuristic seed");
    solve->add_option("--max-iters", solve_max_iters, "heuristic iteration cap");
    solve->add_option("--slack", solve_slack, "heuristic balance slack");
    solve->add_option("--trace", solve_trace, "constructive: JSONL step trace file");
    solve->add_option("--out", solve_out, "partition output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a partition against demands");
    std::string verify_in, verify_partition, verify_demands;
    std::optional<int> verify_a, verify_b;
    verify->add_option("--in", verify_in, "graph file")->required();
    verify->add_option("--partition", verify_partition, "partition file")->required();
    verify->add_option("--a", verify_a, "uniform demand on side A");
    verify->add_option("--b", verify_b, "uniform demand on side B");
    verify->add_option("--demands", verify_demands, "per-vertex demands file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "batch experiment grid from a JSON spec");
    std::string sweep_spec, sweep_out;
    sweep->add_option("--spec", sweep_spec, "JSON spec file")->required();
    sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");

    // sparsity
    auto* sparsity = app.add_subcommand("sparsity", "empirical 4-sparsity frequency");
    std::vector<int> sp_n;
    int sp_d = 4, sp_runs = 100;
    std::uint64_t sp_seed = 0;
    std::string sp_out;
    sparsity->add_option("--n", sp_n, "vertex counts")->required()->delimiter(',');
    sparsity->add_option("--d", sp_d, "degree");
    sparsity->add_option("--runs", sp_runs, "samples per point");
    sparsity->add_option("--seed", sp_seed, "base seed");
    sparsity->add_option("--out", sp_out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (generate->parsed())
            return cmd_generate(gen_out, gen_n, gen_d, gen_seed, gen_max_attempts,
                                gen_method, gen_named, gen_params);
        if (check->parsed()) return cmd_check(check_in, check_sparse);
        if (solve->parsed())
            return cmd_solve(solve_algo, solve_in, solve_a, solve_b, solve_demands,
                             solve_force, solve_seed, solve_max_iters, solve_slack,
                             solve_trace, solve_out);
        if (verify->parsed())
            return cmd_verify(verify_in, verify_partition, verify_a, verify_b,
                              verify_demands);
        if (sweep->parsed()) return cmd_sweep(sweep_spec, sweep_out);
        if (sparsity->parsed()) return cmd_sparsity(sp_n, sp_d, sp_runs, sp_seed, sp_out);
    } catch (const NotFourSparseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace intpart::cli
