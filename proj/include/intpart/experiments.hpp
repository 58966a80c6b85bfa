#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "intpart/generation.hpp"
#include "intpart/graph.hpp"

namespace intpart {

enum class Algorithm { constructive, heuristic, brute };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

// Batch sweep over a grid of (n, d) cells. Loadable from a JSON object with
// keys: n (array), d (array), runs (int), base_seed (unsigned), algorithm
// (string), demand_rule ("auto" | "half_ceiling" | "half_split"), gen_method
// ("auto" | "rejection" | "pairing"), force (bool), max_attempts (int).
struct SweepSpec {
    std::vector<int> n_values;
    std::vector<int> d_values;
    int runs_per_cell = 1;
    std::uint64_t base_seed = 0;
    Algorithm algorithm = Algorithm::heuristic;
    std::string demand_rule = "auto";
    std::string gen_method = "auto";
    bool force = false;        // constructive only: run on non-4-sparse samples too
    int max_attempts = 200000; // rejection-sampling budget per graph

    void validate() const;  // throws std::invalid_argument
    static SweepSpec from_json_file(const std::string& path);
};

struct ExperimentRecord {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;  // graph seed for this run
    Algorithm algorithm = Algorithm::heuristic;
    bool four_sparse = false;
    bool converged = false;
    long long iterations = 0;
    double wall_time_ms = 0.0;
    long long objective_final = 0;  // 0 when a partition was produced, -1 when
                                    // none and the algorithm has no objective
};

// Deterministic per-run seed: chained splitmix64 over (base, n, d, run,
// stream). stream 0 seeds the graph, stream 1 the algorithm.
std::uint64_t run_seed(std::uint64_t base, int n, int d, int run_index, int stream);

// Runs every (n, d, run) unit, possibly on several threads (INTPART_THREADS),
// and returns records sorted by (n, d, run). Any produced partition is
// re-verified; a claimed success that fails verification aborts the sweep.
std::vector<ExperimentRecord> run_sweep(const SweepSpec& spec);

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

struct SparsityPoint {
    int n = 0;
    int d = 0;
    int runs = 0;
    int four_sparse_count = 0;
    double fraction = 0.0;
};

// Fraction of uniform simple d-regular samples (rejection method) passing the
// 4-sparsity test, per n. Requires n > d+1 for every n.
std::vector<SparsityPoint> sparsity_frequency(const std::vector<int>& n_values, int d,
                                              int runs, std::uint64_t base_seed);

void write_sparsity_csv(std::ostream& out, const std::vector<SparsityPoint>& points);

// INTPART_THREADS, else hardware concurrency, at least 1.
int thread_count_from_env();

}  // namespace intpart
