#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandwidth/arrangement.hpp"
#include "bandwidth/graph.hpp"

namespace bandwidth {

/// One run of one algorithm on one instance. witness holds the bucket index
/// per vertex id; arrangement (exact runs) holds the rank per vertex id.
struct RunReport {
    std::string instance;
    std::string algo;
    std::optional<int> ell_star;
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<std::vector<int>> witness;
    std::optional<int> exact;
    long long nodes = 0;
    double millis = 0.0;
    std::optional<std::string> verdict;
    std::optional<std::vector<int>> arrangement;
};

/// Fixed key order (instance, algo, ell_star, lower, upper, witness, exact,
/// nodes, millis); verdict/arrangement appended only when present.
std::string report_to_json(const RunReport& r, int indent = 2);

struct AlgoRun {
    ApproxResult result;
    long long nodes = 0;
};

/// algo is one of fast, backtrack, dc. Disconnected graphs are handled per
/// component with the max-ell rule in every mode.
AlgoRun run_approx_algo(const Graph& g, const std::string& algo);

struct BenchOptions {
    std::vector<std::string> families{"path", "cycle", "random_connected"};
    int n_min = 4;
    int n_max = 10;
    int reps = 1;  // instances per (family, n); only seeded families vary
    std::vector<std::string> algos{"fast", "backtrack"};
    std::uint64_t seed = 0;
    double p = 0.3;
    int b = 2;
    int exact_cap = 12;  // exact bandwidth is recorded when n <= exact_cap
};

struct BenchResult {
    std::vector<RunReport> rows;
    std::string json;   // deterministic document: rows plus aggregates, no timing
    std::string table;  // human-readable aggregate, includes wall time
};

/// Runs the suite sequentially in a deterministic order. Throws logic_error
/// if any row with an exact value violates lower <= exact <= upper.
BenchResult run_bench(const BenchOptions& opt);

}  // namespace bandwidth
