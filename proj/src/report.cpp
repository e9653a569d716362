#include "bandwidth/report.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bandwidth/backtrack.hpp"
#include "bandwidth/constant_k.hpp"
#include "bandwidth/divide_conquer.hpp"

namespace bandwidth {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_to_json_obj(const RunReport& r)
{
    ordered_json j;
    j["instance"] = r.instance;
    j["algo"] = r.algo;
    j["ell_star"] = r.ell_star ? ordered_json(*r.ell_star) : ordered_json(nullptr);
    j["lower"] = r.lower ? ordered_json(*r.lower) : ordered_json(nullptr);
    j["upper"] = r.upper ? ordered_json(*r.upper) : ordered_json(nullptr);
    j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
    j["exact"] = r.exact ? ordered_json(*r.exact) : ordered_json(nullptr);
    j["nodes"] = r.nodes;
    j["millis"] = r.millis;
    if (r.verdict)
        j["verdict"] = *r.verdict;
    if (r.arrangement)
        j["arrangement"] = *r.arrangement;
    return j;
}

}  // namespace

std::string report_to_json(const RunReport& r, int indent)
{
    return report_to_json_obj(r).dump(indent);
}

AlgoRun run_approx_algo(const Graph& g, const std::string& algo)
{
    AlgoRun run;
    if (algo == "fast") {
        SearchStats stats;
        run.result = approx2_fast(g, &stats);
        run.nodes = stats.nodes_visited;
        return run;
    }
    if (algo != "backtrack" && algo != "dc")
        throw std::invalid_argument("unknown algorithm: " + algo);

    // per-component smallest feasible ell, then the max-ell rule
    if (g.n() == 0)
        return run;
    SearchStats stats;
    int ell_m = 0, lower_m = 0;
    std::optional<BucketArrangement> witness;
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        int ell_i = 0;
        std::optional<BucketArrangement> w;
        if (algo == "backtrack") {
            auto res = approx2_backtrack(sub.graph, &stats);
            ell_i = res.ell_star;
            w = std::move(res.witness);
        } else {
            for (int ell = 1; ell <= (sub.graph.n() + 1) / 2 && !w; ++ell) {
                auto dec = decide_dc(sub.graph,
                                     make_capacity_vector(sub.graph.n(), ell, VectorStyle::balanced));
                stats.absorb(dec.stats);
                if (dec.arrangement) {
                    ell_i = ell;
                    w = std::move(dec.arrangement);
                }
            }
        }
        ell_m = std::max(ell_m, ell_i);
        lower_m = std::max(lower_m, sub.graph.m() > 0 ? ell_i : 0);
        if (comps.size() == 1)
            witness = std::move(w);
    }
    run.result.ell_star = ell_m;
    run.result.lower = lower_m;
    run.result.upper = 2 * ell_m - 1;
    run.result.witness = std::move(witness);
    run.nodes = stats.nodes_visited;
    return run;
}

namespace {

struct Instance {
    std::string descriptor;
    Graph graph;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<Instance> build_suite(const BenchOptions& opt)
{
    std::vector<Instance> instances;
    std::uint64_t index = 0;
    for (const auto& family : opt.families) {
        const bool seeded = family == "random_connected";
        const int reps = seeded ? opt.reps : 1;
        for (int n = opt.n_min; n <= opt.n_max; ++n) {
            for (int rep = 0; rep < reps; ++rep, ++index) {
                GenParams params;
                params.n = n;
                params.b = std::min(opt.b, std::max(1, n - 1));
                params.p = opt.p;
                params.seed = mix_seed(opt.seed, index);
                if (family == "cycle" && n < 3)
                    continue;
                if (family == "path_power" && n < 2)
                    continue;
                std::ostringstream desc;
                desc << family << " n=" << n;
                if (family == "path_power" || family == "caterpillar")
                    desc << " b=" << params.b;
                if (seeded)
                    desc << " p=" << opt.p << " seed=" << params.seed;
                instances.push_back({desc.str(), generate(family, params)});
            }
        }
    }
    return instances;
}

}  // namespace

BenchResult run_bench(const BenchOptions& opt)
{
    BenchResult out;
    auto instances = build_suite(opt);

    struct Agg {
        long long count = 0;
        long long nodes = 0;
        double millis = 0;
        double ratio_sum = 0;
        long long ratio_count = 0;
        double ratio_max = 0;
    };
    std::map<std::pair<std::string, std::string>, Agg> aggregate;  // (algo, family)

    for (const auto& inst : instances) {
        std::optional<int> exact;
        if (opt.exact_cap > 0 && inst.graph.n() <= opt.exact_cap)
            exact = exact_bandwidth(inst.graph, opt.exact_cap).bandwidth;
        for (const auto& algo : opt.algos) {
            auto t0 = std::chrono::steady_clock::now();
            auto run = run_approx_algo(inst.graph, algo);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

            RunReport row;
            row.instance = inst.descriptor;
            row.algo = algo;
            row.ell_star = run.result.ell_star;
            row.lower = run.result.lower;
            row.upper = run.result.upper;
            if (run.result.witness)
                row.witness = run.result.witness->bucket_of;
            row.exact = exact;
            row.nodes = run.nodes;
            row.millis = 0.0;  // timing lives in the table; rows stay reproducible

            if (exact && !(*row.lower <= *exact && *exact <= *row.upper))
                throw std::logic_error("bench invariant violated on '" + inst.descriptor +
                                       "' (" + algo + "): exact " + std::to_string(*exact) +
                                       " outside [" + std::to_string(*row.lower) + "," +
                                       std::to_string(*row.upper) + "]");

            auto family = inst.descriptor.substr(0, inst.descriptor.find(' '));
            auto& agg = aggregate[{algo, family}];
            ++agg.count;
            agg.nodes += run.nodes;
            agg.millis += ms;
            if (exact) {
                double ratio = static_cast<double>(*row.upper) / std::max(1, *exact);
                agg.ratio_sum += ratio;
                ++agg.ratio_count;
                agg.ratio_max = std::max(agg.ratio_max, ratio);
            }
            out.rows.push_back(std::move(row));
        }
    }

    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const auto& row : out.rows)
        doc["rows"].push_back(report_to_json_obj(row));
    doc["aggregate"] = ordered_json::array();
    for (const auto& [key, agg] : aggregate) {
        ordered_json a;
        a["algo"] = key.first;
        a["family"] = key.second;
        a["instances"] = agg.count;
        a["mean_nodes"] = static_cast<double>(agg.nodes) / std::max<long long>(1, agg.count);
        if (agg.ratio_count > 0) {
            a["mean_ratio"] = agg.ratio_sum / agg.ratio_count;
            a["max_ratio"] = agg.ratio_max;
        } else {
            a["mean_ratio"] = nullptr;
            a["max_ratio"] = nullptr;
        }
        doc["aggregate"].push_back(a);
    }
    out.json = doc.dump(2);

    std::ostringstream table;
    table << "algo            family            runs   mean nodes   mean ms";
    table << "   mean ratio   max ratio\n";
    for (const auto& [key, agg] : aggregate) {
        char buf[160];
        double mean_nodes = static_cast<double>(agg.nodes) / std::max<long long>(1, agg.count);
        double mean_ms = agg.millis / std::max<long long>(1, agg.count);
        if (agg.ratio_count > 0)
            std::snprintf(buf, sizeof buf, "%-15s %-17s %4lld %12.1f %9.3f %12.3f %11.3f\n",
                          key.first.c_str(), key.second.c_str(), agg.count, mean_nodes, mean_ms,
                          agg.ratio_sum / agg.ratio_count, agg.ratio_max);
        else
            std::snprintf(buf, sizeof buf, "%-15s %-17s %4lld %12.1f %9.3f %12s %11s\n",
                          key.first.c_str(), key.second.c_str(), agg.count, mean_nodes, mean_ms,
                          "-", "-");
        table << buf;
    }
    out.table = table.str();
    return out;
}

}  // namespace bandwidth
