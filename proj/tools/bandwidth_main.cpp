#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bandwidth/backtrack.hpp"
#include "bandwidth/constant_k.hpp"
#include "bandwidth/divide_conquer.hpp"
#include "bandwidth/graph.hpp"
#include "bandwidth/report.hpp"

namespace {

using namespace bandwidth;

struct InputOptions {
    std::string input_file;
    std::string family;
    GenParams params;
};

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    auto* file = cmd->add_option("--input", in.input_file, "graph file (DIMACS or edge list)");
    auto* fam = cmd->add_option("--family", in.family,
                                "generator family: path, cycle, complete, star, caterpillar, "
                                "path_power, random_connected");
    cmd->add_option("--n", in.params.n, "family size parameter");
    cmd->add_option("--b", in.params.b, "path_power distance / caterpillar hair length");
    cmd->add_option("--p", in.params.p, "random_connected edge probability");
    cmd->add_option("--seed", in.params.seed, "generator seed");
    file->excludes(fam);
}

Graph load_graph(const InputOptions& in)
{
    if (!in.input_file.empty()) {
        std::ifstream f(in.input_file);
        if (!f)
            throw ParseError(0, "cannot open " + in.input_file);
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_graph(buf.str());
    }
    if (in.family.empty())
        throw std::invalid_argument("provide --input FILE or --family NAME");
    return generate(in.family, in.params);
}

std::string describe(const InputOptions& in)
{
    if (!in.input_file.empty())
        return "file:" + in.input_file;
    std::ostringstream s;
    s << in.family << " n=" << in.params.n;
    if (in.family == "path_power" || in.family == "caterpillar")
        s << " b=" << in.params.b;
    if (in.family == "random_connected")
        s << " p=" << in.params.p << " seed=" << in.params.seed;
    return s.str();
}

std::vector<std::string> split_csv(const std::string& csv)
{
    std::vector<std::string> parts;
    std::stringstream s(csv);
    std::string item;
    while (std::getline(s, item, ','))
        if (!item.empty())
            parts.push_back(item);
    return parts;
}

void print_vector_line(std::ostream& os, const char* label, const std::vector<int>& xs)
{
    os << label;
    for (int x : xs)
        os << ' ' << x;
    os << '\n';
}

int cmd_approx(const InputOptions& in, const std::string& algo, bool with_exact, int cap,
               bool json)
{
    Graph g = load_graph(in);
    auto t0 = std::chrono::steady_clock::now();
    auto run = run_approx_algo(g, algo);
    auto t1 = std::chrono::steady_clock::now();

    RunReport row;
    row.instance = describe(in);
    row.algo = algo;
    row.ell_star = run.result.ell_star;
    row.lower = run.result.lower;
    row.upper = run.result.upper;
    if (run.result.witness)
        row.witness = run.result.witness->bucket_of;
    if (with_exact)
        row.exact = exact_bandwidth(g, cap).bandwidth;
    row.nodes = run.nodes;
    row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (row.exact && !(*row.lower <= *row.exact && *row.exact <= *row.upper))
        throw std::logic_error("approximation bounds exclude the exact bandwidth");

    if (json) {
        std::cout << report_to_json(row) << '\n';
    } else {
        std::cout << "instance: " << row.instance << "\nalgo: " << algo
                  << "\nell_star: " << *row.ell_star << "\nlower: " << *row.lower
                  << "\nupper: " << *row.upper << " (reported bandwidth)\n";
        if (row.exact)
            std::cout << "exact: " << *row.exact << '\n';
        if (row.witness)
            print_vector_line(std::cout, "witness (bucket per vertex):", *row.witness);
        std::cout << "nodes: " << row.nodes << "\nmillis: " << row.millis << '\n';
    }
    return 0;
}

int cmd_exact(const InputOptions& in, int cap, bool json)
{
    Graph g = load_graph(in);
    auto t0 = std::chrono::steady_clock::now();
    auto res = exact_bandwidth(g, cap);
    auto t1 = std::chrono::steady_clock::now();

    RunReport row;
    row.instance = describe(in);
    row.algo = "exact";
    row.lower = res.bandwidth;
    row.upper = res.bandwidth;
    row.exact = res.bandwidth;
    row.nodes = res.nodes;
    row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.arrangement = res.arrangement.rank_of;

    if (json) {
        std::cout << report_to_json(row) << '\n';
    } else {
        std::cout << "instance: " << row.instance << "\nexact bandwidth: " << res.bandwidth
                  << '\n';
        print_vector_line(std::cout, "arrangement (rank per vertex):", res.arrangement.rank_of);
        std::cout << "nodes: " << row.nodes << "\nmillis: " << row.millis << '\n';
    }
    return 0;
}

int cmd_decide(const InputOptions& in, int ell, const std::string& style_name, bool json)
{
    Graph g = load_graph(in);
    if (ell < 1 || ell > (g.n() + 1) / 2)
        throw std::invalid_argument("--ell must be in [1, ceil(n/2)]");
    if (!is_connected(g))
        throw std::invalid_argument("decide needs a connected graph");
    VectorStyle style;
    if (style_name == "balanced")
        style = VectorStyle::balanced;
    else if (style_name == "left_packed")
        style = VectorStyle::left_packed;
    else
        throw std::invalid_argument("--style must be balanced or left_packed");

    SearchStats stats;
    auto t0 = std::chrono::steady_clock::now();
    std::optional<BucketArrangement> witness;
    if (2 * ell >= g.n()) {
        auto dec = decide_backtrack(
            g, make_capacity_vector(g.n(), (g.n() + 1) / 2, style));
        stats.absorb(dec.stats);
        witness = std::move(dec.arrangement);
    } else {
        auto dec = decide_dc(g, make_capacity_vector(g.n(), ell, style));
        stats.absorb(dec.stats);
        witness = std::move(dec.arrangement);
    }
    auto t1 = std::chrono::steady_clock::now();

    RunReport row;
    row.instance = describe(in);
    row.algo = "decide";
    row.nodes = stats.nodes_visited;
    row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (witness) {
        row.verdict = "at_most";
        row.upper = 2 * ell - 1;
        row.witness = witness->bucket_of;
    } else {
        row.verdict = "at_least";
        row.lower = ell + 1;
    }

    if (json) {
        std::cout << report_to_json(row) << '\n';
    } else if (witness) {
        std::cout << "at_most " << 2 * ell - 1 << '\n';
        print_vector_line(std::cout, "witness (bucket per vertex):", witness->bucket_of);
    } else {
        std::cout << "at_least " << ell + 1 << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"2-approximation of graph bandwidth via bucket decompositions"};
    app.require_subcommand(1);

    InputOptions in;
    std::string algo = "fast";
    std::string style = "balanced";
    std::string out_file;
    std::string families_csv = "path,cycle,random_connected";
    std::string algos_csv = "fast,backtrack";
    bool json = false;
    bool with_exact = false;
    int cap = 12;
    int ell = 1;
    BenchOptions bench;

    auto* gen = app.add_subcommand("gen", "generate an instance and print it");
    add_input_options(gen, in);
    gen->add_option("--output", out_file, "write to file instead of stdout");

    auto* approx = app.add_subcommand("approx", "2-approximate the bandwidth");
    add_input_options(approx, in);
    approx->add_option("--algo", algo, "fast | backtrack | dc");
    approx->add_flag("--exact", with_exact, "also compute the exact bandwidth");
    approx->add_option("--cap", cap, "exact oracle size cap");
    approx->add_flag("--json", json, "JSON report");

    auto* exact = app.add_subcommand("exact", "exact bandwidth (small graphs)");
    add_input_options(exact, in);
    exact->add_option("--cap", cap, "size cap (default 12)");
    exact->add_flag("--json", json, "JSON report");

    auto* decide = app.add_subcommand("decide", "bandwidth window decision for one ell");
    add_input_options(decide, in);
    decide->add_option("--ell", ell, "bucket size ell")->required();
    decide->add_option("--style", style, "balanced | left_packed");
    decide->add_flag("--json", json, "JSON report");

    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
    bench_cmd->add_option("--families", families_csv, "comma-separated family list");
    bench_cmd->add_option("--n-min", bench.n_min, "smallest size");
    bench_cmd->add_option("--n-max", bench.n_max, "largest size");
    bench_cmd->add_option("--reps", bench.reps, "instances per size for seeded families");
    bench_cmd->add_option("--algos", algos_csv, "comma-separated algorithm list");
    bench_cmd->add_option("--seed", bench.seed, "suite seed");
    bench_cmd->add_option("--p", bench.p, "random_connected edge probability");
    bench_cmd->add_option("--b", bench.b, "path_power / caterpillar parameter");
    bench_cmd->add_option("--exact-cap", bench.exact_cap,
                          "record exact bandwidth when n <= cap (0 disables)");
    bench_cmd->add_flag("--json", json, "deterministic JSON document on stdout");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(gen)) {
            Graph g = load_graph(in);
            if (out_file.empty()) {
                std::cout << format_graph(g);
            } else {
                std::ofstream f(out_file);
                if (!f)
                    throw std::invalid_argument("cannot write " + out_file);
                f << format_graph(g);
            }
            return 0;
        }
        if (app.got_subcommand(approx))
            return cmd_approx(in, algo, with_exact, cap, json);
        if (app.got_subcommand(exact))
            return cmd_exact(in, cap, json);
        if (app.got_subcommand(decide))
            return cmd_decide(in, ell, style, json);
        if (app.got_subcommand(bench_cmd)) {
            bench.families = split_csv(families_csv);
            bench.algos = split_csv(algos_csv);
            auto result = run_bench(bench);
            if (json) {
                std::cout << result.json << '\n';
                std::cerr << result.table;
            } else {
                std::cout << result.table;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
