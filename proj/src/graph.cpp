#include "bandwidth/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bandwidth {

Graph::Graph(int n)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(n);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || u >= n() || v < 0 || v >= n())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loops not allowed");
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge");
    if (u > v)
        std::swap(u, v);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v}),
                  std::pair{u, v});
}

bool Graph::has_edge(int u, int v) const
{
    if (u < 0 || u >= n() || v < 0 || v >= n())
        return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x)
{
    std::vector<char> in_x(g.n(), 0), in_nb(g.n(), 0);
    for (int v : x) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("vertex set member out of range");
        in_x[v] = 1;
    }
    VertexSet nb;
    for (int v : x)
        for (int w : g.neighbors(v))
            if (!in_x[w] && !in_nb[w]) {
                in_nb[w] = 1;
                nb.push_back(w);
            }
    std::sort(nb.begin(), nb.end());
    return nb;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x)
{
    InducedSubgraph out;
    out.to_sub.assign(g.n(), -1);
    out.orig_of = x;
    std::sort(out.orig_of.begin(), out.orig_of.end());
    for (int i = 0; i < static_cast<int>(out.orig_of.size()); ++i) {
        int v = out.orig_of[i];
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("vertex set member out of range");
        if (out.to_sub[v] != -1)
            throw std::invalid_argument("duplicate vertex in set");
        out.to_sub[v] = i;
    }
    out.graph = Graph(static_cast<int>(out.orig_of.size()));
    for (int v : out.orig_of)
        for (int w : g.neighbors(v))
            if (v < w && out.to_sub[w] != -1)
                out.graph.add_edge(out.to_sub[v], out.to_sub[w]);
    return out;
}

ComponentSplit split_small_large(const Graph& g, const VertexSet& x, int threshold)
{
    if (threshold < 1)
        throw std::invalid_argument("threshold must be positive");
    std::vector<char> removed(g.n(), 0);
    for (int v : x) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("vertex set member out of range");
        removed[v] = 1;
    }
    VertexSet rest;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v])
            rest.push_back(v);
    auto sub = induced_subgraph(g, rest);
    ComponentSplit split;
    for (const auto& comp : connected_components(sub.graph)) {
        VertexSet orig;
        orig.reserve(comp.size());
        for (int v : comp)
            orig.push_back(sub.orig_of[v]);
        auto& side = static_cast<int>(orig.size()) <= threshold ? split.small : split.large;
        side.push_back(std::move(orig));
    }
    return split;
}

// --- generators -----------------------------------------------------------

Graph make_path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph make_star(int leaves)
{
    if (leaves < 0)
        throw std::invalid_argument("star needs leaves >= 0");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

Graph make_caterpillar(int n, int hair_len)
{
    if (n < 1 || hair_len < 0)
        throw std::invalid_argument("caterpillar needs n >= 1, hair_len >= 0");
    Graph g(n * (1 + hair_len));
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    int next = n;
    for (int i = 0; i < n; ++i) {
        int attach = i;
        for (int h = 0; h < hair_len; ++h) {
            g.add_edge(attach, next);
            attach = next++;
        }
    }
    return g;
}

Graph make_path_power(int n, int b)
{
    if (n < 1 || b < 1 || b >= n)
        throw std::invalid_argument("path power needs 1 <= b < n");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= b && i + d < n; ++d)
            g.add_edge(i, i + d);
    return g;
}

namespace {

// splitmix64; stable across platforms unlike <random> distributions
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

Graph make_random_connected(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random graph needs n >= 1");
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("edge probability must be in (0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p)
                g.add_edge(i, j);
    for (;;) {
        auto comps = connected_components(g);
        if (comps.size() <= 1)
            break;
        std::vector<int> comp_of(n);
        for (int c = 0; c < static_cast<int>(comps.size()); ++c)
            for (int v : comps[c])
                comp_of[v] = c;
        std::vector<std::pair<int, int>> cross;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (comp_of[u] != comp_of[v])
                    cross.push_back({u, v});
        auto [u, v] = cross[rng.below(cross.size())];
        g.add_edge(u, v);
    }
    return g;
}

Graph generate(const std::string& family, const GenParams& params)
{
    if (family == "path")
        return make_path(params.n);
    if (family == "cycle")
        return make_cycle(params.n);
    if (family == "complete")
        return make_complete(params.n);
    if (family == "star")
        return make_star(params.n);
    if (family == "caterpillar")
        return make_caterpillar(params.n, params.b);
    if (family == "path_power")
        return make_path_power(params.n, params.b);
    if (family == "random_connected")
        return make_random_connected(params.n, params.p, params.seed);
    throw std::invalid_argument("unknown family: " + family);
}

// --- parsing / formatting ---------------------------------------------------

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (toks.empty() || toks[0] == "c")
            continue;
        lines.push_back({number, std::move(toks)});
    }
    return lines;
}

int parse_int(const std::string& tok, int line, const char* what)
{
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph(const std::string& text)
{
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, "empty input");

    auto add_checked = [](Graph& g, int u, int v, int line) {
        if (u < 1 || u > g.n() || v < 1 || v > g.n())
            throw ParseError(line, "vertex id out of range [1," + std::to_string(g.n()) + "]");
        if (u == v)
            throw ParseError(line, "self-loop");
        if (g.has_edge(u - 1, v - 1))
            throw ParseError(line, "duplicate edge");
        g.add_edge(u - 1, v - 1);
    };

    if (lines[0].tokens[0] == "p") {
        const auto& hdr = lines[0];
        if (hdr.tokens.size() != 4 || hdr.tokens[1] != "edge")
            throw ParseError(hdr.number, "malformed header, expected 'p edge <n> <m>'");
        int n = parse_int(hdr.tokens[2], hdr.number, "vertex count");
        int m = parse_int(hdr.tokens[3], hdr.number, "edge count");
        if (n < 0 || m < 0)
            throw ParseError(hdr.number, "counts must be nonnegative");
        Graph g(n);
        int edges_seen = 0;
        for (size_t i = 1; i < lines.size(); ++i) {
            const auto& ln = lines[i];
            if (ln.tokens[0] != "e" || ln.tokens.size() != 3)
                throw ParseError(ln.number, "expected 'e <u> <v>'");
            add_checked(g, parse_int(ln.tokens[1], ln.number, "endpoint"),
                        parse_int(ln.tokens[2], ln.number, "endpoint"), ln.number);
            ++edges_seen;
        }
        if (edges_seen != m)
            throw ParseError(lines.back().number,
                             "header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges_seen));
        return g;
    }

    // bare edge list: infer n from the largest 1-based id
    int n = 0;
    std::vector<std::tuple<int, int, int>> raw;
    for (const auto& ln : lines) {
        if (ln.tokens.size() != 2)
            throw ParseError(ln.number, "expected '<u> <v>'");
        int u = parse_int(ln.tokens[0], ln.number, "endpoint");
        int v = parse_int(ln.tokens[1], ln.number, "endpoint");
        if (u < 1 || v < 1)
            throw ParseError(ln.number, "vertex ids are 1-based");
        n = std::max({n, u, v});
        raw.emplace_back(u, v, ln.number);
    }
    Graph g(n);
    for (auto [u, v, line] : raw)
        add_checked(g, u, v, line);
    return g;
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace bandwidth
