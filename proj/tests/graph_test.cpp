#include <doctest.h>

#include "bandwidth/graph.hpp"

using namespace bandwidth;

namespace {

std::vector<std::pair<std::string, Graph>> generator_zoo(int max_n)
{
    std::vector<std::pair<std::string, Graph>> zoo;
    for (int n = 1; n <= max_n; ++n)
        zoo.push_back({"path" + std::to_string(n), make_path(n)});
    for (int n = 3; n <= max_n; ++n)
        zoo.push_back({"cycle" + std::to_string(n), make_cycle(n)});
    for (int n = 1; n <= max_n; ++n)
        zoo.push_back({"complete" + std::to_string(n), make_complete(n)});
    for (int leaves = 1; leaves + 1 <= max_n; ++leaves)
        zoo.push_back({"star" + std::to_string(leaves), make_star(leaves)});
    for (int spine = 1; spine <= max_n; ++spine)
        for (int hair = 1; spine * (1 + hair) <= max_n; ++hair)
            zoo.push_back({"caterpillar", make_caterpillar(spine, hair)});
    for (int n = 2; n <= max_n; ++n)
        for (int b = 1; b < n; ++b)
            zoo.push_back({"path_power", make_path_power(n, b)});
    for (int n = 2; n <= max_n; ++n)
        zoo.push_back({"random", make_random_connected(n, 0.4, 7 * n + 1)});
    return zoo;
}

}  // namespace

TEST_CASE("connected components")
{
    CHECK(connected_components(make_path(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});

    Graph edgeless(3);
    CHECK(connected_components(edgeless) == std::vector<VertexSet>{{0}, {1}, {2}});

    // P3 plus K2 on 5 vertices
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4});
}

TEST_CASE("open neighborhood")
{
    CHECK(open_neighborhood(make_path(4), {1}) == VertexSet{0, 2});
    CHECK(open_neighborhood(make_complete(4), {0, 1}) == VertexSet{2, 3});
    auto g = make_cycle(5);
    CHECK(open_neighborhood(g, {0, 1, 2, 3, 4}).empty());
}

TEST_CASE("induced subgraph")
{
    auto k3 = induced_subgraph(make_complete(4), {0, 1, 2});
    CHECK(k3.graph.n() == 3);
    CHECK(k3.graph.m() == 3);

    auto iso = induced_subgraph(make_path(5), {0, 2, 4});
    CHECK(iso.graph.n() == 3);
    CHECK(iso.graph.m() == 0);

    // any 4 vertices of C5 induce P4
    auto c5 = make_cycle(5);
    for (int skip = 0; skip < 5; ++skip) {
        VertexSet x;
        for (int v = 0; v < 5; ++v)
            if (v != skip)
                x.push_back(v);
        auto sub = induced_subgraph(c5, x);
        CHECK(sub.graph.n() == 4);
        CHECK(sub.graph.m() == 3);
        int deg1 = 0;
        for (int v = 0; v < 4; ++v)
            deg1 += sub.graph.degree(v) == 1;
        CHECK(deg1 == 2);  // path has exactly two ends
    }

    // vertex map is a bijection onto 0..|x|-1
    auto sub = induced_subgraph(make_path(6), {1, 3, 4});
    std::vector<char> hit(3, 0);
    for (int v = 0; v < 6; ++v)
        if (sub.to_sub[v] != -1) {
            CHECK(sub.orig_of[sub.to_sub[v]] == v);
            hit[sub.to_sub[v]] = 1;
        }
    CHECK(std::count(hit.begin(), hit.end(), 1) == 3);
}

TEST_CASE("split small large")
{
    auto p7 = make_path(7);
    auto split = split_small_large(p7, {3}, 2);
    CHECK(split.small.empty());
    REQUIRE(split.large.size() == 2);
    CHECK(split.large[0] == VertexSet{0, 1, 2});
    CHECK(split.large[1] == VertexSet{4, 5, 6});

    auto star = make_star(6);
    auto s2 = split_small_large(star, {0}, 2);
    CHECK(s2.small.size() == 6);
    CHECK(s2.large.empty());

    auto s3 = split_small_large(p7, {3}, 3);
    CHECK(s3.small.size() == 2);
    CHECK(s3.large.empty());
}

TEST_CASE("generators")
{
    auto p4 = make_path(4);
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    auto pp = make_path_power(5, 2);
    CHECK(pp.m() == 7);
    CHECK(pp.has_edge(0, 2));
    CHECK(pp.has_edge(1, 3));
    CHECK(pp.has_edge(2, 4));
    CHECK(!pp.has_edge(0, 3));

    auto star = make_star(4);
    CHECK(star.n() == 5);
    for (int leaf = 1; leaf <= 4; ++leaf)
        CHECK(star.has_edge(0, leaf));

    CHECK_THROWS_AS(make_path_power(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_random_connected(5, 0.0, 1), std::invalid_argument);
}

TEST_CASE("path power edge count for all n <= 30")
{
    for (int n = 2; n <= 30; ++n)
        for (int b = 1; b < n; ++b)
            CHECK(make_path_power(n, b).m() == n * b - b * (b + 1) / 2);
}

TEST_CASE("random_connected is connected and deterministic")
{
    for (int n : {2, 5, 10, 25}) {
        for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
            auto g1 = make_random_connected(n, 0.2, seed);
            auto g2 = make_random_connected(n, 0.2, seed);
            CHECK(g1 == g2);
            CHECK(connected_components(g1).size() == 1);
        }
    }
}

TEST_CASE("component partition and neighborhood disjointness across the zoo")
{
    for (const auto& [name, g] : generator_zoo(50)) {
        CAPTURE(name);
        auto comps = connected_components(g);
        std::vector<char> seen(g.n(), 0);
        for (const auto& comp : comps)
            for (int v : comp) {
                CHECK(!seen[v]);
                seen[v] = 1;
            }
        CHECK(std::count(seen.begin(), seen.end(), 1) == g.n());

        // sampled vertex subsets
        for (int mask = 0; mask < (1 << std::min(g.n(), 6)); mask += 3) {
            VertexSet x;
            for (int v = 0; v < std::min(g.n(), 6); ++v)
                if (mask & (1 << v))
                    x.push_back(v);
            auto nb = open_neighborhood(g, x);
            for (int v : nb)
                CHECK(!std::binary_search(x.begin(), x.end(), v));
        }
    }
}

TEST_CASE("split equals components of g minus x")
{
    for (const auto& [name, g] : generator_zoo(12)) {
        CAPTURE(name);
        VertexSet x;
        for (int v = 0; v < g.n(); v += 3)
            x.push_back(v);
        if (x.empty() || static_cast<int>(x.size()) == g.n())
            continue;
        int threshold = 2;
        auto split = split_small_large(g, x, threshold);
        VertexSet rest;
        std::vector<char> in_x(g.n(), 0);
        for (int v : x)
            in_x[v] = 1;
        for (int v = 0; v < g.n(); ++v)
            if (!in_x[v])
                rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        size_t total = split.small.size() + split.large.size();
        CHECK(total == connected_components(sub.graph).size());
        for (const auto& comp : split.small)
            CHECK(static_cast<int>(comp.size()) <= threshold);
        for (const auto& comp : split.large)
            CHECK(static_cast<int>(comp.size()) > threshold);
    }
}

TEST_CASE("parse and format")
{
    auto p3 = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(p3.n() == 3);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));

    auto lone = parse_graph("p edge 1 0\n");
    CHECK(lone.n() == 1);
    CHECK(lone.m() == 0);

    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p vertex 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 1\ne 2 3\n"), ParseError);

    // error message names the offending line
    try {
        parse_graph("c comment\np edge 3 1\ne 1 9\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    // bare edge list, n inferred
    auto bare = parse_graph("1 2\n2 3\n3 4\n");
    CHECK(bare.n() == 4);
    CHECK(bare.m() == 3);

    for (const auto& [name, g] : generator_zoo(14)) {
        CAPTURE(name);
        auto round = parse_graph(format_graph(g));
        CHECK(round == g);
    }
}
