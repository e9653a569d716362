#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bandwidth/arrangement.hpp"
#include "brute.hpp"

using namespace bandwidth;

TEST_CASE("arrangement bandwidth")
{
    CHECK(arrangement_bandwidth(make_path(4), LinearArrangement::identity(4)) == 1);
    CHECK(arrangement_bandwidth(make_complete(3), LinearArrangement::identity(3)) == 2);
    CHECK(arrangement_bandwidth(make_cycle(4), LinearArrangement::identity(4)) == 3);
    CHECK(arrangement_bandwidth(Graph(5), LinearArrangement::identity(5)) == 0);

    LinearArrangement bad;
    bad.rank_of = {1, 1, 2};
    CHECK_THROWS_AS(arrangement_bandwidth(make_path(3), bad), std::invalid_argument);
}

TEST_CASE("capacity vectors")
{
    auto b = make_capacity_vector(10, 3, VectorStyle::balanced);
    CHECK(std::vector<int>(b.caps().begin(), b.caps().end()) == std::vector<int>{2, 3, 3, 2});
    auto lp = make_capacity_vector(10, 3, VectorStyle::left_packed);
    CHECK(std::vector<int>(lp.caps().begin(), lp.caps().end()) == std::vector<int>{3, 3, 3, 1});
    auto even = make_capacity_vector(8, 2, VectorStyle::balanced);
    CHECK(std::vector<int>(even.caps().begin(), even.caps().end()) ==
          std::vector<int>{2, 2, 2, 2});
    CHECK(make_capacity_vector(8, 2, VectorStyle::left_packed) == even);

    CHECK_THROWS_AS(make_capacity_vector(10, 6, VectorStyle::balanced), std::invalid_argument);
    CHECK_THROWS_AS(make_capacity_vector(10, 0, VectorStyle::balanced), std::invalid_argument);
    CHECK_THROWS_AS(CapacityVector({2, 0, 2}), std::invalid_argument);
}

TEST_CASE("capacity vector invariants up to n = 200")
{
    for (int n = 1; n <= 200; ++n) {
        for (int ell = 1; ell <= (n + 1) / 2; ++ell) {
            for (auto style : {VectorStyle::balanced, VectorStyle::left_packed}) {
                auto c = make_capacity_vector(n, ell, style);
                CHECK(c.size() == n);
                CHECK(c.length() == (n + ell - 1) / ell);
                for (int i = 0; i < c.length(); ++i) {
                    CHECK(c[i] >= 1);
                    CHECK(c[i] <= ell);
                    if (i > 0 && i < c.length() - 1)
                        CHECK(c[i] == ell);
                }
                if (style == VectorStyle::left_packed)
                    CHECK(c[0] == (c.length() > 1 ? ell : n));
                else if (c.length() > 1)
                    CHECK(std::abs(c[0] - c[c.length() - 1]) <= 1);
            }
        }
    }
}

TEST_CASE("arrangement from buckets")
{
    auto p4 = make_path(4);
    BucketArrangement b{{0, 0, 1, 1}, CapacityVector({2, 2})};
    auto l = arrangement_from_buckets(p4, b);
    CHECK(l.rank_of == std::vector<int>{1, 2, 3, 4});
    CHECK(arrangement_bandwidth(p4, l) == 1);

    auto k4 = make_complete(4);
    BucketArrangement bk{{0, 0, 1, 1}, CapacityVector({2, 2})};
    CHECK(arrangement_bandwidth(k4, arrangement_from_buckets(k4, bk)) == 3);

    auto c6 = make_cycle(6);
    BucketArrangement bc{{0, 0, 1, 2, 2, 1}, CapacityVector({2, 2, 2})};
    CHECK(arrangement_bandwidth(c6, arrangement_from_buckets(c6, bc)) <= 3);

    BucketArrangement invalid{{0, 0, 0, 1}, CapacityVector({2, 2})};
    CHECK_THROWS_AS(arrangement_from_buckets(p4, invalid), std::invalid_argument);
}

TEST_CASE("buckets from arrangement")
{
    auto p6 = make_path(6);
    auto r = buckets_from_arrangement(p6, LinearArrangement::identity(6), CapacityVector({2, 2, 2}));
    CHECK(!r.violation);
    CHECK(r.arrangement.bucket_of == std::vector<int>{0, 0, 1, 1, 2, 2});

    auto c4 = make_cycle(4);
    auto rc = buckets_from_arrangement(c4, LinearArrangement::identity(4), CapacityVector({2, 2}));
    CHECK(!rc.violation);

    auto p3 = make_path(3);
    LinearArrangement l;
    l.rank_of = {1, 3, 2};  // order 0,2,1
    auto rv = buckets_from_arrangement(p3, l, CapacityVector({1, 1, 1}));
    REQUIRE(rv.violation);
    CHECK(rv.violation->find("spans buckets") != std::string::npos);
}

TEST_CASE("validate bucket arrangement")
{
    auto p4 = make_path(4);
    CHECK(!validate_bucket_arrangement(p4, {{0, 0, 1, 1}, CapacityVector({2, 2})}));

    auto k4 = make_complete(4);
    CHECK(validate_bucket_arrangement(k4, {{0, 1, 2, 3}, CapacityVector({1, 1, 1, 1})}));

    CHECK(validate_bucket_arrangement(p4, {{0, 0, 0, 1}, CapacityVector({2, 2})}));
}

TEST_CASE("lemma conversions under every arrangement, n <= 8")
{
    // an arrangement of bandwidth <= ell cut into an (n,ell)-capacity vector
    // is always a valid bucket arrangement, and the round trip through
    // arrangement_from_buckets never exceeds 2*ell-1
    std::vector<Graph> graphs = {make_path(5),          make_path(6),
                                 make_cycle(5),         make_cycle(6),
                                 make_star(4),          make_complete(5),
                                 make_caterpillar(3, 1), make_path_power(6, 2),
                                 make_path(8),          make_cycle(8),
                                 make_star(7),          make_caterpillar(4, 1),
                                 make_path_power(8, 3), make_random_connected(8, 0.35, 5),
                                 make_path(7),          make_cycle(7),
                                 make_random_connected(7, 0.4, 6)};
    for (const auto& g : graphs) {
        const int n = g.n();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        do {
            LinearArrangement l;
            l.rank_of.resize(n);
            for (int r = 0; r < n; ++r)
                l.rank_of[order[r]] = r + 1;
            int bw = arrangement_bandwidth(g, l);
            for (int ell = std::max(1, bw); ell <= (n + 1) / 2; ++ell) {
                for (auto style : {VectorStyle::balanced, VectorStyle::left_packed}) {
                    auto res = buckets_from_arrangement(g, l, make_capacity_vector(n, ell, style));
                    CHECK(!res.violation);
                    CHECK(!validate_bucket_arrangement(g, res.arrangement));
                    auto back = arrangement_from_buckets(g, res.arrangement);
                    CHECK(arrangement_bandwidth(g, back) <= 2 * ell - 1);
                }
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("exact bandwidth")
{
    for (int n = 1; n <= 10; ++n)
        CHECK(exact_bandwidth(make_path(n)).bandwidth == (n > 1 ? 1 : 0));
    for (int n = 2; n <= 9; ++n)
        CHECK(exact_bandwidth(make_complete(n)).bandwidth == n - 1);
    CHECK(exact_bandwidth(make_star(4)).bandwidth == 2);
    CHECK(exact_bandwidth(make_cycle(5)).bandwidth == 2);

    CHECK_THROWS_AS(exact_bandwidth(make_path(13)), CapExceededError);
    CHECK(exact_bandwidth(make_path(13), 13).bandwidth == 1);

    // optimal arrangement is returned and achieves the optimum
    auto res = exact_bandwidth(make_cycle(6));
    CHECK(res.bandwidth == 2);
    CHECK(arrangement_bandwidth(make_cycle(6), res.arrangement) == 2);
}

TEST_CASE("exact bandwidth agrees with permutation brute force")
{
    std::vector<Graph> graphs = {make_path(6),    make_cycle(6),          make_cycle(7),
                                 make_star(5),    make_caterpillar(2, 2), make_path_power(7, 2),
                                 make_path_power(6, 3)};
    for (int n = 4; n <= 7; ++n)
        for (std::uint64_t seed = 0; seed < 8; ++seed)
            graphs.push_back(make_random_connected(n, 0.45, seed));
    // a couple of disconnected ones
    {
        Graph g(7);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 3);
        graphs.push_back(g);
        graphs.push_back(Graph(5));
    }
    for (const auto& g : graphs) {
        auto res = exact_bandwidth(g);
        CHECK(res.bandwidth == brute::min_bandwidth(g));
        CHECK(arrangement_bandwidth(g, res.arrangement) == res.bandwidth);
    }
}
