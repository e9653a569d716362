#include <doctest.h>

#include "bandwidth/divide_conquer.hpp"
#include "brute.hpp"

using namespace bandwidth;

TEST_CASE("choose_split_index")
{
    auto a = choose_split_index(CapacityVector({2, 3, 3, 2}));
    CHECK(a.split_index == 1);
    CHECK(a.left_caps.caps().size() == 1);
    CHECK(a.right_caps.caps().size() == 2);

    auto b = choose_split_index(CapacityVector({1, 1, 1, 1, 1}));
    CHECK(b.split_index == 2);

    auto c = choose_split_index(CapacityVector({3, 3, 3, 3, 3, 3, 3}));
    CHECK(c.split_index == 3);

    CHECK_THROWS_AS(choose_split_index(CapacityVector({2, 2})), std::invalid_argument);

    // prefix and suffix sums both within half the total
    for (int k = 3; k <= 9; ++k) {
        std::vector<int> caps(k, 2);
        caps[0] = 1;
        auto plan = choose_split_index(CapacityVector(caps));
        int total = 2 * k - 1;
        int prefix = plan.left_caps.length() ? plan.left_caps.size() : 0;
        int suffix = plan.right_caps.length() ? plan.right_caps.size() : 0;
        CHECK(2 * prefix <= total);
        CHECK(2 * suffix <= total);
        CHECK(prefix + caps[plan.split_index] + suffix == total);
    }
}

TEST_CASE("decide_dc on the spec instances")
{
    auto p9 = decide_dc(make_path(9), CapacityVector(std::vector<int>(9, 1)));
    REQUIRE(p9.arrangement);
    CHECK(!validate_bucket_arrangement(make_path(9), *p9.arrangement));

    auto k4 = decide_dc(make_complete(4), CapacityVector({1, 1, 1, 1}));
    CHECK(!k4.arrangement);

    auto c6 = decide_dc(make_cycle(6), CapacityVector({2, 2, 2}));
    REQUIRE(c6.arrangement);
    CHECK(!validate_bucket_arrangement(make_cycle(6), *c6.arrangement));

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(decide_dc(disconnected, CapacityVector({2, 2})), std::invalid_argument);
}

TEST_CASE("pins constrain the split")
{
    auto p9 = make_path(9);
    CapacityVector c(std::vector<int>(9, 1));
    PinConstraint pins;
    pins.set(0, 4);  // a path end in the middle of unit buckets cannot work
    auto dec = decide_dc(p9, c, pins);
    REQUIRE(!dec.arrangement);

    PinConstraint ok;
    ok.set(4, 4);
    auto dec2 = decide_dc(p9, c, ok);
    REQUIRE(dec2.arrangement);
    CHECK(dec2.arrangement->bucket_of[4] == 4);
}

TEST_CASE("divide and conquer agrees with backtracking")
{
    long long checked = 0;
    for (int n = 4; n <= 10; ++n) {
        std::vector<Graph> graphs;
        graphs.push_back(make_path(n));
        graphs.push_back(make_cycle(n));
        graphs.push_back(make_star(n - 1));
        graphs.push_back(make_path_power(n, 2));
        for (std::uint64_t seed = 0; seed < 40; ++seed)
            graphs.push_back(make_random_connected(n, 0.2 + 0.12 * (seed % 5), 500 + seed));
        for (const auto& g : graphs) {
            for (int ell = 1; ell <= (n + 1) / 2; ++ell) {
                for (auto style : {VectorStyle::balanced, VectorStyle::left_packed}) {
                    auto c = make_capacity_vector(n, ell, style);
                    auto bt = decide_backtrack(g, c);
                    auto dc = decide_dc(g, c);
                    REQUIRE(bt.arrangement.has_value() == dc.arrangement.has_value());
                    if (dc.arrangement)
                        REQUIRE(!validate_bucket_arrangement(g, *dc.arrangement));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 1500);
}

TEST_CASE("unit-capacity witness on a path is a path layout")
{
    auto p9 = make_path(9);
    auto dec = decide_dc(p9, CapacityVector(std::vector<int>(9, 1)));
    REQUIRE(dec.arrangement);
    const auto& b = dec.arrangement->bucket_of;
    for (auto [u, v] : p9.edges())
        CHECK(std::abs(b[u] - b[v]) == 1);
}

TEST_CASE("component bound rejects without recursion")
{
    // star with 8 leaves against unit capacities: any split set leaves more
    // components than the two neighboring buckets can host
    auto star = make_star(8);
    DcInstrumentation instr;
    auto dec = decide_dc(star, CapacityVector(std::vector<int>(9, 1)), {}, -1, &instr);
    CHECK(!dec.arrangement);
    CHECK(instr.rejected_component_bound > 0);
    CHECK(instr.x_candidates > 0);

    DcInstrumentation path_instr;
    decide_dc(make_path(9), CapacityVector(std::vector<int>(9, 1)), {}, -1, &path_instr);
    CHECK(path_instr.rejected_component_bound == 0);
    CHECK(path_instr.side_solves >= 2);  // both sides of the split were solved
}

TEST_CASE("base size delegates to plain backtracking")
{
    auto g = make_cycle(8);
    auto c = make_capacity_vector(8, 2, VectorStyle::balanced);
    DcInstrumentation instr;
    auto dec = decide_dc(g, c, {}, 8, &instr);  // base covers the whole graph
    REQUIRE(dec.arrangement);
    CHECK(instr.x_candidates == 0);  // no split enumeration happened
}

TEST_CASE("decide_bandwidth_window")
{
    auto c6 = make_cycle(6);
    auto w1 = decide_bandwidth_window(c6, 1);
    CHECK(w1.verdict == WindowVerdict::at_least);
    CHECK(w1.bound == 2);

    auto w2 = decide_bandwidth_window(c6, 2);
    CHECK(w2.verdict == WindowVerdict::at_most);
    CHECK(w2.bound == 3);
    REQUIRE(w2.witness);
    CHECK(!validate_bucket_arrangement(c6, *w2.witness));

    auto w3 = decide_bandwidth_window(c6, 3);
    CHECK(w3.verdict == WindowVerdict::at_most);
    CHECK(w3.bound == 5);

    auto k5 = decide_bandwidth_window(make_complete(5), 2);
    CHECK(k5.verdict == WindowVerdict::at_least);
    CHECK(k5.bound == 3);

    // window verdicts never contradict the exact bandwidth
    for (int n = 4; n <= 9; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = make_random_connected(n, 0.35, 900 + seed);
            int exact = exact_bandwidth(g).bandwidth;
            for (int ell = 1; ell <= (n + 1) / 2; ++ell) {
                auto w = decide_bandwidth_window(g, ell);
                if (w.verdict == WindowVerdict::at_most)
                    CHECK(exact <= w.bound);
                else
                    CHECK(exact >= w.bound);
            }
        }
}
