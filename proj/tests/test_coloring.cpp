#include <doctest.h>

#include <random>

#include "plic/coloring.hpp"
#include "plic/generators.hpp"

using namespace plic;

namespace {

SimpleGraph sg(const std::map<int, std::vector<int>>& adj) { return SimpleGraph::from_adjacency(adj); }

ListAssignment lists_of(const SimpleGraph& g, const std::map<int, std::vector<int>>& m) {
    return ListAssignment::from_map(g, m);
}

}  // namespace

TEST_CASE("check: defect counting") {
    // Path a-b-c all colored 1 with d=1: b has two same-colored neighbors.
    auto p3 = sg({{1, {2}}, {2, {1, 3}}, {3, {2}}});
    Coloring pi(4);
    pi.set(1, 1);
    pi.set(2, 1);
    pi.set(3, 1);
    auto res = check(p3, nullptr, pi, 1);
    CHECK_FALSE(res.ok);
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].vertex == 2);
    CHECK(res.violations[0].defect == 2);
    CHECK(check(p3, nullptr, pi, 2).ok);

    // K4 colored (1,1,2,3) with d=1.
    auto k4 = gen::k4().simple_graph();
    Coloring k(5);
    k.set(1, 1);
    k.set(2, 1);
    k.set(3, 2);
    k.set(4, 3);
    CHECK(check(k4, nullptr, k, 1).ok);
    CHECK_FALSE(check(k4, nullptr, k, 0).ok);

    // A proper coloring has defect 0.
    auto c5 = gen::cycle(5).simple_graph();
    Coloring pc(6);
    int cols[5] = {1, 2, 1, 2, 3};
    for (int i = 0; i < 5; ++i) pc.set(i + 1, cols[i]);
    CHECK(check(c5, nullptr, pc, 0).ok);

    Coloring partial(5);
    partial.set(1, 1);
    CHECK_THROWS_WITH_AS(check(p3, nullptr, partial, 1), doctest::Contains("PartialColoring"),
                         Error);

    // Off-list colors are reported.
    auto la = ListAssignment::uniform(p3, 2);
    Coloring off(4);
    off.set(1, 5);
    off.set(2, 1);
    off.set(3, 2);
    auto vres = check(p3, &la, off, 1);
    CHECK_FALSE(vres.ok);
    CHECK(vres.violations[0].off_list);
}

TEST_CASE("solve: frozen examples") {
    // C4 with all lists {1}, d=1: every vertex would see two same-colored
    // neighbors.
    auto c4 = gen::cycle(4).simple_graph();
    auto ones = lists_of(c4, {{1, {1}}, {2, {1}}, {3, {1}}, {4, {1}}});
    CHECK_FALSE(solve(c4, ones, 1).has_value());
    CHECK(solve(c4, ones, 2).has_value());

    auto k4 = gen::k4().simple_graph();
    auto u3 = ListAssignment::uniform(k4, 3);
    auto got = solve(k4, u3, 1);
    REQUIRE(got.has_value());
    CHECK(check(k4, &u3, *got, 1).ok);
    CHECK_FALSE(solve(k4, ListAssignment::uniform(k4, 2), 0).has_value());

    auto single = sg({{1, {}}});
    auto l7 = lists_of(single, {{1, {7}}});
    auto sres = solve(single, l7, 0);
    REQUIRE(sres.has_value());
    CHECK(sres->at(1) == 7);
}

TEST_CASE("induced assignments") {
    // 1-2-3 path, S = {2,3}; outside vertex 1 colored 1.
    auto p3 = sg({{1, {2}}, {2, {1, 3}}, {3, {2}}});
    auto la = lists_of(p3, {{1, {1, 2, 3}}, {2, {1, 2, 3}}, {3, {1, 2, 3}}});
    Coloring pi(4);
    pi.set(1, 1);
    auto ind = induced_assignment(p3, {2, 3}, pi, la);
    CHECK(ind.at(2) == std::vector<int>{2, 3});
    CHECK(ind.at(3) == std::vector<int>{1, 2, 3});  // no colored outside neighbor

    // All outside neighbors distinct and covering the list: empty induced list.
    auto star = sg({{1, {2, 3, 4}}, {2, {1}}, {3, {1}}, {4, {1}}});
    auto sl = ListAssignment::uniform(star, 3);
    Coloring spi(5);
    spi.set(2, 1);
    spi.set(3, 2);
    spi.set(4, 3);
    auto sind = induced_assignment(star, {1}, spi, sl);
    CHECK(sind.at(1).empty());
}

TEST_CASE("solve agrees with full enumeration on small graphs") {
    // All labeled graphs on 4 vertices, all list systems over {1,2,3},
    // d in {0,1}. The 5-vertex sweep lives in the acceptance suite.
    std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int mask = 0; mask < 64; ++mask) {
        std::map<int, std::vector<int>> adj = {{1, {}}, {2, {}}, {3, {}}, {4, {}}};
        for (int b = 0; b < 6; ++b)
            if (mask & (1 << b)) {
                adj[pairs[b].first].push_back(pairs[b].second);
                adj[pairs[b].second].push_back(pairs[b].first);
            }
        auto g = sg(adj);
        // List per vertex: nonempty subset of {1,2,3} encoded in 3 bits.
        for (int l1 = 1; l1 < 8; ++l1)
            for (int l2 = 1; l2 < 8; ++l2)
                for (int l3 = 1; l3 < 8; ++l3)
                    for (int l4 = 1; l4 < 8; ++l4) {
                        int enc[4] = {l1, l2, l3, l4};
                        ListAssignment la(5);
                        for (int v = 1; v <= 4; ++v) {
                            std::vector<int> cs;
                            for (int c = 0; c < 3; ++c)
                                if (enc[v - 1] & (1 << c)) cs.push_back(c + 1);
                            la.set(v, cs);
                        }
                        for (int d = 0; d <= 1; ++d) {
                            bool via_solve = solve(g, la, d).has_value();
                            bool via_enum = colorable_by_enumeration(g, la, d);
                            REQUIRE(via_solve == via_enum);
                        }
                    }
    }
}

TEST_CASE("monotonicity in the defect and color renaming invariance") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        // Random graph on 5 vertices, random 2-lists over {1..4}.
        std::map<int, std::vector<int>> adj;
        for (int v = 1; v <= 5; ++v) adj[v] = {};
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v)
                if (rng() % 2) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
        auto g = sg(adj);
        ListAssignment la(6), renamed(6);
        std::vector<int> perm{1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int v = 1; v <= 5; ++v) {
            int a = 1 + static_cast<int>(rng() % 4);
            int b = 1 + static_cast<int>(rng() % 4);
            if (b == a) b = 1 + (a % 4);
            la.set(v, {a, b});
            renamed.set(v, {perm[a - 1], perm[b - 1]});
        }
        bool feas[4];
        for (int d = 0; d <= 3; ++d) {
            feas[d] = solve(g, la, d).has_value();
            CHECK(solve(g, renamed, d).has_value() == feas[d]);
        }
        for (int d = 0; d < 3; ++d)
            if (feas[d]) CHECK(feas[d + 1]);
    }
}

TEST_CASE("choosability spot checks") {
    auto k2 = sg({{1, {2}}, {2, {1}}});
    auto r1 = is_choosable(k2, 1, 1);
    CHECK(r1.choosable);

    auto r0 = is_choosable(k2, 1, 0);
    CHECK_FALSE(r0.choosable);
    REQUIRE(r0.witness.size() == 2);
    CHECK(r0.witness.at(1) == std::vector<int>{1});
    CHECK(r0.witness.at(2) == std::vector<int>{1});

    // C4 with identical singleton lists forces defect 2 at every vertex.
    auto c4 = gen::cycle(4).simple_graph();
    auto rc4 = is_choosable(c4, 1, 1);
    CHECK_FALSE(rc4.choosable);

    CHECK_THROWS_WITH_AS(is_choosable(gen::dodecahedron().simple_graph(), 3, 1),
                         doctest::Contains("TooLarge"), Error);

    // Choosable implies random same-size lists are solvable.
    auto c5 = gen::cycle(5).simple_graph();
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        ListAssignment la(6);
        for (int v = 1; v <= 5; ++v) {
            std::vector<int> cs;
            while (cs.size() < 3) {
                int c = 1 + static_cast<int>(rng() % 9);
                if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
            }
            la.set(v, cs);
        }
        CHECK(solve(c5, la, 1).has_value());
    }
}

TEST_CASE("canonical system enumeration covers renamings exactly once") {
    // Two slots of size 1 over a universe of 2: {1}{1} and {1}{2}.
    std::vector<std::vector<std::vector<int>>> seen;
    enumerate_canonical_systems({{1, 1}, {1, 1}}, 2, [&](const auto& sys) {
        seen.push_back(sys);
        return true;
    });
    REQUIRE(seen.size() == 2);
    CHECK(seen[0] == std::vector<std::vector<int>>{{1}, {1}});
    CHECK(seen[1] == std::vector<std::vector<int>>{{1}, {2}});

    // Size-2 slots: the canonical forms of pairs of 2-sets.
    int count = 0;
    enumerate_canonical_systems({{2, 2}, {2, 2}}, 4, [&](const auto&) {
        ++count;
        return true;
    });
    // {12}{12}, {12}{13}, {12}{23}, {12}{34}: exactly the 4 orbit types.
    CHECK(count == 4);
}
