#include <doctest.h>

#include <random>
#include <set>

#include "plic/generators.hpp"
#include "plic/recursive_color.hpp"

using namespace plic;

namespace {

std::set<ConfigKind> kinds_of(const std::vector<Configuration>& cfgs) {
    std::set<ConfigKind> ks;
    for (const auto& c : cfgs) ks.insert(c.kind);
    return ks;
}

ListAssignment random_3lists(const PlaneGraph& g, std::uint32_t seed) {
    std::mt19937 rng(seed);
    ListAssignment la(g.rotation_cap());
    for (int v : g.vertices()) {
        std::vector<int> cs;
        while (cs.size() < 3) {
            int c = 1 + static_cast<int>(rng() % 9);
            if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
        }
        la.set(v, cs);
    }
    return la;
}

}  // namespace

TEST_CASE("find_all: catalog hits on the standard fixtures") {
    auto c5 = gen::cycle(5);
    auto cfgs = find_all(c5);
    REQUIRE(cfgs.size() == 5);  // one A1 per degree-2 vertex
    for (const auto& c : cfgs) CHECK(c.kind == ConfigKind::A1_smallDegree);
    CHECK(cfgs.front().verts == std::vector<int>{1});

    // Dodecahedron: 3-regular, every edge joins two 3-vertices.
    auto dod = gen::dodecahedron();
    auto dk = kinds_of(find_all(dod));
    CHECK(dk.count(ConfigKind::A2_adjacent3s));

    // Octahedron: 4-regular with (4,4,4)-faces.
    auto oct = gen::octahedron();
    auto ok = kinds_of(find_all(oct));
    CHECK(ok.count(ConfigKind::B2_face444));
    CHECK_FALSE(ok.count(ConfigKind::A1_smallDegree));
    CHECK_FALSE(ok.count(ConfigKind::A2_adjacent3s));
}

TEST_CASE("find_all is non-empty on every class fixture") {
    std::vector<PlaneGraph> members;
    members.push_back(gen::cycle(3));
    members.push_back(gen::cycle(5));
    members.push_back(gen::cycle(15));
    members.push_back(PlaneGraph::build_from_rotation({{1, {2}}, {2, {1}}}));
    members.push_back(gen::path(3));
    members.push_back(gen::star(4));
    members.push_back(gen::dodecahedron());
    members.push_back(gen::fig_light4());
    members.push_back(gen::fig_soft4_weak());
    members.push_back(gen::fig_soft4_notweak());
    members.push_back(gen::fig_bad5());
    members.push_back(gen::fig_badface());
    members.push_back(gen::fig_bad555());
    members.push_back(gen::fig_pendant3());
    members.push_back(gen::fig_free3hub());
    members.push_back(gen::fig_triquad());
    members.push_back(gen::fig_pentaglue());
    members.push_back(gen::fig_r311());
    members.push_back(gen::subdivide(gen::octahedron()));
    members.push_back(gen::subdivide(gen::cube()));
    members.push_back(gen::subdivide(gen::wheel(5)));
    members.push_back(gen::delete_one_vertex(gen::dodecahedron(), 1));
    for (const PlaneGraph& g : members) {
        REQUIRE(in_class(g).in_class);
        CHECK_FALSE(find_all(g).empty());
    }
}

TEST_CASE("reduce: deletion targets and class heredity") {
    // A2 deletes both endpoints.
    auto dod = gen::dodecahedron();
    auto cfgs = find_all(dod);
    REQUIRE(cfgs.front().kind == ConfigKind::A2_adjacent3s);
    auto comps = reduce(dod, cfgs.front());
    std::size_t total = 0;
    for (const auto& c : comps) total += c.vertex_count();
    CHECK(total == 18);

    // B2 deletes one edge and keeps all vertices.
    auto oct = gen::octahedron();
    auto ocfg = find_all(oct);
    Configuration b2;
    bool found = false;
    for (const auto& c : ocfg)
        if (c.kind == ConfigKind::B2_face444 && !found) {
            b2 = c;
            found = true;
        }
    REQUIRE(found);
    auto after = reduce(oct, b2);
    REQUIRE(after.size() == 1);
    CHECK(after[0].vertex_count() == 6);
    CHECK(after[0].edge_count() == 11);

    // A1 on a degree-2 vertex of C5 leaves a path.
    auto c5 = gen::cycle(5);
    auto a1 = find_all(c5).front();
    auto rest = reduce(c5, a1);
    REQUIRE(rest.size() == 1);
    CHECK(rest[0].vertex_count() == 4);

    // A stale witness is rejected.
    CHECK_THROWS_WITH_AS(reduce(rest[0], a1), doctest::Contains("WitnessStale"), Error);
}

TEST_CASE("extend: degree-2 vertex takes a color unused on its neighbors") {
    auto c5 = gen::cycle(5);
    auto cfg = find_all(c5).front();  // A1 at vertex 1
    auto comps = reduce(c5, cfg);
    // Color the remaining path 2-3-4-5 by hand: neighbors of 1 get 1 and 2.
    Coloring pi(6);
    pi.set(2, 1);
    pi.set(3, 3);
    pi.set(4, 3);
    pi.set(5, 2);
    ListAssignment la(6);
    for (int v = 1; v <= 5; ++v) la.set(v, {1, 2, 3});
    REQUIRE(check(comps[0].simple_graph(), &la, pi, 1).ok);
    extend_checked(c5, cfg, pi, la);
    CHECK(pi.at(1) == 3);  // proper: neighbors hold 1 and 2
}

TEST_CASE("extend: adjacent 3-vertices may share their one common color") {
    // Two adjacent 3-vertices whose induced lists are the same singleton
    // end up同 with the shared color and defect one each.
    auto g = PlaneGraph::build_from_rotation({
        {1, {2, 3, 4}},
        {2, {1, 5, 6}},
        {3, {1}}, {4, {1}}, {5, {2}}, {6, {2}},
    });
    ListAssignment la(7);
    for (int v : g.vertices()) la.set(v, {1, 2, 3});
    auto cfgs = find_all(g);
    Configuration a2;
    bool found = false;
    for (const auto& c : cfgs)
        if (c.kind == ConfigKind::A2_adjacent3s) {
            a2 = c;
            found = true;
        }
    REQUIRE(found);
    REQUIRE(a2.verts == std::vector<int>{1, 2});
    Coloring pi(7);
    pi.set(3, 1);
    pi.set(4, 2);
    pi.set(5, 1);
    pi.set(6, 2);
    extend_checked(g, a2, pi, la);
    CHECK(pi.at(1) == 3);
    CHECK(pi.at(2) == 3);
}

TEST_CASE("recursive_color: triangle and dodecahedron with uniform lists") {
    auto c3 = gen::cycle(3);
    ListAssignment l3(4);
    for (int v = 1; v <= 3; ++v) l3.set(v, {1, 2, 3});
    Diagnostics diag;
    auto pi = recursive_color(c3, l3, &diag);
    CHECK(check(c3.simple_graph(), &l3, pi, 1).ok);
    CHECK(diag.proof_gaps.empty());

    auto dod = gen::dodecahedron();
    ListAssignment ld = ListAssignment::uniform(dod.simple_graph(), 3);
    Diagnostics diag2;
    auto pd = recursive_color(dod, ld, &diag2);
    CHECK(check(dod.simple_graph(), &ld, pd, 1).ok);
    CHECK(diag2.proof_gaps.empty());
    CHECK(diag2.reductions > 0);
}

TEST_CASE("extend: exhausted induced list is a loud precondition failure") {
    // A degree-2 vertex whose neighbors exhaust its whole list violates the
    // sizes the arguments assume; the extension refuses rather than
    // producing an invalid coloring.
    auto c5 = gen::cycle(5);
    auto cfg = find_all(c5).front();  // A1 at vertex 1
    Coloring pi(6);
    pi.set(2, 1);
    pi.set(3, 3);
    pi.set(4, 3);
    pi.set(5, 2);
    ListAssignment tiny(6);
    tiny.set(1, {1, 2});  // both colors already on the neighbors
    for (int v = 2; v <= 5; ++v) tiny.set(v, {1, 2, 3});
    CHECK_THROWS_WITH_AS(extend_checked(c5, cfg, pi, tiny), doctest::Contains("ExtensionFailed"),
                         Error);
}

TEST_CASE("recursive_color: rejects non-members and short lists") {
    auto k4 = gen::k4();
    ListAssignment la = ListAssignment::uniform(k4.simple_graph(), 3);
    CHECK_THROWS_WITH_AS(recursive_color(k4, la), doctest::Contains("NotInClass"), Error);

    auto c5 = gen::cycle(5);
    ListAssignment l2 = ListAssignment::uniform(c5.simple_graph(), 2);
    CHECK_THROWS_WITH_AS(recursive_color(c5, l2), doctest::Contains("ListTooSmall"), Error);
}

TEST_CASE("recursive_color: seeded adversarial 3-lists across the corpus") {
    std::vector<PlaneGraph> members;
    members.push_back(gen::dodecahedron());
    members.push_back(gen::fig_light4());
    members.push_back(gen::fig_soft4_weak());
    members.push_back(gen::fig_bad5());
    members.push_back(gen::fig_pentaglue());
    members.push_back(gen::subdivide(gen::octahedron()));
    members.push_back(gen::subdivide(gen::wheel(5)));
    members.push_back(gen::delete_one_vertex(gen::dodecahedron(), 1));
    int trial_id = 0;
    for (const PlaneGraph& g : members) {
        for (int t = 0; t < 10; ++t) {
            auto la = random_3lists(g, 1000 + 17 * trial_id++);
            Diagnostics diag;
            auto pi = recursive_color(g, la, &diag);
            CHECK(check(g.simple_graph(), &la, pi, 1).ok);
            CHECK(diag.proof_gaps.empty());
            // Feasibility must agree with the exact solver.
            CHECK(solve(g.simple_graph(), la, 1).has_value());
        }
    }
}
