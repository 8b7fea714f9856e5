#include <doctest.h>

#include <functional>
#include <set>

#include "plic/generators.hpp"
#include "plic/structure.hpp"

using namespace plic;

namespace {

// Independent cycle oracle: walk every ordered tuple of distinct vertices
// and keep those that close a cycle.
std::set<std::vector<int>> brute_cycles(const PlaneGraph& g, int k) {
    std::set<std::vector<int>> out;
    std::vector<int> tup;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(tup.size()) == k) {
            if (g.adjacent(tup.back(), tup.front())) out.insert(canonical_cycle(tup));
            return;
        }
        for (int v : g.vertices()) {
            if (std::find(tup.begin(), tup.end(), v) != tup.end()) continue;
            if (!tup.empty() && !g.adjacent(tup.back(), v)) continue;
            tup.push_back(v);
            rec();
            tup.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

TEST_CASE("3- and 4-cycle inventories") {
    auto k4 = gen::k4();
    auto t = cycles_of_length(k4, 3);
    auto q = cycles_of_length(k4, 4);
    CHECK(t.size() == 4);
    CHECK(q.size() == 3);

    auto c5 = gen::cycle(5);
    CHECK(cycles_of_length(c5, 3).empty());
    CHECK(cycles_of_length(c5, 4).empty());

    auto cube = gen::cube();
    CHECK(cycles_of_length(cube, 3).empty());
    CHECK(cycles_of_length(cube, 4).size() == 6);

    CHECK_THROWS_WITH_AS(cycles_of_length(k4, 5), doctest::Contains("UnsupportedLength"), Error);

    for (const PlaneGraph& g : {gen::k4(), gen::cube(), gen::octahedron(), gen::wheel(5),
                                gen::fig_triquad(), gen::fig_pentaglue()}) {
        for (int k : {3, 4}) {
            auto got = cycles_of_length(g, k);
            std::set<std::vector<int>> want = brute_cycles(g, k);
            CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("class membership") {
    CHECK_FALSE(in_class(gen::k4()).in_class);
    CHECK(in_class(gen::dodecahedron()).in_class);
    CHECK_FALSE(in_class(gen::cube()).in_class);
    CHECK_FALSE(in_class(gen::octahedron()).in_class);
    CHECK(in_class(gen::cycle(5)).in_class);
    CHECK(in_class(gen::fig_triquad()).in_class);
    CHECK(in_class(gen::fig_pentaglue()).in_class);
    CHECK(in_class(gen::fig_light4()).in_class);
    CHECK(in_class(gen::fig_soft4_weak()).in_class);
    CHECK(in_class(gen::fig_soft4_notweak()).in_class);
    CHECK(in_class(gen::fig_bad5()).in_class);
    CHECK(in_class(gen::fig_r311()).in_class);
    CHECK_FALSE(in_class(gen::wheel(5)).in_class);

    auto rep = in_class(gen::k4());
    CHECK(!rep.violations.empty());
}

TEST_CASE("girth") {
    CHECK(girth(gen::cycle(5)) == 5);
    CHECK(girth(gen::k4()) == 3);
    CHECK(girth(gen::cube()) == 4);
    CHECK(girth(gen::dodecahedron()) == 5);
    CHECK(girth(gen::subdivide(gen::octahedron())) == 6);
    CHECK_THROWS_WITH_AS(girth(gen::star(3)), doctest::Contains("Acyclic"), Error);
}

TEST_CASE("classify: polyhedra") {
    auto dod = gen::dodecahedron();
    auto rep = classify(dod);
    for (int v : dod.vertices()) {
        const auto& i = rep.at(v);
        CHECK(i.degree == 3);
        CHECK(i.t == 0);
        CHECK(i.m4 == 0);
        CHECK(i.n3 == 3);
        CHECK(i.nu3 == 3);  // every neighbor is a free 3-vertex
        CHECK(i.p3 == 0);
        CHECK_FALSE(i.light4);
        CHECK_FALSE(i.soft4);
        CHECK_FALSE(i.bad5);
        CHECK(i.s_vertex);  // 3-vertices are S-vertices
    }

    auto oct = gen::octahedron();
    auto orep = classify(oct);
    for (int v : oct.vertices()) {
        const auto& i = orep.at(v);
        CHECK(i.degree == 4);
        CHECK(i.t == 4);
        CHECK(i.n3 == 0);
        CHECK_FALSE(i.light4);
        CHECK_FALSE(i.s_vertex);
    }
}

TEST_CASE("classify: light, soft, weak, bad fixtures") {
    {
        auto g = gen::fig_light4();
        auto rep = classify(g);
        CHECK(rep.at(1).light4);
        CHECK(rep.at(1).s_vertex);
        CHECK_FALSE(rep.at(1).soft4);
        CHECK(rep.at(1).t == 1);
        CHECK(rep.at(1).nu3 == 2);
        CHECK(rep.at(2).degree == 5);
        CHECK_FALSE(rep.at(2).bad5);
    }
    {
        auto g = gen::fig_soft4_weak();
        auto rep = classify(g);
        CHECK(rep.at(1).soft4);
        CHECK(rep.at(1).weak4);
        CHECK_FALSE(rep.at(1).light4);
        CHECK(rep.at(1).m4 == 1);
        CHECK(rep.at(1).nu3 == 2);
    }
    {
        auto g = gen::fig_soft4_notweak();
        auto rep = classify(g);
        CHECK(rep.at(1).soft4);
        CHECK_FALSE(rep.at(1).weak4);
        CHECK(rep.at(1).m4 == 2);
    }
    {
        auto g = gen::fig_bad5();
        auto rep = classify(g);
        CHECK(rep.at(1).bad5);
        CHECK(rep.at(1).t == 2);
        CHECK(rep.at(1).bad5_v5 == 6);
        CHECK(rep.at(3).s_vertex);
    }
    {
        // r311: vertex 1 is light via the triangle, not soft, not weak.
        auto g = gen::fig_r311();
        auto rep = classify(g);
        CHECK(rep.at(1).light4);
        CHECK_FALSE(rep.at(1).soft4);
        CHECK_FALSE(rep.at(1).weak4);
        CHECK(rep.at(1).t == 1);
        CHECK(rep.at(1).m4 == 1);
    }
}

TEST_CASE("pendant and free 3-vertices") {
    auto g = gen::fig_pendant3();
    auto rep = classify(g);
    CHECK(rep.at(1).t == 1);
    // 1 is a pendant 3-vertex of 4; the face edges do not count.
    CHECK(rep.at(4).p3 == 1);
    CHECK(rep.at(4).nu3 == 0);
    CHECK(rep.at(2).p3 == 0);

    auto h = gen::fig_free3hub();
    auto hrep = classify(h);
    CHECK(hrep.at(2).nu3 == 1);
    CHECK(hrep.at(3).nu3 == 1);
    CHECK(hrep.at(4).nu3 == 1);
    CHECK(hrep.at(1).nu3 == 0);  // its neighbors are 4-vertices
}

TEST_CASE("face patterns") {
    auto g = gen::fig_pendant3();  // triangle [1 2 3] with degrees (3,4,5)
    auto rep = classify(g);
    int tri = -1;
    for (const Face& f : g.faces())
        if (f.degree() == 3) tri = f.id;
    REQUIRE(tri >= 0);
    CHECK(face_pattern(g, rep, tri, {"3", "4", "5+"}));
    CHECK(face_pattern(g, rep, tri, {"3", "5+", "4"}));  // reflection
    CHECK(face_pattern(g, rep, tri, {"5", "*", "4"}));   // the 3-vertex is an S-vertex
    CHECK(face_pattern(g, rep, tri, {"3-", "4+", "4+"}));
    CHECK_FALSE(face_pattern(g, rep, tri, {"3", "3", "5+"}));
    CHECK_THROWS_WITH_AS(face_pattern(g, rep, tri, {"3", "4"}),
                         doctest::Contains("PatternLengthMismatch"), Error);

    // (6,*,4) requires an S-vertex: a plain (6,4,4) face must not match.
    auto h = PlaneGraph::build_from_rotation({
        {1, {2, 3, 7, 8, 9, 10}},
        {2, {3, 1, 11, 12}},
        {3, {1, 2, 13, 14}},
        {7, {1}}, {8, {1}}, {9, {1}}, {10, {1}},
        {11, {2}}, {12, {2}}, {13, {3}}, {14, {3}},
    });
    auto hrep = classify(h);
    int htri = -1;
    for (const Face& f : h.faces())
        if (f.degree() == 3) htri = f.id;
    REQUIRE(htri >= 0);
    CHECK(face_pattern(h, hrep, htri, {"6", "4", "4"}));
    CHECK_FALSE(face_pattern(h, hrep, htri, {"6", "*", "4"}));
}

TEST_CASE("class members satisfy the face-adjacency and counter bounds") {
    std::vector<PlaneGraph> members;
    members.push_back(gen::cycle(5));
    members.push_back(gen::cycle(3));
    members.push_back(gen::dodecahedron());
    members.push_back(gen::fig_light4());
    members.push_back(gen::fig_soft4_weak());
    members.push_back(gen::fig_soft4_notweak());
    members.push_back(gen::fig_bad5());
    members.push_back(gen::fig_badface());
    members.push_back(gen::fig_bad555());
    members.push_back(gen::fig_pendant3());
    members.push_back(gen::fig_triquad());
    members.push_back(gen::fig_pentaglue());
    members.push_back(gen::fig_r311());
    members.push_back(gen::subdivide(gen::octahedron()));
    members.push_back(gen::subdivide(gen::wheel(5)));

    for (const PlaneGraph& g : members) {
        REQUIRE(in_class(g).in_class);
        bool bare_cycle = true;
        for (int v : g.vertices()) bare_cycle = bare_cycle && g.degree(v) == 2;
        // No 3-face adjacent to a 3- or 4-face and no two adjacent 4-faces,
        // except when one cycle bounds both sides (the bare cycles C3, C4).
        for (const auto& [u, v] : g.edges()) {
            const Face& fa = g.face(g.face_of(u, v));
            const Face& fb = g.face(g.face_of(v, u));
            bool both_small = (fa.degree() == 3 || fa.degree() == 4) &&
                              (fb.degree() == 3 || fb.degree() == 4);
            if (!both_small) continue;
            CHECK(canonical_cycle(fa.boundary_vertices()) ==
                  canonical_cycle(fb.boundary_vertices()));
        }
        auto rep = classify(g);
        for (int v : g.vertices()) {
            const auto& i = rep.at(v);
            if (!bare_cycle) {
                CHECK(i.t <= i.degree / 2);
                CHECK(i.m4 <= i.degree / 2);
                CHECK(i.t + i.m4 <= i.degree / 2);
            }
            if (i.weak4) CHECK(i.soft4);
            CHECK(i.s_vertex == (i.degree == 3 || i.light4));
        }
    }
}
