#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "plic/generators.hpp"
#include "plic/io.hpp"
#include "plic/plane_graph.hpp"

using namespace plic;

namespace {

std::multiset<int> face_degrees(const PlaneGraph& g) {
    std::multiset<int> out;
    for (const Face& f : g.faces()) out.insert(f.degree());
    return out;
}

}  // namespace

TEST_CASE("triangle has two faces of degree 3") {
    auto g = PlaneGraph::build_from_rotation({{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2}}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(face_degrees(g) == std::multiset<int>{3, 3});
}

TEST_CASE("single edge gives one face of degree 2") {
    auto g = PlaneGraph::build_from_rotation({{1, {2}}, {2, {1}}});
    CHECK(face_degrees(g) == std::multiset<int>{2});
}

TEST_CASE("C5 has two faces of degree 5") {
    auto g = gen::cycle(5);
    CHECK(face_degrees(g) == std::multiset<int>{5, 5});
    for (int v : g.vertices()) CHECK(g.degree(v) == 2);
}

TEST_CASE("K4 planar embedding: four triangular faces") {
    auto g = gen::k4();
    CHECK(g.edge_count() == 6);
    CHECK(face_degrees(g) == std::multiset<int>{3, 3, 3, 3});
    for (int v : g.vertices()) {
        CHECK(g.degree(v) == 3);
        auto inc = g.incident_faces(v);
        CHECK(inc.size() == 3);
        for (int f : inc) CHECK(g.face_degree(f) == 3);
    }
}

TEST_CASE("star K1,3 has one face of degree 6") {
    auto g = gen::star(3);
    CHECK(face_degrees(g) == std::multiset<int>{6});
}

TEST_CASE("cube: six quadrilateral faces, three per vertex") {
    auto g = gen::cube();
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(face_degrees(g) == std::multiset<int>{4, 4, 4, 4, 4, 4});
    for (int v : g.vertices()) CHECK(g.incident_faces(v).size() == 3);
}

TEST_CASE("octahedron, icosahedron, dodecahedron") {
    auto oct = gen::octahedron();
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.edge_count() == 12);
    CHECK(face_degrees(oct).count(3) == 8);

    auto ico = gen::icosahedron();
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(face_degrees(ico).count(3) == 20);

    auto dod = gen::dodecahedron();
    CHECK(dod.vertex_count() == 20);
    CHECK(dod.edge_count() == 30);
    CHECK(face_degrees(dod).count(5) == 12);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_WITH_AS(PlaneGraph::build_from_rotation({{1, {2}}, {2, {}}}),
                         doctest::Contains("AsymmetricRotation"), Error);
    CHECK_THROWS_WITH_AS(PlaneGraph::build_from_rotation({{1, {1}}}),
                         doctest::Contains("LoopOrMultiEdge"), Error);
    CHECK_THROWS_WITH_AS(PlaneGraph::build_from_rotation({{1, {2, 2}}, {2, {1, 1}}}),
                         doctest::Contains("LoopOrMultiEdge"), Error);
    CHECK_THROWS_WITH_AS(
        PlaneGraph::build_from_rotation({{1, {2}}, {2, {1}}, {3, {4}}, {4, {3}}}),
        doctest::Contains("Disconnected"), Error);
    // K5 admits no planar rotation system; any rotation must fail Euler.
    std::map<int, std::vector<int>> k5;
    for (int v = 1; v <= 5; ++v) {
        std::vector<int> nb;
        for (int u = 1; u <= 5; ++u)
            if (u != v) nb.push_back(u);
        k5[v] = nb;
    }
    CHECK_THROWS_WITH_AS(PlaneGraph::build_from_rotation(k5), doctest::Contains("EulerViolation"),
                         Error);
}

TEST_CASE("degree sums, face partition of darts, rebuild idempotence") {
    std::vector<PlaneGraph> corpus;
    corpus.push_back(gen::cycle(5));
    corpus.push_back(gen::k4());
    corpus.push_back(gen::cube());
    corpus.push_back(gen::octahedron());
    corpus.push_back(gen::dodecahedron());
    corpus.push_back(gen::star(4));
    corpus.push_back(gen::wheel(5));
    corpus.push_back(gen::subdivide(gen::octahedron()));

    for (const PlaneGraph& g : corpus) {
        long long dv = 0, df = 0;
        for (int v : g.vertices()) dv += g.degree(v);
        std::size_t darts = 0;
        for (const Face& f : g.faces()) {
            df += f.degree();
            darts += f.walk.size();
        }
        CHECK(dv == 2 * static_cast<long long>(g.edge_count()));
        CHECK(df == dv);
        CHECK(darts == 2 * g.edge_count());

        // Every dart on exactly one face walk, exactly once.
        std::set<std::pair<int, int>> seen;
        for (const Face& f : g.faces())
            for (const Dart& d : f.walk) CHECK(seen.insert({d.from, d.to}).second);

        // Rebuilding from the graph's own table reproduces the same faces.
        auto g2 = PlaneGraph::build_from_rotation(g.rotation_table());
        REQUIRE(g2.faces().size() == g.faces().size());
        for (std::size_t i = 0; i < g.faces().size(); ++i)
            CHECK(g2.faces()[i].walk == g.faces()[i].walk);
    }
}

TEST_CASE("incident face ordering matches rotation corners") {
    // Degree-2 vertices of C5 touch both 5-faces.
    auto c5 = gen::cycle(5);
    for (int v : c5.vertices()) {
        CHECK(c5.degree(v) == 2);
        auto inc = c5.incident_faces(v);
        REQUIRE(inc.size() == 2);
        CHECK(c5.face_degree(inc[0]) == 5);
        CHECK(c5.face_degree(inc[1]) == 5);
        CHECK(inc[0] != inc[1]);
    }

    auto g = gen::cube();
    for (int v : g.vertices()) {
        const auto& rot = g.rotation(v);
        auto inc = g.incident_faces(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            // Face i must contain both edges v-rot[i] and v-rot[i+1].
            const Face& f = g.face(inc[i]);
            int a = rot[i], b = rot[(i + 1) % rot.size()];
            bool has_a = false, has_b = false;
            for (const Dart& d : f.walk) {
                if ((d.from == v && d.to == a) || (d.from == a && d.to == v)) has_a = true;
                if ((d.from == v && d.to == b) || (d.from == b && d.to == v)) has_b = true;
            }
            CHECK(has_a);
            CHECK(has_b);
        }
    }
}

TEST_CASE("rotation file round trip") {
    auto g = gen::dodecahedron();
    std::string text = format_rotation(g.rotation_table());
    std::istringstream in(text);
    auto parsed = parse_rotation_stream(in, "mem");
    auto g2 = PlaneGraph::build_from_rotation(parsed.rotation);
    CHECK(g2.rotation_table() == g.rotation_table());

    std::istringstream bad("1: 2\n1: 3\n");
    CHECK_THROWS_WITH_AS(parse_rotation_stream(bad, "mem"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("vertex and edge deletion preserve embedding validity") {
    auto g = gen::dodecahedron();
    auto comps = g.delete_vertices({1});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertex_count() == 19);

    auto c5 = gen::cycle(5);
    auto comps2 = c5.delete_vertices({1, 3});  // splits into two paths
    CHECK(comps2.size() == 2);

    auto k4 = gen::k4();
    auto after_edge = k4.delete_edge(1, 2);
    REQUIRE(after_edge.size() == 1);
    CHECK(after_edge[0].edge_count() == 5);
}
