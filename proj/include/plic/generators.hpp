#pragma once

#include <map>
#include <vector>

#include "plic/plane_graph.hpp"

namespace plic {
namespace gen {

// Fixture generators. Rotations are written down for a concrete drawing;
// construction re-validates them (Euler, symmetry), so a wrong table fails
// loudly in the tests rather than silently producing a different embedding.

inline PlaneGraph cycle(int n) {
    std::map<int, std::vector<int>> rot;
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1;
        int next = i == n ? 1 : i + 1;
        rot[i] = n == 2 ? std::vector<int>{next} : std::vector<int>{prev, next};
    }
    return PlaneGraph::build_from_rotation(rot);
}

inline PlaneGraph path(int n) {
    std::map<int, std::vector<int>> rot;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> nb;
        if (i > 1) nb.push_back(i - 1);
        if (i < n) nb.push_back(i + 1);
        rot[i] = nb;
    }
    return PlaneGraph::build_from_rotation(rot);
}

inline PlaneGraph star(int leaves) {
    std::map<int, std::vector<int>> rot;
    std::vector<int> hub;
    for (int i = 2; i <= leaves + 1; ++i) {
        hub.push_back(i);
        rot[i] = {1};
    }
    rot[1] = hub;
    return PlaneGraph::build_from_rotation(rot);
}

// Hub 1 inside rim 2..n+1.
inline PlaneGraph wheel(int n) {
    std::map<int, std::vector<int>> rot;
    std::vector<int> hub;
    for (int i = 0; i < n; ++i) hub.push_back(2 + i);
    rot[1] = hub;
    for (int i = 0; i < n; ++i) {
        int v = 2 + i;
        int prev = 2 + (i + n - 1) % n;
        int next = 2 + (i + 1) % n;
        rot[v] = {1, prev, next};
    }
    return PlaneGraph::build_from_rotation(rot);
}

// Inner rim 1..n, outer rim n+1..2n, rungs i - (n+i).
inline PlaneGraph prism(int n) {
    std::map<int, std::vector<int>> rot;
    for (int i = 0; i < n; ++i) {
        int v = 1 + i;
        int prev = 1 + (i + n - 1) % n;
        int next = 1 + (i + 1) % n;
        rot[v] = {prev, next, v + n};
    }
    for (int i = 0; i < n; ++i) {
        int v = n + 1 + i;
        int prev = n + 1 + (i + n - 1) % n;
        int next = n + 1 + (i + 1) % n;
        rot[v] = {next, prev, v - n};
    }
    return PlaneGraph::build_from_rotation(rot);
}

// Inner rim 1..n, outer rim n+1..2n; outer j sits between inner j and inner
// j+1 and is adjacent to both. antiprism(3) is the octahedron.
inline PlaneGraph antiprism(int n) {
    std::map<int, std::vector<int>> rot;
    auto inner = [&](int i) { return 1 + (i % n + n) % n; };
    auto outer = [&](int i) { return n + 1 + (i % n + n) % n; };
    for (int i = 0; i < n; ++i)
        rot[inner(i)] = {outer(i - 1), outer(i), inner(i + 1), inner(i - 1)};
    for (int j = 0; j < n; ++j)
        rot[outer(j)] = {outer(j - 1), outer(j + 1), inner(j + 1), inner(j)};
    return PlaneGraph::build_from_rotation(rot);
}

inline PlaneGraph k4() {
    // Outer triangle 1,2,3 with 4 in the middle.
    return PlaneGraph::build_from_rotation({
        {1, {3, 4, 2}},
        {2, {1, 4, 3}},
        {3, {2, 4, 1}},
        {4, {1, 3, 2}},
    });
}

inline PlaneGraph cube() { return prism(4); }

inline PlaneGraph octahedron() { return antiprism(3); }

// Gyroelongated pentagonal bipyramid: antiprism(5) plus an apex inside the
// inner rim and one in the outer face.
inline PlaneGraph icosahedron() {
    int n = 5;
    std::map<int, std::vector<int>> rot;
    auto inner = [&](int i) { return 1 + (i % n + n) % n; };
    auto outer = [&](int i) { return n + 1 + (i % n + n) % n; };
    int apex_in = 11, apex_out = 12;
    for (int i = 0; i < n; ++i)
        rot[inner(i)] = {outer(i - 1), outer(i), inner(i + 1), apex_in, inner(i - 1)};
    for (int j = 0; j < n; ++j)
        rot[outer(j)] = {outer(j - 1), apex_out, outer(j + 1), inner(j + 1), inner(j)};
    std::vector<int> in_ring, out_ring;
    for (int i = 0; i < n; ++i) in_ring.push_back(inner(i));
    for (int i = n - 1; i >= 0; --i) out_ring.push_back(outer(i));
    rot[apex_in] = in_ring;
    rot[apex_out] = out_ring;
    return PlaneGraph::build_from_rotation(rot);
}

// Planar dual: one vertex per face, rotation given by the face walk order.
// dual(icosahedron) is the dodecahedron.
inline PlaneGraph dual(const PlaneGraph& g) {
    std::map<int, std::vector<int>> rot;
    for (const Face& f : g.faces()) {
        std::vector<int> nbrs;
        for (const Dart& d : f.walk) nbrs.push_back(g.face_of(d.to, d.from) + 1);
        rot[f.id + 1] = nbrs;
    }
    return PlaneGraph::build_from_rotation(rot);
}

inline PlaneGraph dodecahedron() { return dual(icosahedron()); }

// Subdivide every edge once; new vertices get ids above the old maximum.
inline PlaneGraph subdivide(const PlaneGraph& g) {
    std::map<int, std::vector<int>> rot = g.rotation_table();
    int next = 0;
    for (int v : g.vertices()) next = std::max(next, v);
    ++next;
    std::map<std::pair<int, int>, int> mid;
    for (const auto& [u, v] : g.edges()) mid[{u, v}] = next++;
    std::map<int, std::vector<int>> out;
    for (const auto& [v, nbrs] : rot) {
        std::vector<int> nn;
        for (int u : nbrs) nn.push_back(mid.at({std::min(u, v), std::max(u, v)}));
        out[v] = nn;
    }
    for (const auto& [e, m] : mid) out[m] = {e.first, e.second};
    return PlaneGraph::build_from_rotation(out);
}

inline PlaneGraph delete_one_vertex(const PlaneGraph& g, int v) {
    auto comps = g.delete_vertices({v});
    require(comps.size() == 1, Errc::Disconnected, "deletion disconnected the graph");
    return std::move(comps.front());
}

// --- small local fixtures -------------------------------------------------
// Leaf-padded gadgets that realize one structural feature each. Degrees on
// any 3-face are kept in the shapes the transfer rules cover.

// Light 4-vertex 1: on the (4,5,3)-face [1 2 3], with 3-neighbors 4 and 5
// off the face.
inline PlaneGraph fig_light4() {
    return PlaneGraph::build_from_rotation({
        {1, {4, 2, 3, 5}},
        {2, {3, 1, 6, 7, 8}},
        {3, {1, 2, 9}},
        {4, {1, 10, 11}},
        {5, {1, 12, 13}},
        {6, {2}}, {7, {2}}, {8, {2}}, {9, {3}},
        {10, {4}}, {11, {4}}, {12, {5}}, {13, {5}},
    });
}

// Soft (and weak) 4-vertex 1: on the 4-face [1 2 3 4], 3-neighbors 5 and 6
// off it, opposite face is the big outer face.
inline PlaneGraph fig_soft4_weak() {
    return PlaneGraph::build_from_rotation({
        {1, {6, 2, 4, 5}},
        {2, {3, 1}},
        {3, {2, 4}},
        {4, {1, 3}},
        {5, {1, 9, 10}},
        {6, {1, 7, 8}},
        {7, {6}}, {8, {6}}, {9, {5}}, {10, {5}},
    });
}

// Soft but not weak: vertex 1 carries two 4-faces on opposite corners, so
// neither witness has an opposite face of degree >= 5.
inline PlaneGraph fig_soft4_notweak() {
    return PlaneGraph::build_from_rotation({
        {1, {6, 2, 4, 5}},
        {2, {3, 1}},
        {3, {2, 4}},
        {4, {1, 3}},
        {5, {8, 1, 9}},
        {6, {1, 8, 7}},
        {7, {6}},
        {8, {6, 5}},
        {9, {5}},
    });
}

// Bad 5-vertex 1: two (5,4,3)-faces [1 2 3] and [1 4 5], remaining
// neighbor 6 of degree 3.
inline PlaneGraph fig_bad5() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 4, 5, 6}},
        {2, {3, 1, 7, 8}},
        {3, {1, 2, 9}},
        {4, {5, 1, 10, 11}},
        {5, {1, 4, 12}},
        {6, {1, 13, 14}},
        {7, {2}}, {8, {2}}, {9, {3}}, {10, {4}},
        {11, {4}}, {12, {5}}, {13, {6}}, {14, {6}},
    });
}

// Pendant 3-vertex 1 of the 4-vertex 4: 1 sits on the (3,4,5)-face
// [1 2 3] and its third edge 1-4 lies on no 3-face.
inline PlaneGraph fig_pendant3() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 4}},
        {2, {3, 1, 5, 6}},
        {3, {1, 2, 7, 8, 9}},
        {4, {1, 10, 11, 12}},
        {5, {2}}, {6, {2}}, {7, {3}}, {8, {3}}, {9, {3}},
        {10, {4}}, {11, {4}}, {12, {4}},
    });
}

// Free 3-vertex 1 with three 4-valent neighbors; a tree, so no cycles at
// all and only the pendant/free rule moves charge.
inline PlaneGraph fig_free3hub() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 4}},
        {2, {1, 5, 6, 7}},
        {3, {1, 8, 9, 10}},
        {4, {1, 11, 12, 13}},
        {5, {2}}, {6, {2}}, {7, {2}},
        {8, {3}}, {9, {3}}, {10, {3}},
        {11, {4}}, {12, {4}}, {13, {4}},
    });
}

// A (3,4,5)-triangle and a 4-cycle joined by a path: a class member that
// contains both a 3-cycle and a (non-adjacent) 4-cycle.
inline PlaneGraph fig_triquad() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 10, 11}},
        {2, {3, 1, 12, 13, 14}},
        {3, {1, 2, 4}},
        {4, {3, 5}},
        {5, {4, 6, 8}},
        {6, {7, 5}},
        {7, {8, 6}},
        {8, {5, 7}},
        {10, {1}}, {11, {1}}, {12, {2}}, {13, {2}}, {14, {2}},
    });
}

// Pentagon with a (4,5,3)-triangle glued at vertex 1 and a quadrilateral
// glued at vertex 3; all three cycles are pairwise edge-disjoint.
inline PlaneGraph fig_pentaglue() {
    return PlaneGraph::build_from_rotation({
        {1, {5, 2, 6, 7}},
        {2, {1, 3}},
        {3, {2, 4, 8, 10}},
        {4, {3, 5}},
        {5, {4, 1}},
        {6, {7, 1, 11, 12, 13}},
        {7, {1, 6, 14}},
        {8, {9, 3}},
        {9, {10, 8}},
        {10, {3, 9}},
        {11, {6}}, {12, {6}}, {13, {6}}, {14, {7}},
    });
}

// Non-weak 4-vertex 1 sending 4/3 to the 4-face [1 2 8 3]: both face
// neighbors are 3-vertices and the opposite face is the (4,5,4)-triangle
// [1 4 5], which makes 1 light.
inline PlaneGraph fig_r311() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 4, 5}},
        {2, {8, 1, 6}},
        {3, {1, 8, 7}},
        {4, {5, 1, 9, 10}},
        {5, {1, 4, 11, 12, 13}},
        {6, {2}}, {7, {3}},
        {8, {2, 3}},
        {9, {4}}, {10, {4}}, {11, {5}}, {12, {5}}, {13, {5}},
    });
}

// Bad 5-vertex 1 on a (4,5,5)-face: 3-faces [1 2 3] (its (5,*,4) witness)
// and [1 4 5] with d(4)=4, d(5)=5; pendant-free neighbor 6.
inline PlaneGraph fig_badface() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 4, 5, 6}},
        {2, {3, 1, 7, 8}},
        {3, {1, 2, 9}},
        {4, {5, 1, 10, 11}},
        {5, {1, 4, 12, 13, 14}},
        {6, {1, 15, 16}},
        {7, {2}}, {8, {2}}, {9, {3}}, {10, {4}}, {11, {4}},
        {12, {5}}, {13, {5}}, {14, {5}}, {15, {6}}, {16, {6}},
    });
}

// Bad 5-vertex 1 on a (5,5,5)-face.
inline PlaneGraph fig_bad555() {
    return PlaneGraph::build_from_rotation({
        {1, {2, 3, 4, 5, 6}},
        {2, {3, 1, 7, 8}},
        {3, {1, 2, 9}},
        {4, {5, 1, 10, 11, 17}},
        {5, {1, 4, 12, 13, 14}},
        {6, {1, 15, 16}},
        {7, {2}}, {8, {2}}, {9, {3}}, {10, {4}}, {11, {4}}, {17, {4}},
        {12, {5}}, {13, {5}}, {14, {5}}, {15, {6}}, {16, {6}},
    });
}

}  // namespace gen
}  // namespace plic
