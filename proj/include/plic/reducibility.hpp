#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plic/coloring.hpp"
#include "plic/error.hpp"
#include "plic/plane_graph.hpp"
#include "plic/structure.hpp"

namespace plic {

// The reducible-configuration catalog. Q is the shared extension gadget
// invoked by B4/C2/C3/KEY and is never emitted by find_all; every other
// kind is a structure that cannot survive in a minimal uncolorable graph.
enum class ConfigKind {
    A1_smallDegree,
    A2_adjacent3s,
    A3_face344,
    Q_lemma2,
    B1_fourVertexThree3s,
    B2_face444,
    B3_lightLightFace,
    B4_fiveVertex,
    B5_sixVertex,
    F1_34m4face,
    F2_softOpposite,
    SOFT_adjacentSoft,
    C1,
    C2,
    C3,
    KEY_twoBad5s,
};

inline const char* kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::A1_smallDegree: return "A1";
        case ConfigKind::A2_adjacent3s: return "A2";
        case ConfigKind::A3_face344: return "A3";
        case ConfigKind::Q_lemma2: return "Q";
        case ConfigKind::B1_fourVertexThree3s: return "B1";
        case ConfigKind::B2_face444: return "B2";
        case ConfigKind::B3_lightLightFace: return "B3";
        case ConfigKind::B4_fiveVertex: return "B4";
        case ConfigKind::B5_sixVertex: return "B5";
        case ConfigKind::F1_34m4face: return "F1";
        case ConfigKind::F2_softOpposite: return "F2";
        case ConfigKind::SOFT_adjacentSoft: return "SOFT";
        case ConfigKind::C1: return "C1";
        case ConfigKind::C2: return "C2";
        case ConfigKind::C3: return "C3";
        case ConfigKind::KEY_twoBad5s: return "KEY";
    }
    return "?";
}

inline std::optional<ConfigKind> kind_from_name(const std::string& s) {
    static const std::pair<const char*, ConfigKind> table[] = {
        {"A1", ConfigKind::A1_smallDegree},    {"A2", ConfigKind::A2_adjacent3s},
        {"A3", ConfigKind::A3_face344},        {"Q", ConfigKind::Q_lemma2},
        {"B1", ConfigKind::B1_fourVertexThree3s}, {"B2", ConfigKind::B2_face444},
        {"B3", ConfigKind::B3_lightLightFace}, {"B4", ConfigKind::B4_fiveVertex},
        {"B5", ConfigKind::B5_sixVertex},      {"F1", ConfigKind::F1_34m4face},
        {"F2", ConfigKind::F2_softOpposite},   {"SOFT", ConfigKind::SOFT_adjacentSoft},
        {"C1", ConfigKind::C1},                {"C2", ConfigKind::C2},
        {"C3", ConfigKind::C3},                {"KEY", ConfigKind::KEY_twoBad5s},
    };
    for (auto [n, k] : table)
        if (s == n) return k;
    return std::nullopt;
}

// Repair satellites of the Q gadget are S-vertices: either a 3-vertex or a
// light 4-vertex whose two extra neighbors (x, y) may be recolored.
enum class SatType { Plain, ThreeVertex, LightFour };

struct SatInfo {
    int vertex = 0;
    SatType type = SatType::Plain;
    int x = 0, y = 0;  // light-4 extras
};

struct Configuration {
    ConfigKind kind{};
    std::vector<int> verts;        // role-ordered witness vertices
    std::vector<int> faces;        // witness face ids (diagnostic)
    std::vector<int> delete_verts; // empty for the edge-deletion kinds
    std::array<int, 2> delete_edge{0, 0};
    std::vector<std::array<int, 2>> pairs;  // adjacent satellite pairs
    std::vector<SatInfo> sats;              // typed repair satellites

    bool deletes_edge() const { return delete_edge[0] != 0; }

    std::string str() const {
        std::ostringstream os;
        os << kind_name(kind) << " [";
        for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? " " : "") << verts[i];
        os << "]";
        if (deletes_edge()) os << " -edge " << delete_edge[0] << "-" << delete_edge[1];
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Detection.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> offface_vertices(const PlaneGraph& g, int v, const Face& f) {
    std::vector<int> out;
    for (int u : g.rotation(v))
        if (!f.touches(u)) out.push_back(u);
    return out;
}

// Distinct incident 3-faces of v in face-id order.
inline std::vector<int> incident_3faces(const PlaneGraph& g, int v) {
    std::vector<int> fs = g.incident_faces(v);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::vector<int> out;
    for (int f : fs)
        if (g.face_degree(f) == 3) out.push_back(f);
    return out;
}

// Typed satellite record for the S-role vertex s on the 3-face [v s p].
// Returns nullopt when s cannot serve as the repairable S-vertex.
inline std::optional<SatInfo> s_role_info(const PlaneGraph& g, int center, int s, int partner) {
    SatInfo info;
    info.vertex = s;
    if (g.degree(s) == 3) {
        info.type = SatType::ThreeVertex;
        return info;
    }
    if (g.degree(s) == 4) {
        std::vector<int> extra;
        for (int u : g.rotation(s))
            if (u != center && u != partner) extra.push_back(u);
        if (extra.size() == 2 && g.degree(extra[0]) == 3 && g.degree(extra[1]) == 3) {
            info.type = SatType::LightFour;
            info.x = std::min(extra[0], extra[1]);
            info.y = std::max(extra[0], extra[1]);
            return info;
        }
    }
    return std::nullopt;
}

// Role split of a 3-face as (5-ish center, S-vertex, exact-4 partner): the
// (a,*,4) shape used by B4/C2/C3/KEY. center must lie on the face.
inline std::optional<std::pair<SatInfo, int>> star4_roles(const PlaneGraph& g,
                                                          const StructureReport& rep, int center,
                                                          const Face& f) {
    std::array<int, 2> partners{0, 0};
    int k = 0;
    for (int u : f.boundary_vertices())
        if (u != center) {
            if (k == 2) return std::nullopt;
            partners[k++] = u;
        }
    if (k != 2) return std::nullopt;
    for (int flip = 0; flip < 2; ++flip) {
        int s = partners[flip], four = partners[1 - flip];
        if (g.degree(four) != 4 || !rep.at(s).s_vertex) continue;
        auto info = s_role_info(g, center, s, four);
        if (info) return std::make_pair(*info, four);
    }
    return std::nullopt;
}

// The two incident 3-faces of a 5-vertex with disjoint partner pairs, plus
// the remaining neighbor, if the vertex has that exact shape.
struct TwoTriangles {
    int f1 = -1, f3 = -1;
    std::array<int, 2> p1{0, 0}, p3{0, 0};
    int v5 = 0;
};

inline std::optional<TwoTriangles> two_triangle_shape(const PlaneGraph& g, int v) {
    auto tri = incident_3faces(g, v);
    if (tri.size() != 2) return std::nullopt;
    TwoTriangles out;
    out.f1 = tri[0];
    out.f3 = tri[1];
    std::set<int> used;
    int k1 = 0, k3 = 0;
    for (int u : g.face(tri[0]).boundary_vertices())
        if (u != v) {
            if (k1 == 2) return std::nullopt;
            out.p1[k1++] = u;
            used.insert(u);
        }
    for (int u : g.face(tri[1]).boundary_vertices())
        if (u != v) {
            if (k3 == 2) return std::nullopt;
            out.p3[k3++] = u;
            used.insert(u);
        }
    if (used.size() != 4) return std::nullopt;
    out.v5 = 0;
    for (int u : g.rotation(v))
        if (!used.count(u)) {
            if (out.v5 != 0) return std::nullopt;
            out.v5 = u;
        }
    if (out.v5 == 0) return std::nullopt;
    return out;
}

}  // namespace detail

// All configuration instances, kind priority A1..KEY, lexicographic
// witnesses within a kind.
inline std::vector<Configuration> find_all(const PlaneGraph& g, const StructureReport& rep) {
    std::vector<Configuration> out;
    auto add = [&](Configuration c) { out.push_back(std::move(c)); };

    // A1: vertex of degree <= 2.
    for (int v : g.vertices())
        if (g.degree(v) <= 2) {
            Configuration c;
            c.kind = ConfigKind::A1_smallDegree;
            c.verts = {v};
            c.delete_verts = {v};
            add(std::move(c));
        }

    // A2: adjacent 3-vertices.
    for (const auto& [u, v] : g.edges())
        if (g.degree(u) == 3 && g.degree(v) == 3) {
            Configuration c;
            c.kind = ConfigKind::A2_adjacent3s;
            c.verts = {u, v};
            c.delete_verts = {u, v};
            add(std::move(c));
        }

    // A3: (3,4,4)-face.
    for (const Face& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto bnd = f.boundary_vertices();
        std::vector<int> threes, fours;
        for (int u : bnd) (g.degree(u) == 3 ? threes : fours).push_back(u);
        if (threes.size() == 1 && fours.size() == 2 && g.degree(fours[0]) == 4 &&
            g.degree(fours[1]) == 4) {
            std::sort(fours.begin(), fours.end());
            Configuration c;
            c.kind = ConfigKind::A3_face344;
            c.verts = {threes[0], fours[0], fours[1]};
            c.faces = {f.id};
            c.delete_verts = c.verts;
            add(std::move(c));
        }
    }

    // B1: 4-vertex with three 3-neighbors.
    for (int v : g.vertices()) {
        if (g.degree(v) != 4) continue;
        std::vector<int> threes;
        for (int u : g.rotation(v))
            if (g.degree(u) == 3) threes.push_back(u);
        if (threes.size() < 3) continue;
        std::sort(threes.begin(), threes.end());
        threes.resize(3);
        Configuration c;
        c.kind = ConfigKind::B1_fourVertexThree3s;
        c.verts = {v, threes[0], threes[1], threes[2]};
        c.delete_verts = c.verts;
        add(std::move(c));
    }

    // B2: (4,4,4)-face; deletes the least edge of the face.
    for (const Face& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto bnd = f.boundary_vertices();
        if (std::all_of(bnd.begin(), bnd.end(), [&](int u) { return g.degree(u) == 4; })) {
            std::sort(bnd.begin(), bnd.end());
            Configuration c;
            c.kind = ConfigKind::B2_face444;
            c.verts = bnd;
            c.faces = {f.id};
            c.delete_edge = {bnd[0], bnd[1]};
            add(std::move(c));
        }
    }

    // B3: (5+,4,4)-face with both 4-vertices light; deletes the 4-4 edge.
    for (const Face& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto bnd = f.boundary_vertices();
        std::vector<int> fours, bigs;
        for (int u : bnd) (g.degree(u) == 4 ? fours : bigs).push_back(u);
        if (fours.size() != 2 || bigs.size() != 1 || g.degree(bigs[0]) < 5) continue;
        if (!rep.at(fours[0]).light4 || !rep.at(fours[1]).light4) continue;
        std::sort(fours.begin(), fours.end());
        Configuration c;
        c.kind = ConfigKind::B3_lightLightFace;
        c.verts = {bigs[0], fours[0], fours[1]};
        c.faces = {f.id};
        c.delete_edge = {fours[0], fours[1]};
        add(std::move(c));
    }

    // B4: 5-vertex on a (5,*,4)-face with two 3-neighbors off that face.
    for (int v : g.vertices()) {
        if (g.degree(v) != 5) continue;
        for (int fid : detail::incident_3faces(g, v)) {
            const Face& f = g.face(fid);
            auto roles = detail::star4_roles(g, rep, v, f);
            if (!roles) continue;
            std::vector<int> threes;
            for (int u : g.rotation(v))
                if (!f.touches(u) && g.degree(u) == 3) threes.push_back(u);
            if (threes.size() < 2) continue;
            std::sort(threes.begin(), threes.end());
            Configuration c;
            c.kind = ConfigKind::B4_fiveVertex;
            c.verts = {v, roles->first.vertex, roles->second, threes[0], threes[1]};
            c.faces = {fid};
            c.delete_verts = c.verts;
            c.pairs = {{roles->first.vertex, roles->second}};
            c.sats = {roles->first};
            add(std::move(c));
            break;  // one witness per vertex
        }
    }

    // B5: 6-vertex with two (6,4-,4-)-faces and one (6,*,4)-face on
    // alternating corners.
    for (int v : g.vertices()) {
        if (g.degree(v) != 6) continue;
        const auto& rot = g.rotation(v);
        auto inc = g.incident_faces(v);
        bool made = false;
        for (int phase = 0; phase < 2 && !made; ++phase) {
            std::array<int, 3> corner{phase, phase + 2, phase + 4};
            bool all3 = true;
            for (int c : corner) all3 = all3 && g.face_degree(inc[c]) == 3;
            if (!all3) continue;
            // Pick which corner plays the (6,*,4) role.
            for (int which = 0; which < 3 && !made; ++which) {
                int sc = corner[which];
                auto roles = detail::star4_roles(g, rep, v, g.face(inc[sc]));
                if (!roles) continue;
                bool others_ok = true;
                std::vector<std::array<int, 2>> low_pairs;
                for (int o = 0; o < 3; ++o) {
                    if (o == which) continue;
                    int a = rot[corner[o] % 6], b = rot[(corner[o] + 1) % 6];
                    if (g.degree(a) > 4 || g.degree(b) > 4) {
                        others_ok = false;
                        break;
                    }
                    low_pairs.push_back({a, b});
                }
                if (!others_ok) continue;
                Configuration c;
                c.kind = ConfigKind::B5_sixVertex;
                c.verts = {v,
                           low_pairs[0][0], low_pairs[0][1],
                           low_pairs[1][0], low_pairs[1][1],
                           roles->first.vertex, roles->second};
                c.faces = {inc[corner[0]], inc[corner[1]], inc[corner[2]]};
                c.delete_verts = c.verts;
                c.pairs = {low_pairs[0], low_pairs[1], {roles->first.vertex, roles->second}};
                c.sats = {roles->first};
                add(std::move(c));
                made = true;
            }
        }
    }

    // F1: (3,4,3,4)-face.
    for (const Face& f : g.faces()) {
        if (f.degree() != 4) continue;
        auto bnd = f.boundary_vertices();
        std::vector<std::array<int, 4>> cands;
        for (int refl = 0; refl < 2; ++refl) {
            for (int r = 0; r < 4; ++r) {
                std::array<int, 4> t{bnd[r % 4], bnd[(r + 1) % 4], bnd[(r + 2) % 4],
                                     bnd[(r + 3) % 4]};
                if (g.degree(t[0]) == 3 && g.degree(t[1]) == 4 && g.degree(t[2]) == 3 &&
                    g.degree(t[3]) == 4)
                    cands.push_back(t);
            }
            std::reverse(bnd.begin(), bnd.end());
        }
        if (cands.empty()) continue;
        std::sort(cands.begin(), cands.end());
        Configuration c;
        c.kind = ConfigKind::F1_34m4face;
        c.verts = {cands[0][0], cands[0][1], cands[0][2], cands[0][3]};
        c.faces = {f.id};
        c.delete_verts = c.verts;
        add(std::move(c));
    }

    // F2: (3,4,4,4)-face whose vertex opposite the 3-vertex has two
    // 3-neighbors off the face.
    for (const Face& f : g.faces()) {
        if (f.degree() != 4) continue;
        auto bnd = f.boundary_vertices();
        std::vector<int> threes;
        for (int i = 0; i < 4; ++i)
            if (g.degree(bnd[i]) == 3) threes.push_back(i);
        if (threes.size() != 1) continue;
        int ui = threes[0];
        int u = bnd[ui], v = bnd[(ui + 1) % 4], x = bnd[(ui + 2) % 4], y = bnd[(ui + 3) % 4];
        if (g.degree(v) != 4 || g.degree(x) != 4 || g.degree(y) != 4) continue;
        std::vector<int> extra;
        for (int t : g.rotation(x))
            if (t != v && t != y) extra.push_back(t);
        if (extra.size() != 2) continue;
        if (g.degree(extra[0]) != 3 || g.degree(extra[1]) != 3) continue;
        if (f.touches(extra[0]) || f.touches(extra[1])) continue;
        if (v > y) std::swap(v, y);
        std::sort(extra.begin(), extra.end());
        Configuration c;
        c.kind = ConfigKind::F2_softOpposite;
        c.verts = {u, v, x, y, extra[0], extra[1]};
        c.faces = {f.id};
        c.delete_verts = c.verts;
        add(std::move(c));
    }

    // SOFT: adjacent soft 4-vertices, both soft via the common 4-face
    // containing their edge.
    for (const auto& [u, v] : g.edges()) {
        if (!rep.at(u).soft4 || !rep.at(v).soft4) continue;
        for (int fid : {g.face_of(u, v), g.face_of(v, u)}) {
            const Face& f = g.face(fid);
            if (f.degree() != 4) continue;
            auto off = [&](int w) {
                std::vector<int> o;
                for (int t : g.rotation(w))
                    if (!f.touches(t)) o.push_back(t);
                return o;
            };
            auto uo = off(u), vo = off(v);
            if (uo.size() != 2 || vo.size() != 2) continue;
            if (g.degree(uo[0]) != 3 || g.degree(uo[1]) != 3) continue;
            if (g.degree(vo[0]) != 3 || g.degree(vo[1]) != 3) continue;
            int x = 0, y = 0;  // u's and v's face neighbors other than each other
            for (int t : g.rotation(u))
                if (t != v && f.touches(t)) x = t;
            for (int t : g.rotation(v))
                if (t != u && f.touches(t)) y = t;
            if (x == 0 || y == 0) continue;
            std::sort(uo.begin(), uo.end());
            std::sort(vo.begin(), vo.end());
            Configuration c;
            c.kind = ConfigKind::SOFT_adjacentSoft;
            c.verts = {u, v, x, y, uo[0], uo[1], vo[0], vo[1]};
            c.faces = {fid};
            c.delete_verts = {u, v, uo[0], uo[1], vo[0], vo[1]};
            add(std::move(c));
            break;
        }
    }

    // C1/C2/C3: 5-vertex with two vertex-disjoint incident 3-faces.
    for (int v : g.vertices()) {
        if (g.degree(v) != 5) continue;
        auto shape = detail::two_triangle_shape(g, v);
        if (!shape) continue;

        auto low = [&](const std::array<int, 2>& p) {
            return g.degree(p[0]) <= 4 && g.degree(p[1]) <= 4;
        };
        if (g.degree(shape->v5) == 3 && low(shape->p1) && low(shape->p3)) {
            Configuration c;
            c.kind = ConfigKind::C1;
            auto p1 = shape->p1, p3 = shape->p3;
            std::sort(p1.begin(), p1.end());
            std::sort(p3.begin(), p3.end());
            c.verts = {v, p1[0], p1[1], p3[0], p3[1], shape->v5};
            c.faces = {shape->f1, shape->f3};
            c.delete_verts = c.verts;
            c.pairs = {p1, p3};
            add(std::move(c));
        }

        auto roles1 = detail::star4_roles(g, rep, v, g.face(shape->f1));
        auto roles3 = detail::star4_roles(g, rep, v, g.face(shape->f3));
        auto star_plus = [&](const Face& f) -> std::optional<std::pair<SatInfo, int>> {
            // (5,*,4+): S-vertex plus a partner of degree >= 4.
            std::array<int, 2> partners{0, 0};
            int k = 0;
            for (int u : f.boundary_vertices())
                if (u != v) partners[k++] = u;
            for (int flip = 0; flip < 2; ++flip) {
                int s = partners[flip], big = partners[1 - flip];
                if (g.degree(big) < 4 || !rep.at(s).s_vertex) continue;
                auto info = detail::s_role_info(g, v, s, big);
                if (info) return std::make_pair(*info, big);
            }
            return std::nullopt;
        };

        if (g.degree(shape->v5) == 3) {
            // C2: one face (5,*,4), the other (5,*,4+).
            for (int flip = 0; flip < 2; ++flip) {
                auto exact = flip == 0 ? roles1 : roles3;
                const Face& other = g.face(flip == 0 ? shape->f3 : shape->f1);
                if (!exact) continue;
                auto plus = star_plus(other);
                if (!plus) continue;
                Configuration c;
                c.kind = ConfigKind::C2;
                c.verts = {v, exact->first.vertex, exact->second, plus->first.vertex,
                           plus->second, shape->v5};
                c.faces = {flip == 0 ? shape->f1 : shape->f3, flip == 0 ? shape->f3 : shape->f1};
                c.delete_verts = {v, exact->first.vertex, exact->second, plus->first.vertex,
                                  shape->v5};
                c.pairs = {{exact->first.vertex, exact->second}};
                c.sats = {exact->first, plus->first};
                add(std::move(c));
                break;
            }
        }

        if (roles1 && roles3) {
            Configuration c;
            c.kind = ConfigKind::C3;
            c.verts = {v, roles1->first.vertex, roles1->second, roles3->first.vertex,
                       roles3->second};
            c.faces = {shape->f1, shape->f3};
            c.delete_verts = c.verts;
            c.pairs = {{roles1->first.vertex, roles1->second},
                       {roles3->first.vertex, roles3->second}};
            c.sats = {roles1->first, roles3->first};
            add(std::move(c));
        }
    }

    // KEY: 3-face carrying two bad 5-vertices.
    for (const Face& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto bnd = f.boundary_vertices();
        std::vector<int> bad;
        for (int t : bnd)
            if (rep.at(t).bad5) bad.push_back(t);
        if (bad.size() < 2) continue;
        std::sort(bad.begin(), bad.end());
        int v = bad[0], w = bad[1];
        int u = 0;
        for (int t : bnd)
            if (t != v && t != w) u = t;
        if (u == 0) continue;
        auto entourage = [&](int b) -> std::optional<std::tuple<SatInfo, int, int>> {
            auto tri = detail::incident_3faces(g, b);
            int other = -1;
            for (int fid : tri)
                if (fid != f.id) other = fid;
            if (other < 0) return std::nullopt;
            auto roles = detail::star4_roles(g, rep, b, g.face(other));
            if (!roles) return std::nullopt;
            int pend = 0;
            for (int t : g.rotation(b)) {
                if (t == u || t == (b == v ? w : v)) continue;
                if (t == roles->first.vertex || t == roles->second) continue;
                pend = t;
            }
            if (pend == 0 || g.degree(pend) != 3) return std::nullopt;
            return std::make_tuple(roles->first, roles->second, pend);
        };
        auto ev = entourage(v), ew = entourage(w);
        if (!ev || !ew) continue;
        Configuration c;
        c.kind = ConfigKind::KEY_twoBad5s;
        c.verts = {u, v, w, std::get<0>(*ev).vertex, std::get<1>(*ev), std::get<2>(*ev),
                   std::get<0>(*ew).vertex, std::get<1>(*ew), std::get<2>(*ew)};
        c.faces = {f.id};
        c.delete_verts = {v, w, std::get<0>(*ev).vertex, std::get<1>(*ev), std::get<2>(*ev),
                          std::get<0>(*ew).vertex, std::get<1>(*ew), std::get<2>(*ew)};
        c.pairs = {{std::get<0>(*ev).vertex, std::get<1>(*ev)},
                   {std::get<0>(*ew).vertex, std::get<1>(*ew)}};
        c.sats = {std::get<0>(*ev), std::get<0>(*ew)};
        add(std::move(c));
    }

    std::stable_sort(out.begin(), out.end(), [](const Configuration& a, const Configuration& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.verts < b.verts;
    });
    return out;
}

inline std::vector<Configuration> find_all(const PlaneGraph& g) {
    auto rep = classify(g);
    return find_all(g, rep);
}

// Re-check that a witness still satisfies its hypothesis in g.
inline bool verify_witness(const PlaneGraph& g, const Configuration& cfg) {
    for (int v : cfg.verts)
        if (!g.has_vertex(v)) return false;
    auto fresh = find_all(g);
    for (const Configuration& c : fresh)
        if (c.kind == cfg.kind && c.verts == cfg.verts) return true;
    // The witness may differ only in tie-broken satellite choices; accept a
    // same-kind witness on the same core vertices.
    for (const Configuration& c : fresh)
        if (c.kind == cfg.kind && c.verts[0] == cfg.verts[0] &&
            c.delete_verts == cfg.delete_verts && c.delete_edge == cfg.delete_edge)
            return true;
    return false;
}

inline std::vector<PlaneGraph> reduce(const PlaneGraph& g, const Configuration& cfg) {
    require(verify_witness(g, cfg), Errc::WitnessStale, "witness no longer valid: " + cfg.str());
    std::vector<PlaneGraph> comps;
    if (cfg.deletes_edge())
        comps = g.delete_edge(cfg.delete_edge[0], cfg.delete_edge[1]);
    else
        comps = g.delete_vertices(cfg.delete_verts);
    if (in_class(g).in_class)
        for (const PlaneGraph& c : comps)
            require(in_class(c).in_class, Errc::Internal,
                    "reduction of a class member left the class");
    return comps;
}

}  // namespace plic
