#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plic/error.hpp"
#include "plic/plane_graph.hpp"

namespace plic {

// ---------------------------------------------------------------------------
// Cycle inventory.
// ---------------------------------------------------------------------------

// A cycle as a canonical vertex sequence: lexicographically least over all
// rotations and reflections. Includes non-facial cycles.
inline std::vector<int> canonical_cycle(std::vector<int> cyc) {
    std::vector<int> best;
    std::size_t n = cyc.size();
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<int> cand(n);
            for (std::size_t i = 0; i < n; ++i) cand[i] = cyc[(s + i) % n];
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(cyc.begin(), cyc.end());
    }
    return best;
}

inline std::vector<std::vector<int>> cycles_of_length(const PlaneGraph& g, int k) {
    require(k == 3 || k == 4, Errc::UnsupportedLength, "only 3- and 4-cycles are enumerated");
    std::set<std::vector<int>> out;
    if (k == 3) {
        for (int u : g.vertices())
            for (int v : g.rotation(u)) {
                if (v < u) continue;
                for (int w : g.rotation(v)) {
                    if (w < v || w == u) continue;
                    if (g.adjacent(w, u)) out.insert(canonical_cycle({u, v, w}));
                }
            }
    } else {
        // u-a-w-b-u over non-adjacent "diagonal" pairs (u,w).
        for (int u : g.vertices())
            for (int a : g.rotation(u))
                for (int w : g.rotation(a)) {
                    if (w == u) continue;
                    for (int b : g.rotation(w)) {
                        if (b == a || b == u) continue;
                        if (g.adjacent(b, u)) out.insert(canonical_cycle({u, a, w, b}));
                    }
                }
    }
    return {out.begin(), out.end()};
}

inline std::set<std::pair<int, int>> cycle_edges(const std::vector<int>& cyc) {
    std::set<std::pair<int, int>> es;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        es.insert({std::min(a, b), std::max(a, b)});
    }
    return es;
}

inline bool cycles_share_edge(const std::vector<int>& a, const std::vector<int>& b) {
    auto ea = cycle_edges(a), eb = cycle_edges(b);
    for (const auto& e : ea)
        if (eb.count(e)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Class membership: no 4-cycle adjacent (= sharing an edge) to a 3-cycle or
// to another 4-cycle.
// ---------------------------------------------------------------------------

struct ClassReport {
    bool in_class = true;
    // (4-cycle, offending 3- or 4-cycle) pairs.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> violations;
};

inline ClassReport in_class(const PlaneGraph& g) {
    ClassReport rep;
    auto c3 = cycles_of_length(g, 3);
    auto c4 = cycles_of_length(g, 4);
    for (const auto& q : c4) {
        for (const auto& t : c3)
            if (cycles_share_edge(q, t)) rep.violations.push_back({q, t});
        for (const auto& q2 : c4) {
            if (q2 == q) continue;
            if (cycles_share_edge(q, q2)) rep.violations.push_back({q, q2});
        }
    }
    rep.in_class = rep.violations.empty();
    return rep;
}

inline int girth(const PlaneGraph& g) {
    // BFS from every vertex; the first non-tree edge closing two branches
    // bounds the shortest cycle through the root.
    int best = -1;
    std::size_t n = g.vertices().size();
    std::vector<int> dist, parent;
    for (int root : g.vertices()) {
        dist.assign(g.rotation_cap(), -1);
        parent.assign(g.rotation_cap(), 0);
        std::vector<int> queue{root};
        dist[root] = 0;
        std::size_t qi = 0;
        while (qi < queue.size()) {
            int v = queue[qi++];
            for (int u : g.rotation(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v] && dist[u] >= dist[v]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
        (void)n;
    }
    require(best > 0, Errc::Acyclic, "graph has no cycle");
    return best;
}

// ---------------------------------------------------------------------------
// Vertex taxonomy.
// ---------------------------------------------------------------------------

struct VertexInfo {
    int degree = 0;
    int t = 0;        // distinct incident 3-faces
    int m4 = 0;       // distinct incident 4-faces
    int n3 = 0;       // 3-vertex neighbors
    int nu3 = 0;      // free 3-neighbors
    int p3 = 0;       // pendant 3-neighbors
    bool light4 = false;
    bool soft4 = false;
    bool weak4 = false;
    bool s_vertex = false;
    bool bad5 = false;
    // One witness per flag: the face (and for bad5 the two faces) backing it.
    int light4_face = -1;
    int soft4_face = -1;
    int weak4_face = -1;
    std::array<int, 2> bad5_faces{-1, -1};
    int bad5_v5 = 0;
};

struct StructureReport {
    std::map<int, VertexInfo> vertex;
    std::map<int, std::vector<int>> face_degrees;  // face id -> boundary degree pattern

    const VertexInfo& at(int v) const {
        auto it = vertex.find(v);
        require(it != vertex.end(), Errc::UnknownVertex, "no such vertex in report");
        return it->second;
    }
};

namespace detail {

// Both incident 3-face criteria ("adjacent to two 3-vertices not on b(f)")
// are existential over the faces at v; the scan is in rotation order so the
// recorded witness is deterministic.
inline bool two_offface_3neighbors(const PlaneGraph& g, int v, const Face& f) {
    int cnt = 0;
    for (int u : g.rotation(v))
        if (g.degree(u) == 3 && !f.touches(u)) ++cnt;
    return cnt >= 2;
}

}  // namespace detail

inline bool edge_on_3face(const PlaneGraph& g, int u, int v) {
    return g.edge_on_face_of_degree(u, v, 3);
}

// Pendant/free status of a 3-vertex v relative to a neighbor u: edge uv on
// no 3-face, and t(v) = 1 (pendant) or t(v) = 0 (free).
inline bool is_pendant_3_of(const PlaneGraph& g, int u, int v, int t_v) {
    return g.degree(v) == 3 && !edge_on_3face(g, u, v) && t_v == 1;
}
inline bool is_free_3_of(const PlaneGraph& g, int u, int v, int t_v) {
    return g.degree(v) == 3 && !edge_on_3face(g, u, v) && t_v == 0;
}

inline StructureReport classify(const PlaneGraph& g) {
    StructureReport rep;
    for (const Face& f : g.faces()) {
        std::vector<int> degs;
        for (int v : f.boundary_vertices()) degs.push_back(g.degree(v));
        rep.face_degrees[f.id] = degs;
    }

    // Pass 1: degrees and face counters.
    for (int v : g.vertices()) {
        VertexInfo info;
        info.degree = g.degree(v);
        info.t = g.count_incident_faces_of_degree(v, 3);
        info.m4 = g.count_incident_faces_of_degree(v, 4);
        for (int u : g.rotation(v))
            if (g.degree(u) == 3) ++info.n3;
        rep.vertex[v] = info;
    }

    // Pass 2: flags that read neighbors' counters.
    for (int v : g.vertices()) {
        VertexInfo& info = rep.vertex[v];
        int d = info.degree;

        if (d == 4) {
            for (int fid : g.incident_faces(v)) {
                const Face& f = g.face(fid);
                if (f.degree() == 3 && !info.light4 && detail::two_offface_3neighbors(g, v, f)) {
                    info.light4 = true;
                    info.light4_face = fid;
                }
                if (f.degree() == 4 && !info.soft4 && detail::two_offface_3neighbors(g, v, f)) {
                    info.soft4 = true;
                    info.soft4_face = fid;
                }
            }
            // Weak: soft with the witness 4-face at corner i, both other
            // rotation neighbors of degree 3 and off that face, and the
            // opposite corner face of degree >= 5.
            const auto& rot = g.rotation(v);
            std::vector<int> inc = g.incident_faces(v);
            for (int i = 0; i < 4 && !info.weak4; ++i) {
                const Face& f = g.face(inc[i]);
                if (f.degree() != 4) continue;
                int a = rot[(i + 2) % 4], b = rot[(i + 3) % 4];
                if (g.degree(a) != 3 || g.degree(b) != 3) continue;
                if (f.touches(a) || f.touches(b)) continue;
                if (g.face(inc[(i + 2) % 4]).degree() >= 5) {
                    info.weak4 = true;
                    info.weak4_face = inc[i];
                }
            }
        }
        info.s_vertex = (d == 3) || info.light4;
    }

    // Pass 3: bad 5-vertices (need S-vertex flags of neighbors) and the
    // pendant/free counters (need t of neighbors).
    for (int v : g.vertices()) {
        VertexInfo& info = rep.vertex[v];
        if (info.degree == 5 && info.t == 2) {
            std::vector<int> inc = g.incident_faces(v);
            std::vector<int> tri;
            for (int fid : inc)
                if (g.face(fid).degree() == 3) tri.push_back(fid);
            std::sort(tri.begin(), tri.end());
            tri.erase(std::unique(tri.begin(), tri.end()), tri.end());
            if (tri.size() == 2) {
                std::set<int> on_faces;
                for (int fid : tri)
                    for (int u : g.face(fid).boundary_vertices())
                        if (u != v) on_faces.insert(u);
                if (on_faces.size() == 4) {
                    int v5 = 0;
                    for (int u : g.rotation(v))
                        if (!on_faces.count(u)) v5 = u;
                    if (v5 != 0 && g.degree(v5) == 3) {
                        // One of the two 3-faces must be a (5,*,4)-face with
                        // v in the 5 role.
                        for (int fid : tri) {
                            std::array<int, 2> partners{0, 0};
                            int k = 0;
                            for (int u : g.face(fid).boundary_vertices())
                                if (u != v) partners[k++] = u;
                            for (int flip = 0; flip < 2 && !info.bad5; ++flip) {
                                int s = partners[flip], four = partners[1 - flip];
                                if (g.degree(four) == 4 && rep.vertex[s].s_vertex) {
                                    info.bad5 = true;
                                    info.bad5_faces = {fid, fid == tri[0] ? tri[1] : tri[0]};
                                    info.bad5_v5 = v5;
                                }
                            }
                            if (info.bad5) break;
                        }
                    }
                }
            }
        }
        for (int u : g.rotation(v)) {
            if (g.degree(u) != 3) continue;
            int tu = rep.vertex[u].t;
            if (is_free_3_of(g, v, u, tu)) ++info.nu3;
            if (is_pendant_3_of(g, v, u, tu)) ++info.p3;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Face patterns.
// ---------------------------------------------------------------------------

// Pattern entries: "k" exact degree, "k+" at least, "k-" at most, "*" an
// S-vertex (3-vertex or light 4-vertex).
struct PatternEntry {
    enum Kind { Exact, AtLeast, AtMost, SVertex } kind = Exact;
    int value = 0;

    static PatternEntry parse(const std::string& tok) {
        PatternEntry e;
        require(!tok.empty(), Errc::ParseError, "empty pattern entry");
        if (tok == "*") {
            e.kind = SVertex;
            return e;
        }
        std::string num = tok;
        if (tok.back() == '+') {
            e.kind = AtLeast;
            num = tok.substr(0, tok.size() - 1);
        } else if (tok.back() == '-') {
            e.kind = AtMost;
            num = tok.substr(0, tok.size() - 1);
        }
        try {
            e.value = std::stoi(num);
        } catch (...) {
            fail(Errc::ParseError, "bad pattern entry '" + tok + "'");
        }
        return e;
    }
};

inline std::vector<PatternEntry> parse_pattern(const std::vector<std::string>& toks) {
    std::vector<PatternEntry> p;
    p.reserve(toks.size());
    for (const auto& t : toks) p.push_back(PatternEntry::parse(t));
    return p;
}

inline bool entry_matches(const PatternEntry& e, int degree, bool s_vertex) {
    switch (e.kind) {
        case PatternEntry::Exact: return degree == e.value;
        case PatternEntry::AtLeast: return degree >= e.value;
        case PatternEntry::AtMost: return degree <= e.value;
        case PatternEntry::SVertex: return s_vertex;
    }
    return false;
}

inline bool face_pattern_entries(const PlaneGraph& g, const StructureReport& rep, int face_id,
                                 const std::vector<PatternEntry>& pattern) {
    const Face& f = g.face(face_id);
    std::vector<int> bnd = f.boundary_vertices();
    require(pattern.size() == bnd.size(), Errc::PatternLengthMismatch,
            "pattern length " + std::to_string(pattern.size()) + " vs face degree " +
                std::to_string(bnd.size()));
    std::size_t n = bnd.size();
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                int v = bnd[(s + i) % n];
                ok = entry_matches(pattern[i], g.degree(v), rep.at(v).s_vertex);
            }
            if (ok) return true;
        }
        std::reverse(bnd.begin(), bnd.end());
    }
    return false;
}

inline bool face_pattern(const PlaneGraph& g, const StructureReport& rep, int face_id,
                         const std::vector<std::string>& pattern) {
    return face_pattern_entries(g, rep, face_id, parse_pattern(pattern));
}

// ---------------------------------------------------------------------------
// Stable text serialization for CLI output and fixtures.
// ---------------------------------------------------------------------------

inline std::string format_structure_report(const PlaneGraph& g, const StructureReport& rep) {
    std::ostringstream os;
    for (int v : g.vertices()) {
        const VertexInfo& i = rep.at(v);
        os << "v " << v << ": d=" << i.degree << " t=" << i.t << " m4=" << i.m4 << " n3=" << i.n3
           << " nu3=" << i.nu3 << " p3=" << i.p3 << " flags=";
        std::string flags;
        if (i.light4) flags += "light4,";
        if (i.soft4) flags += "soft4,";
        if (i.weak4) flags += "weak4,";
        if (i.s_vertex) flags += "S,";
        if (i.bad5) flags += "bad5,";
        if (!flags.empty()) flags.pop_back();
        os << (flags.empty() ? "-" : flags) << "\n";
    }
    for (const Face& f : g.faces()) {
        os << "f " << f.id << ": deg=" << f.degree() << " [";
        const auto& bnd = f.boundary_vertices();
        for (std::size_t i = 0; i < bnd.size(); ++i) os << (i ? " " : "") << bnd[i];
        os << "]\n";
    }
    return os.str();
}

inline std::string format_class_report(const ClassReport& rep) {
    std::ostringstream os;
    os << "in class: " << (rep.in_class ? "yes" : "no") << "\n";
    for (const auto& [q, c] : rep.violations) {
        os << "violation: 4-cycle [";
        for (std::size_t i = 0; i < q.size(); ++i) os << (i ? " " : "") << q[i];
        os << "] shares an edge with " << c.size() << "-cycle [";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << "]\n";
    }
    return os.str();
}

}  // namespace plic
