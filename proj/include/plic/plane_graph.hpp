#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "plic/error.hpp"

namespace plic {

// Plain adjacency view. Vertex ids are positive ints, not necessarily dense
// (reductions leave holes). adj is indexed by id; verts lists the ids that
// exist, sorted. Coloring and extension code works on this, so the same code
// path serves real plane graphs and the synthetic local instances the lemma
// oracles build.
struct SimpleGraph {
    std::vector<std::vector<int>> adj;  // adj[v] empty unless v present
    std::vector<int> verts;             // sorted present ids

    bool has_vertex(int v) const {
        return v > 0 && v < static_cast<int>(adj.size()) &&
               (!adj[v].empty() || std::binary_search(verts.begin(), verts.end(), v));
    }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const {
        const auto& a = adj[u];
        return std::find(a.begin(), a.end(), v) != a.end();
    }
    std::size_t edge_count() const {
        std::size_t s = 0;
        for (int v : verts) s += adj[v].size();
        return s / 2;
    }

    static SimpleGraph from_adjacency(const std::map<int, std::vector<int>>& a) {
        SimpleGraph g;
        int maxid = 0;
        for (const auto& [v, _] : a) maxid = std::max(maxid, v);
        g.adj.assign(maxid + 1, {});
        for (const auto& [v, nbrs] : a) {
            g.adj[v] = nbrs;
            g.verts.push_back(v);
        }
        std::sort(g.verts.begin(), g.verts.end());
        return g;
    }
};

// A directed edge (dart) of the embedding.
struct Dart {
    int from = 0;
    int to = 0;
    friend bool operator==(const Dart& a, const Dart& b) = default;
    friend auto operator<=>(const Dart& a, const Dart& b) = default;
};

// One face of the embedding: a closed walk of darts. For faces that are
// cycles (every 3-face, and every 4-face unless a degree-1 vertex is
// involved) the tail vertices of the walk give the boundary cycle.
struct Face {
    int id = 0;
    std::vector<Dart> walk;

    int degree() const { return static_cast<int>(walk.size()); }
    std::vector<int> boundary_vertices() const {
        std::vector<int> vs;
        vs.reserve(walk.size());
        for (const Dart& d : walk) vs.push_back(d.from);
        return vs;
    }
    bool touches(int v) const {
        for (const Dart& d : walk)
            if (d.from == v) return true;
        return false;
    }
};

// Connected simple plane graph given by a clockwise rotation system.
//
// Face tracing convention, fixed once for the whole project: from dart
// (u,v) the successor is (v,w) where w immediately precedes u in the
// clockwise rotation at v. Every dart lies on exactly one face walk and
// Euler's identity |V| - |E| + |F| = 2 is asserted at construction;
// rotation systems of nonzero genus are rejected.
class PlaneGraph {
public:
    static PlaneGraph build_from_rotation(const std::map<int, std::vector<int>>& rotation) {
        PlaneGraph g;
        int maxid = 0;
        for (const auto& [v, nbrs] : rotation) {
            require(v > 0, Errc::ParseError, "vertex ids must be positive");
            maxid = std::max(maxid, v);
            for (int u : nbrs) maxid = std::max(maxid, u);
        }
        g.rot_.assign(maxid + 1, {});
        for (const auto& [v, nbrs] : rotation) {
            g.rot_[v] = nbrs;
            g.verts_.push_back(v);
        }
        std::sort(g.verts_.begin(), g.verts_.end());
        g.validate_simple_symmetric();
        g.validate_connected();
        g.trace_faces();
        g.check_euler();
        return g;
    }

    const std::vector<int>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int rotation_cap() const { return static_cast<int>(rot_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_vertex(int v) const {
        return v > 0 && v < static_cast<int>(rot_.size()) &&
               std::binary_search(verts_.begin(), verts_.end(), v);
    }
    int degree(int v) const {
        require(has_vertex(v), Errc::UnknownVertex, "degree of missing vertex " + std::to_string(v));
        return static_cast<int>(rot_[v].size());
    }
    const std::vector<int>& rotation(int v) const {
        require(has_vertex(v), Errc::UnknownVertex, "rotation of missing vertex " + std::to_string(v));
        return rot_[v];
    }
    bool adjacent(int u, int v) const {
        if (!has_vertex(u) || !has_vertex(v)) return false;
        const auto& r = rot_[u];
        return std::find(r.begin(), r.end(), v) != r.end();
    }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const {
        require(id >= 0 && id < static_cast<int>(faces_.size()), Errc::UnknownFace,
                "face " + std::to_string(id));
        return faces_[id];
    }
    int face_degree(int id) const { return face(id).degree(); }

    // Face containing a given dart.
    int face_of(int from, int to) const {
        auto it = dart_face_.find(Dart{from, to});
        require(it != dart_face_.end(), Errc::UnknownFace,
                "no dart " + std::to_string(from) + "->" + std::to_string(to));
        return it->second;
    }

    // Incident faces in rotation order: entry i is the face whose boundary
    // contains both edges v-rot[i] and v-rot[i+1]. For a 4-vertex the face
    // opposite entry i is entry i+2.
    std::vector<int> incident_faces(int v) const {
        const auto& r = rotation(v);
        std::vector<int> out;
        out.reserve(r.size());
        for (int u : r) out.push_back(face_of(v, u));
        return out;
    }

    // Distinct faces incident to v of the given degree.
    int count_incident_faces_of_degree(int v, int deg) const {
        std::vector<int> fs = incident_faces(v);
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        int n = 0;
        for (int f : fs)
            if (faces_[f].degree() == deg) ++n;
        return n;
    }

    bool edge_on_face_of_degree(int u, int v, int deg) const {
        return faces_[face_of(u, v)].degree() == deg || faces_[face_of(v, u)].degree() == deg;
    }

    SimpleGraph simple_graph() const {
        SimpleGraph g;
        g.adj = rot_;
        g.verts = verts_;
        return g;
    }

    std::map<int, std::vector<int>> rotation_table() const {
        std::map<int, std::vector<int>> t;
        for (int v : verts_) t[v] = rot_[v];
        return t;
    }

    // Induced subgraph after deleting a vertex set; rotation order of the
    // survivors is inherited. Result may be disconnected: each connected
    // component comes back as its own PlaneGraph with original ids.
    std::vector<PlaneGraph> delete_vertices(const std::vector<int>& del) const {
        std::vector<char> gone(rot_.size(), 0);
        for (int v : del) {
            require(has_vertex(v), Errc::UnknownVertex, "delete of missing vertex");
            gone[v] = 1;
        }
        std::map<int, std::vector<int>> rest;
        for (int v : verts_) {
            if (gone[v]) continue;
            std::vector<int> nb;
            for (int u : rot_[v])
                if (!gone[u]) nb.push_back(u);
            rest[v] = nb;
        }
        return split_components(rest);
    }

    std::vector<PlaneGraph> delete_edge(int u, int v) const {
        require(adjacent(u, v), Errc::UnknownVertex, "delete of missing edge");
        std::map<int, std::vector<int>> t = rotation_table();
        std::erase(t[u], v);
        std::erase(t[v], u);
        return split_components(t);
    }

private:
    static std::vector<PlaneGraph> split_components(const std::map<int, std::vector<int>>& table) {
        std::vector<PlaneGraph> out;
        if (table.empty()) return out;
        std::map<int, int> comp;
        int nc = 0;
        for (const auto& [v, _] : table) {
            if (comp.count(v)) continue;
            std::vector<int> stack{v};
            comp[v] = nc;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int u : table.at(x))
                    if (!comp.count(u)) {
                        comp[u] = nc;
                        stack.push_back(u);
                    }
            }
            ++nc;
        }
        std::vector<std::map<int, std::vector<int>>> tables(nc);
        for (const auto& [v, nbrs] : table) tables[comp[v]][v] = nbrs;
        out.reserve(nc);
        for (auto& t : tables) out.push_back(build_from_rotation(t));
        return out;
    }

    void validate_simple_symmetric() const {
        require(!verts_.empty(), Errc::ParseError, "empty graph");
        for (int v : verts_) {
            std::vector<int> seen;
            for (int u : rot_[v]) {
                require(u != v, Errc::LoopOrMultiEdge, "loop at " + std::to_string(v));
                require(u > 0 && u < static_cast<int>(rot_.size()) &&
                            std::binary_search(verts_.begin(), verts_.end(), u),
                        Errc::AsymmetricRotation,
                        std::to_string(v) + " lists unknown vertex " + std::to_string(u));
                seen.push_back(u);
            }
            std::sort(seen.begin(), seen.end());
            require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                    Errc::LoopOrMultiEdge, "repeated neighbor at " + std::to_string(v));
            for (int u : rot_[v]) {
                const auto& ru = rot_[u];
                require(std::find(ru.begin(), ru.end(), v) != ru.end(), Errc::AsymmetricRotation,
                        "edge " + std::to_string(v) + "-" + std::to_string(u) + " not symmetric");
            }
        }
    }

    void validate_connected() const {
        std::vector<char> vis(rot_.size(), 0);
        std::vector<int> stack{verts_.front()};
        vis[verts_.front()] = 1;
        std::size_t n = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++n;
            for (int u : rot_[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    stack.push_back(u);
                }
        }
        require(n == verts_.size(), Errc::Disconnected, "graph is not connected");
    }

    void trace_faces() {
        edges_.clear();
        faces_.clear();
        dart_face_.clear();
        std::vector<Dart> darts;
        for (int v : verts_)
            for (int u : rot_[v]) {
                darts.push_back({v, u});
                if (v < u) edges_.emplace_back(v, u);
            }
        std::sort(darts.begin(), darts.end());
        std::sort(edges_.begin(), edges_.end());
        if (darts.empty()) {
            // Isolated vertex: a legal (trivial) plane graph with one face.
            faces_.push_back(Face{0, {}});
            return;
        }
        for (const Dart& d : darts) {
            if (dart_face_.count(d)) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            Dart cur = d;
            do {
                f.walk.push_back(cur);
                dart_face_[cur] = f.id;
                cur = successor(cur);
            } while (!(cur == d));
            faces_.push_back(std::move(f));
        }
    }

    Dart successor(const Dart& d) const {
        const auto& r = rot_[d.to];
        auto it = std::find(r.begin(), r.end(), d.from);
        std::size_t i = static_cast<std::size_t>(it - r.begin());
        int w = r[(i + r.size() - 1) % r.size()];
        return Dart{d.to, w};
    }

    void check_euler() const {
        long long v = static_cast<long long>(verts_.size());
        long long e = static_cast<long long>(edges_.size());
        long long f = static_cast<long long>(faces_.size());
        require(v - e + f == 2, Errc::EulerViolation,
                "rotation system is not planar: V-E+F = " + std::to_string(v - e + f));
    }

    std::vector<std::vector<int>> rot_;
    std::vector<int> verts_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Face> faces_;
    std::map<Dart, int> dart_face_;
};

}  // namespace plic
