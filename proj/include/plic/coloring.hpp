#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "plic/error.hpp"
#include "plic/plane_graph.hpp"

namespace plic {

// Per-vertex color sets. Colors are opaque small positive ints; lists are
// kept sorted. Indexed by vertex id like SimpleGraph.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::size_t cap) : lists_(cap) {}

    static ListAssignment uniform(const SimpleGraph& g, int k) {
        ListAssignment la(g.adj.size());
        std::vector<int> cs(k);
        for (int i = 0; i < k; ++i) cs[i] = i + 1;
        for (int v : g.verts) la.lists_[v] = cs;
        return la;
    }

    static ListAssignment from_map(const SimpleGraph& g, const std::map<int, std::vector<int>>& m) {
        ListAssignment la(g.adj.size());
        for (int v : g.verts) {
            auto it = m.find(v);
            require(it != m.end(), Errc::ListTooSmall, "no list for vertex " + std::to_string(v));
            la.set(v, it->second);
        }
        return la;
    }

    void ensure(int v) {
        if (v >= static_cast<int>(lists_.size())) lists_.resize(v + 1);
    }
    void set(int v, std::vector<int> cs) {
        ensure(v);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        lists_[v] = std::move(cs);
    }
    const std::vector<int>& at(int v) const { return lists_[v]; }
    bool contains(int v, int c) const {
        const auto& l = lists_[v];
        return std::binary_search(l.begin(), l.end(), c);
    }
    std::size_t capacity() const { return lists_.size(); }

private:
    std::vector<std::vector<int>> lists_;
};

// Partial or total coloring; 0 means uncolored.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::size_t cap) : color_(cap, 0) {}

    void ensure(int v) {
        if (v >= static_cast<int>(color_.size())) color_.resize(v + 1, 0);
    }
    void set(int v, int c) {
        ensure(v);
        color_[v] = c;
    }
    void erase(int v) {
        if (v < static_cast<int>(color_.size())) color_[v] = 0;
    }
    int at(int v) const { return v < static_cast<int>(color_.size()) ? color_[v] : 0; }
    bool colored(int v) const { return at(v) != 0; }

    bool total_on(const SimpleGraph& g) const {
        for (int v : g.verts)
            if (!colored(v)) return false;
        return true;
    }

    std::map<int, int> to_map(const SimpleGraph& g) const {
        std::map<int, int> m;
        for (int v : g.verts) m[v] = at(v);
        return m;
    }

private:
    std::vector<int> color_;
};

struct Violation {
    int vertex = 0;
    bool off_list = false;  // otherwise: defect exceeded
    int defect = 0;
};

struct CheckResult {
    bool ok = true;
    std::vector<Violation> violations;
};

// Validity of a total coloring: every vertex uses a color from its list
// (when lists are given) and has at most d neighbors of its own color.
inline CheckResult check(const SimpleGraph& g, const ListAssignment* lists, const Coloring& pi,
                         int d) {
    for (int v : g.verts)
        require(pi.colored(v), Errc::PartialColoring, "vertex " + std::to_string(v) + " uncolored");
    CheckResult res;
    for (int v : g.verts) {
        int c = pi.at(v);
        if (lists && !lists->contains(v, c)) {
            res.violations.push_back({v, true, 0});
            continue;
        }
        int same = 0;
        for (int u : g.adj[v])
            if (pi.at(u) == c) ++same;
        if (same > d) res.violations.push_back({v, false, same});
    }
    res.ok = res.violations.empty();
    return res;
}

inline bool check_ok(const SimpleGraph& g, const ListAssignment& lists, const Coloring& pi, int d) {
    return check(g, &lists, pi, d).ok;
}

// Exact backtracking solver for (L,d)*-coloring. Deterministic: vertices by
// (degree descending, id), colors by value; defect counters pruned as we go.
// Complete: Infeasible (nullopt) only after exhausting the search space.
inline std::optional<Coloring> solve(const SimpleGraph& g, const ListAssignment& lists, int d) {
    std::vector<int> order = g.verts;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    for (int v : order)
        require(!lists.at(v).empty(), Errc::ListTooSmall,
                "empty list at vertex " + std::to_string(v));

    Coloring pi(g.adj.size());
    std::vector<int> same(g.adj.size(), 0);  // colored neighbors sharing pi[v]

    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int c : lists.at(v)) {
            int clash = 0;
            bool fits = true;
            for (int u : g.adj[v]) {
                if (pi.at(u) != c) continue;
                ++clash;
                if (clash > d || same[u] + 1 > d) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            pi.set(v, c);
            same[v] = clash;
            for (int u : g.adj[v])
                if (pi.at(u) == c) ++same[u];
            if (go(idx + 1)) return true;
            for (int u : g.adj[v])
                if (pi.at(u) == c && u != v) --same[u];
            pi.erase(v);
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return pi;
}

// Brute-force existence oracle: enumerates every total assignment from the
// lists and checks it. Independent of solve; used to cross-validate it.
inline bool colorable_by_enumeration(const SimpleGraph& g, const ListAssignment& lists, int d) {
    const std::vector<int>& vs = g.verts;
    Coloring pi(g.adj.size());
    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
        if (idx == vs.size()) return check(g, &lists, pi, d).ok;
        for (int c : lists.at(vs[idx])) {
            pi.set(vs[idx], c);
            if (go(idx + 1)) return true;
        }
        pi.erase(vs[idx]);
        return false;
    };
    return go(0);
}

// Induced assignment: each vertex of S keeps its list minus the colors of
// its already-colored neighbors outside S. Empty induced lists are legal.
inline ListAssignment induced_assignment(const SimpleGraph& g, const std::vector<int>& s,
                                         const Coloring& pi_outside, const ListAssignment& lists) {
    std::vector<char> in_s(g.adj.size(), 0);
    for (int v : s) in_s[v] = 1;
    ListAssignment out(g.adj.size());
    for (int v : s) {
        std::vector<int> l = lists.at(v);
        for (int u : g.adj[v]) {
            if (in_s[u]) continue;
            int c = pi_outside.at(u);
            if (c != 0) std::erase(l, c);
        }
        out.set(v, l);
    }
    return out;
}

// Enumerates set systems in canonical form: colors appear in first-use
// order, so every system of k-lists over any universe is the renaming of
// exactly one enumerated system. slot_sizes[i] gives the allowed sizes of
// slot i. Callback returns false to stop.
inline bool enumerate_canonical_systems(const std::vector<std::pair<int, int>>& slot_sizes,
                                        int universe_cap,
                                        const std::function<bool(const std::vector<std::vector<int>>&)>& cb) {
    std::vector<std::vector<int>> sys(slot_sizes.size());
    std::function<bool(std::size_t, int)> go = [&](std::size_t slot, int used) -> bool {
        if (slot == slot_sizes.size()) return cb(sys);
        auto [lo, hi] = slot_sizes[slot];
        for (int size = lo; size <= hi; ++size) {
            // j fresh colors (the next consecutive ints), size-j old ones.
            for (int j = 0; j <= size; ++j) {
                if (size - j > used) continue;
                if (used + j > universe_cap) continue;
                std::vector<int> old_part;
                std::vector<int> comb(size - j);
                std::function<bool(int, int)> pick = [&](int start, int need) -> bool {
                    if (need == 0) {
                        std::vector<int> set = comb;
                        for (int t = 1; t <= j; ++t) set.push_back(used + t);
                        sys[slot] = set;
                        return go(slot + 1, used + j);
                    }
                    for (int c = start; c <= used - need + 1; ++c) {
                        comb[size - j - need] = c;
                        if (!pick(c + 1, need - 1)) return false;
                    }
                    return true;
                };
                if (!pick(1, size - j)) return false;
            }
        }
        return true;
    };
    return go(0, 0);
}

struct ChoosabilityResult {
    bool choosable = true;
    std::map<int, std::vector<int>> witness;  // a failing assignment, if any
    long long assignments_tested = 0;
};

// Exhaustive (k,d)*-choosability test. All list systems with |L(v)| = k are
// enumerated up to color renaming over a k*|V| universe; size-exactly-k
// suffices since supersets only add freedom.
inline ChoosabilityResult is_choosable(const SimpleGraph& g, int k, int d,
                                       std::size_t max_vertices = 9) {
    require(k >= 1, Errc::UnsupportedLength, "k must be >= 1");
    require(g.verts.size() <= max_vertices, Errc::TooLarge,
            "choosability enumeration limited to " + std::to_string(max_vertices) + " vertices");
    ChoosabilityResult res;
    int n = static_cast<int>(g.verts.size());
    std::vector<std::pair<int, int>> sizes(n, {k, k});
    enumerate_canonical_systems(sizes, k * n, [&](const std::vector<std::vector<int>>& sys) {
        ++res.assignments_tested;
        ListAssignment la(g.adj.size());
        for (int i = 0; i < n; ++i) la.set(g.verts[i], sys[i]);
        if (!solve(g, la, d)) {
            res.choosable = false;
            for (int i = 0; i < n; ++i) res.witness[g.verts[i]] = sys[i];
            return false;
        }
        return true;
    });
    return res;
}

}  // namespace plic
