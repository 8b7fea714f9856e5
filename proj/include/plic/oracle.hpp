#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plic/coloring.hpp"
#include "plic/extension.hpp"
#include "plic/reducibility.hpp"

namespace plic {
namespace oracle {

// Exhaustive verification of the extension arguments. Each kind gets a
// minimal template: the deleted set with its internal adjacencies, one ring
// of colored boundary vertices, and a second ring under recolorable
// 3-vertices. Induced lists and boundary colors are enumerated in canonical
// first-use order, so every real boundary condition is covered by exactly
// one enumerated case up to renaming. Filler colors (>= kFiller) realize
// blocked list entries; they are distinct from everything enumerated and
// from each other, hence inert.
//
// Per case: run extend, validate against the boundary rules. If the result
// is invalid, brute-force all assignments of the modifiable vertices to
// separate "the argument is wrong" (no assignment works: counterexample)
// from "the transcription is wrong" (one exists but extend missed it).

constexpr int kFiller = 1000;

struct Instance {
    SimpleGraph g;
    ListAssignment lists;
    Coloring initial;
    Configuration cfg;
    std::vector<char> modifiable;  // by vertex id
    std::vector<int> scratch;      // uncolored at start
};

struct KindReport {
    std::string name;
    long long cases = 0;
    long long counterexamples = 0;
    long long extend_failures = 0;
    std::map<std::string, long long> branches;
    std::string first_failure;

    bool ok() const { return counterexamples == 0 && extend_failures == 0; }
};

// ---------------------------------------------------------------------------
// Template construction.
// ---------------------------------------------------------------------------

class Builder {
public:
    Builder() {
        adj_.reserve(64);
        colors_.reserve(64);
        lists_.reserve(64);
        adj_.emplace_back();  // index 0 unused
        colors_.push_back(0);
        lists_.emplace_back();
    }

    int vertex() {
        int v = next_++;
        adj_.emplace_back();
        colors_.push_back(0);
        lists_.emplace_back();
        return v;
    }
    void edge(int a, int b) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }

    // Colored boundary vertex.
    int ring(int color) {
        int v = vertex();
        colors_[v] = color;
        lists_[v] = {color};
        return v;
    }

    // Scratch vertex whose induced list is exactly `avail`: the list is
    // padded with fillers and each filler is blocked by a fresh ring
    // neighbor. extra_ring more inert ring neighbors realize the stated
    // degree.
    int scratch(std::vector<int> avail, int extra_ring = 0) {
        int v = vertex();
        std::vector<int> list = avail;
        while (list.size() < 3) {
            int f = filler_++;
            list.push_back(f);
            edge(v, ring(f));
        }
        for (int i = 0; i < extra_ring; ++i) edge(v, ring(filler_++));
        lists_[v] = list;
        scratch_.push_back(v);
        return v;
    }

    // Colored vertex with a full (enumerated) 3-color list.
    int colored_listed(std::vector<int> list, int color) {
        int v = vertex();
        colors_[v] = color;
        lists_[v] = std::move(list);
        return v;
    }

    // Scratch vertex carrying an explicitly enumerated full list; blocked
    // entries are realized by the initial colors of named neighbors.
    int scratch_listed(std::vector<int> list) {
        int v = vertex();
        lists_[v] = std::move(list);
        scratch_.push_back(v);
        return v;
    }

    // Recolorable 3-vertex (a light-4 extra): currently colored with an
    // inert placeholder, recolor set exactly `avail`, two second-ring
    // neighbors blocking the rest of its list.
    int recolorable(std::vector<int> avail) {
        int v = vertex();
        std::vector<int> list = avail;
        int blocked = 0;
        while (list.size() < 3) {
            int f = filler_++;
            list.push_back(f);
            edge(v, ring(f));
            ++blocked;
        }
        for (; blocked < 2; ++blocked) edge(v, ring(filler_++));
        lists_[v] = list;
        colors_[v] = filler_++;  // stale placeholder, off-list is fine: it gets recolored
        recolorable_.push_back(v);
        return v;
    }

    Instance finish(Configuration cfg) {
        Instance inst;
        inst.g.adj = std::move(adj_);
        inst.g.verts.reserve(next_ - 1);
        for (int v = 1; v < next_; ++v) inst.g.verts.push_back(v);
        inst.lists = ListAssignment(next_);
        for (int v = 1; v < next_; ++v) inst.lists.set(v, std::move(lists_[v]));
        inst.initial = Coloring(next_);
        for (int v = 1; v < next_; ++v)
            if (colors_[v] != 0) inst.initial.set(v, colors_[v]);
        inst.cfg = std::move(cfg);
        inst.modifiable.assign(next_, 0);
        for (int v : scratch_) inst.modifiable[v] = 1;
        for (int v : recolorable_) inst.modifiable[v] = 1;
        inst.scratch = std::move(scratch_);
        return inst;
    }

    // Initially-colored vertices the argument may recolor (the face
    // vertices of the edge-deletion kinds).
    void allow_recolor(int v) { recolorable_.push_back(v); }

    std::vector<int>& scratch_list() { return scratch_; }
    std::vector<int>& recolorable_list() { return recolorable_; }
    void set_color(int v, int c) { colors_[v] = c; }
    void set_list(int v, std::vector<int> l) { lists_[v] = std::move(l); }

private:
    int next_ = 1;
    int filler_ = kFiller;
    std::vector<std::vector<int>> adj_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> lists_;
    std::vector<int> scratch_;
    std::vector<int> recolorable_;
};

// ---------------------------------------------------------------------------
// Validation against the boundary rules.
// ---------------------------------------------------------------------------

inline int visible_same(const SimpleGraph& g, const Coloring& pi, int v) {
    int c = pi.at(v), n = 0;
    if (c == 0) return 0;
    for (int u : g.adj[v])
        if (pi.at(u) == c) ++n;
    return n;
}

// Modifiable vertices (scratch and recolorable) carry their full
// neighborhood in the template, so their defects are checked outright; a
// recolorable that keeps its initial color needs no list check (the initial
// color stands for an arbitrary validly colored boundary vertex). Fixed
// boundary vertices have unseen outside degree, so they must keep their
// color and must not gain same-colored neighbors.
inline bool validate_instance(const Instance& inst, const Coloring& fin) {
    for (int v : inst.g.verts) {
        int before = inst.initial.at(v);
        if (inst.modifiable[v]) {
            int c = fin.at(v);
            if (c == 0) return false;
            if (c != before && !inst.lists.contains(v, c)) return false;
            if (visible_same(inst.g, fin, v) > 1) return false;
        } else {
            if (fin.at(v) != before) return false;
            if (visible_same(inst.g, fin, v) > visible_same(inst.g, inst.initial, v)) return false;
        }
    }
    return true;
}

// Brute-force existence over every assignment of the modifiable vertices;
// initially-colored ones may also stay put.
inline bool extension_exists(const Instance& inst) {
    std::vector<int> mods;
    std::vector<std::vector<int>> cand;
    for (int v : inst.g.verts)
        if (inst.modifiable[v]) {
            mods.push_back(v);
            std::vector<int> cs = inst.lists.at(v);
            int before = inst.initial.at(v);
            if (before != 0 && std::find(cs.begin(), cs.end(), before) == cs.end())
                cs.push_back(before);
            cand.push_back(std::move(cs));
        }
    Coloring pi = inst.initial;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == mods.size()) return validate_instance(inst, pi);
        for (int c : cand[i]) {
            pi.set(mods[i], c);
            if (go(i + 1)) return true;
        }
        return false;
    };
    return go(0);
}

// ---------------------------------------------------------------------------
// Canonical enumeration helpers. `used` is the size of the canonical color
// universe consumed so far; a slot may reuse any listed prior color or take
// the next fresh one.
// ---------------------------------------------------------------------------

inline std::vector<int> dedup(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <class F>
void for_color(const std::vector<int>& domain, int used, F f) {
    for (int c : dedup(domain)) f(c, used);
    f(used + 1, used + 1);
}

// Canonical sets of size [lo, hi]: any subset of the (deduped) domain plus
// a run of fresh colors.
template <class F>
void for_set(int lo, int hi, const std::vector<int>& domain_in, int used, F f) {
    std::vector<int> domain = dedup(domain_in);
    int n = static_cast<int>(domain.size());
    for (int size = lo; size <= hi; ++size) {
        for (int freshn = 0; freshn <= size; ++freshn) {
            int oldn = size - freshn;
            if (oldn > n) continue;
            std::vector<int> idx(oldn);
            std::function<void(int, int)> pick = [&](int start, int need) {
                if (need == 0) {
                    std::vector<int> set;
                    for (int i : idx) set.push_back(domain[i]);
                    for (int t = 1; t <= freshn; ++t) set.push_back(used + t);
                    f(set, std::max(used, used + freshn));
                    return;
                }
                for (int i = start; i <= n - need; ++i) {
                    idx[oldn - need] = i;
                    pick(i + 1, need - 1);
                }
            };
            pick(0, oldn);
        }
    }
}

// ---------------------------------------------------------------------------
// Per-case driver.
// ---------------------------------------------------------------------------

inline void run_case(const Instance& inst, KindReport& rep) {
    ++rep.cases;
    Coloring pi = inst.initial;
    bool threw = false;
    ExtendTrace trace;
    try {
        trace = extend(inst.g, inst.cfg, pi, inst.lists);
    } catch (const Error&) {
        threw = true;
    }
    if (!threw) {
        if (trace.q_bad_case) ++rep.branches["q_bad_case"];
        if (trace.q_repair_three) ++rep.branches["q_repair_three"];
        if (trace.q_repair_light) ++rep.branches["q_repair_light"];
        if (trace.edge_already_fine) ++rep.branches["edge_already_fine"];
        if (trace.edge_recolored) ++rep.branches["edge_recolored"];
        if (trace.edge_reset_common) ++rep.branches["edge_reset_common"];
        if (trace.soft_swapped) ++rep.branches["soft_swapped"];
        if (trace.soft_both_tight) ++rep.branches["soft_both_tight"];
        if (trace.c2_light_branch) ++rep.branches["c2_light_branch"];
        if (trace.c2_exhausted_list) ++rep.branches["c2_exhausted_list"];
        if (trace.key_early_q) ++rep.branches["key_early_q"];
        if (trace.key_erase_w) ++rep.branches["key_erase_w"];
        if (trace.key_bad_case) ++rep.branches["key_bad_case"];
    }
    if (!threw && validate_instance(inst, pi)) return;
    // The constructive path failed: classify the case.
    if (extension_exists(inst)) {
        ++rep.extend_failures;
        if (rep.first_failure.empty())
            rep.first_failure = "extend missed a valid extension (case " +
                                std::to_string(rep.cases) + ")";
    } else {
        ++rep.counterexamples;
        if (rep.first_failure.empty())
            rep.first_failure = "no extension exists (case " + std::to_string(rep.cases) + ")";
    }
}

}  // namespace oracle
}  // namespace plic
