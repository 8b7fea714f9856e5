#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "plic/coloring.hpp"
#include "plic/error.hpp"
#include "plic/reducibility.hpp"

namespace plic {

// Which repair path an extension took; the lemma oracles use this to show
// every branch of every argument was actually exercised.
struct ExtendTrace {
    bool q_bad_case = false;
    bool q_repair_three = false;
    bool q_repair_light = false;
    bool edge_already_fine = false;  // B2/B3: colors differ or coloring valid as-is
    bool edge_recolored = false;
    bool edge_reset_common = false;       // B2: all three recolors collided
    bool soft_swapped = false;            // SOFT handled from v's side
    bool soft_both_tight = false;
    bool c2_light_branch = false;
    bool c2_exhausted_list = false;       // C2 light branch with empty induced list
    bool key_early_q = false;
    bool key_erase_w = false;
    bool key_bad_case = false;
    std::vector<int> light_repaired;      // light-4 satellites whose x/y were recolored
    int b3_recolored = 0;                 // the off-face neighbor B3 recolored
    std::vector<int> modified;            // every vertex whose color was set or changed
};

namespace ext_detail {

// Working view: the current induced list of v (list minus colors of colored
// neighbors), and first-fit helpers. All deterministic.
class Work {
public:
    Work(const SimpleGraph& g, const ListAssignment& lists, Coloring& pi, ExtendTrace& trace)
        : g_(g), lists_(lists), pi_(pi), trace_(trace) {}

    std::vector<int> avail(int v) const {
        std::vector<int> l = lists_.at(v);
        for (int u : g_.adj[v]) {
            int c = pi_.at(u);
            if (c != 0) std::erase(l, c);
        }
        return l;
    }

    // List minus colors of colored neighbors outside the given set: the
    // induced list in the sense of the deletion arguments.
    std::vector<int> avail_outside(int v, const std::vector<int>& inside) const {
        std::vector<int> l = lists_.at(v);
        for (int u : g_.adj[v]) {
            if (std::find(inside.begin(), inside.end(), u) != inside.end()) continue;
            int c = pi_.at(u);
            if (c != 0) std::erase(l, c);
        }
        return l;
    }

    void set(int v, int c) {
        require(c != 0, Errc::ExtensionFailed, "no color available for " + std::to_string(v));
        require(lists_.contains(v, c), Errc::ExtensionFailed,
                "color off the list at " + std::to_string(v));
        pi_.set(v, c);
        trace_.modified.push_back(v);
    }

    void erase(int v) { pi_.erase(v); }

    int color(int v) const { return pi_.at(v); }

    static int first(const std::vector<int>& l) { return l.empty() ? 0 : l.front(); }

    static int first_excluding(const std::vector<int>& l, const std::vector<int>& excl) {
        for (int c : l)
            if (std::find(excl.begin(), excl.end(), c) == excl.end()) return c;
        return 0;
    }

    // First color of l avoiding excl, preferring also to avoid pref_avoid.
    static int first_excluding_pref(const std::vector<int>& l, const std::vector<int>& excl,
                                    int pref_avoid) {
        for (int c : l)
            if (c != pref_avoid && std::find(excl.begin(), excl.end(), c) == excl.end()) return c;
        return first_excluding(l, excl);
    }

    int count_on(int c, const std::vector<int>& vs) const {
        int n = 0;
        for (int v : vs)
            if (pi_.at(v) == c) ++n;
        return n;
    }

    // Color a partner pair from its current induced lists, properly when
    // possible; equal singletons fall back to the shared color.
    void color_pair(int a, int b) {
        auto la = avail(a), lb = avail(b);
        for (int ca : la)
            for (int cb : lb)
                if (cb != ca) {
                    set(a, ca);
                    set(b, cb);
                    return;
                }
        set(a, first(la));
        set(b, first(lb));
    }

    // Color the satellites of a Q-style gadget: partner pairs jointly,
    // loose satellites first-fit.
    void color_satellites(const std::vector<int>& sats,
                          const std::vector<std::array<int, 2>>& pairs) {
        std::set<int> in_pair;
        for (const auto& p : pairs) {
            color_pair(p[0], p[1]);
            in_pair.insert(p[0]);
            in_pair.insert(p[1]);
        }
        for (int s : sats)
            if (!in_pair.count(s)) set(s, first(avail(s)));
    }

    const SimpleGraph& g_;
    const ListAssignment& lists_;
    Coloring& pi_;
    ExtendTrace& trace_;
};

inline int partner_of(const Configuration& cfg, int v) {
    for (const auto& p : cfg.pairs) {
        if (p[0] == v) return p[1];
        if (p[1] == v) return p[0];
    }
    return 0;
}

// The two-branch repair shared by every Q-style argument: give the center
// the repair satellite's color, then recolor the satellite (directly if it
// is a 3-vertex, through its two 3-neighbors if it is a light 4-vertex).
inline void q_repair(Work& w, int center, const SatInfo& rs, int partner,
                     const std::vector<int>& deleted_set) {
    int c2 = w.color(rs.vertex);
    require(c2 != 0, Errc::ExtensionFailed, "repair satellite uncolored");
    if (rs.type == SatType::ThreeVertex) {
        w.trace_.q_repair_three = true;
        std::vector<int> lp = w.avail_outside(rs.vertex, deleted_set);
        int c = Work::first_excluding_pref(lp, {c2}, partner != 0 ? w.color(partner) : 0);
        w.set(center, c2);
        w.set(rs.vertex, c);
    } else if (rs.type == SatType::LightFour) {
        w.trace_.q_repair_light = true;
        w.trace_.light_repaired.push_back(rs.vertex);
        w.erase(rs.vertex);
        w.set(center, c2);
        w.set(rs.x, Work::first(w.avail(rs.x)));
        w.set(rs.y, Work::first(w.avail(rs.y)));
        int pcol = partner != 0 ? w.color(partner) : 0;
        int xcol = w.color(rs.x), ycol = w.color(rs.y);
        if (pcol != xcol && pcol != ycol)
            w.set(rs.vertex, Work::first_excluding(w.lists_.at(rs.vertex), {c2, xcol}));
        else
            w.set(rs.vertex, Work::first_excluding(w.lists_.at(rs.vertex), {c2, pcol}));
    } else {
        fail(Errc::ExtensionFailed, "repair satellite is not an S-vertex");
    }
}

// Extension of a coloring across the Q gadget: center plus satellites, with
// a designated repairable S-satellite. base_center is the center's induced
// list against the outside only.
inline void q_extend(Work& w, int center, const std::vector<int>& sats,
                     const std::vector<std::array<int, 2>>& pairs, const SatInfo& repair,
                     int repair_partner) {
    std::vector<int> deleted = sats;
    deleted.push_back(center);
    std::vector<int> base_center = w.avail_outside(center, deleted);
    w.color_satellites(sats, pairs);
    for (int c : base_center)
        if (w.count_on(c, sats) <= 1) {
            w.set(center, c);
            return;
        }
    w.trace_.q_bad_case = true;
    q_repair(w, center, repair, repair_partner, deleted);
}

}  // namespace ext_detail

// Carry a valid coloring of the reduced graph across one configuration,
// following its lemma's constructive argument. pi enters as the coloring of
// the reduced graph (for edge deletions: of the whole vertex set) and
// leaves as a total coloring of g. No validity check happens here; wrap
// with extend_checked for the always-revalidated form.
inline ExtendTrace extend(const SimpleGraph& g, const Configuration& cfg, Coloring& pi,
                          const ListAssignment& lists) {
    ExtendTrace trace;
    ext_detail::Work w(g, lists, pi, trace);
    using W = ext_detail::Work;
    const auto& V = cfg.verts;

    switch (cfg.kind) {
        case ConfigKind::A1_smallDegree: {
            w.set(V[0], W::first(w.avail(V[0])));
            break;
        }
        case ConfigKind::A2_adjacent3s: {
            auto lu = w.avail(V[0]), lv = w.avail(V[1]);
            int cu = 0, cv = 0;
            for (int a : lu) {
                for (int b : lv)
                    if (b != a) {
                        cu = a;
                        cv = b;
                        break;
                    }
                if (cu) break;
            }
            if (!cu && !lu.empty() && !lv.empty()) {
                cu = lu.front();
                cv = lv.front();  // the shared single color: defect one on each side
            }
            w.set(V[0], cu);
            w.set(V[1], cv);
            break;
        }
        case ConfigKind::A3_face344: {
            int x = V[0], y = V[1], z = V[2];
            std::vector<int> base_x = w.avail(x), base_y = w.avail(y), base_z = w.avail(z);
            int a = W::first(base_y);
            int b = W::first(base_z);
            w.set(y, a);
            w.set(z, b);
            int c = W::first_excluding(base_x, {a, b});
            if (c == 0) c = a == b ? W::first_excluding(base_x, {a}) : a;
            w.set(x, c);
            break;
        }
        case ConfigKind::B1_fourVertexThree3s: {
            int v = V[0];
            std::vector<int> sats(V.begin() + 1, V.end());
            std::vector<int> base_v = w.avail(v);
            for (int s : sats) w.set(s, W::first(w.avail(s)));
            int chosen = 0;
            for (int c : base_v)
                if (w.count_on(c, sats) <= 1) {
                    chosen = c;
                    break;
                }
            w.set(v, chosen);
            break;
        }
        case ConfigKind::B2_face444: {
            int v1 = cfg.delete_edge[0], v2 = cfg.delete_edge[1];
            int v3 = 0;
            for (int t : V)
                if (t != v1 && t != v2) v3 = t;
            if (pi.at(v1) != pi.at(v2) || check(g, &lists, pi, 1).ok) {
                trace.edge_already_fine = true;
                break;
            }
            trace.edge_recolored = true;
            int common = pi.at(v1);
            auto offface = [&](int t) {
                std::vector<int> o;
                for (int u : g.adj[t])
                    if (u != v1 && u != v2 && u != v3) o.push_back(u);
                return o;
            };
            int fresh[3];
            int idx = 0;
            for (int t : {v1, v2, v3}) {
                std::vector<int> excl;
                for (int u : offface(t)) excl.push_back(pi.at(u));
                fresh[idx++] = W::first_excluding(lists.at(t), excl);
            }
            w.set(v1, fresh[0]);
            w.set(v2, fresh[1]);
            w.set(v3, fresh[2]);
            if (fresh[0] == fresh[1] && fresh[1] == fresh[2]) {
                trace.edge_reset_common = true;
                w.set(v1, common);
            }
            break;
        }
        case ConfigKind::B3_lightLightFace: {
            int v1 = V[0], v2 = cfg.delete_edge[0], v3 = cfg.delete_edge[1];
            if (pi.at(v2) != pi.at(v3) || check(g, &lists, pi, 1).ok) {
                trace.edge_already_fine = true;
                break;
            }
            trace.edge_recolored = true;
            int common = pi.at(v2);
            auto offface = [&](int t) {
                std::vector<int> o;
                for (int u : g.adj[t])
                    if (u != v1 && u != v2 && u != v3) o.push_back(u);
                return o;
            };
            // The side whose outside neighbor repeats the common color.
            int side = 0, conflict = 0, other = 0;
            for (int t : {v2, v3}) {
                for (int u : offface(t))
                    if (pi.at(u) == common && side == 0) {
                        side = t;
                        conflict = u;
                    }
            }
            require(side != 0, Errc::ExtensionFailed, "no conflicting neighbor found");
            for (int u : offface(side))
                if (u != conflict) other = u;
            require(other != 0, Errc::ExtensionFailed, "light 4-vertex lost a neighbor");
            trace.b3_recolored = other;
            w.erase(side);
            int a = W::first(w.avail(other));
            w.set(other, a);
            std::vector<int> avoid = {common, pi.at(v1), a};
            std::set<int> avoid_set(avoid.begin(), avoid.end());
            std::set<int> lset(lists.at(side).begin(), lists.at(side).end());
            if (lset != avoid_set) {
                w.set(side, W::first_excluding(lists.at(side), avoid));
            } else {
                w.set(side, a);
            }
            break;
        }
        case ConfigKind::B4_fiveVertex: {
            std::vector<int> sats(V.begin() + 1, V.end());
            ext_detail::q_extend(w, V[0], sats, cfg.pairs, cfg.sats.at(0),
                                 ext_detail::partner_of(cfg, cfg.sats.at(0).vertex));
            break;
        }
        case ConfigKind::B5_sixVertex: {
            std::vector<int> sats(V.begin() + 1, V.end());
            ext_detail::q_extend(w, V[0], sats, cfg.pairs, cfg.sats.at(0),
                                 ext_detail::partner_of(cfg, cfg.sats.at(0).vertex));
            break;
        }
        case ConfigKind::F1_34m4face: {
            int u = V[0], v = V[1], x = V[2], y = V[3];
            std::vector<int> base_u = w.avail(u), base_x = w.avail(x);
            int a = W::first(w.avail(v));
            w.set(v, a);
            int b = W::first(w.avail(y));
            w.set(y, b);
            w.set(u, W::first_excluding(base_u, {a}));
            w.set(x, W::first_excluding(base_x, {b}));
            break;
        }
        case ConfigKind::F2_softOpposite: {
            int u = V[0], v = V[1], x = V[2], y = V[3], x1 = V[4], x2 = V[5];
            std::vector<int> base_u = w.avail(u);
            for (int t : {v, y, x1, x2}) w.set(t, W::first(w.avail(t)));
            w.set(u, W::first_excluding(base_u, {pi.at(v)}));
            if (pi.at(x1) == pi.at(v) || pi.at(x2) == pi.at(v))
                w.set(x, W::first_excluding(lists.at(x), {pi.at(v), pi.at(y)}));
            else
                w.set(x, W::first_excluding(lists.at(x), {pi.at(x1), pi.at(y)}));
            break;
        }
        case ConfigKind::SOFT_adjacentSoft: {
            int u = V[0], v = V[1], x = V[2], y = V[3];
            int u1 = V[4], u2 = V[5], v1 = V[6], v2 = V[7];
            for (int t : {u1, u2, v1, v2}) w.set(t, W::first(w.avail(t)));
            auto tight = [&](int a, int fx, int s1, int s2) {
                std::set<int> l(lists.at(a).begin(), lists.at(a).end());
                std::set<int> forb{pi.at(fx), pi.at(s1), pi.at(s2)};
                return l == forb;
            };
            auto finish = [&](int a, int fa, int a1, int a2, int b, int fb) {
                // Color a properly, then b with a color off pi(fb) used at
                // most once among {a, b1, b2}.
                w.set(a, W::first_excluding(lists.at(a), {pi.at(fa), pi.at(a1), pi.at(a2)}));
                int b1 = a == u ? v1 : u1, b2 = a == u ? v2 : u2;
                int chosen = 0;
                for (int c : lists.at(b)) {
                    if (c == pi.at(fb)) continue;
                    if (w.count_on(c, {a, b1, b2}) <= 1) {
                        chosen = c;
                        break;
                    }
                }
                w.set(b, chosen);
            };
            if (!tight(u, x, u1, u2)) {
                finish(u, x, u1, u2, v, y);
            } else if (!tight(v, y, v1, v2)) {
                trace.soft_swapped = true;
                finish(v, y, v1, v2, u, x);
            } else {
                trace.soft_both_tight = true;
                w.set(u, pi.at(u1));
                w.set(v, W::first_excluding(lists.at(v), {pi.at(u1), pi.at(y)}));
            }
            break;
        }
        case ConfigKind::C1: {
            int v = V[0];
            std::vector<int> sats(V.begin() + 1, V.end());
            std::vector<int> base_v = w.avail(v);
            w.color_satellites(sats, cfg.pairs);
            int chosen = 0;
            for (int c : base_v)
                if (w.count_on(c, sats) <= 1) {
                    chosen = c;
                    break;
                }
            w.set(v, chosen);
            break;
        }
        case ConfigKind::C2: {
            int v = V[0], s1 = V[1], q1 = V[2], s3 = V[3], v4 = V[4], v5 = V[5];
            const SatInfo& i1 = cfg.sats.at(0);
            const SatInfo& i3 = cfg.sats.at(1);
            std::vector<int> qsats{s1, q1, s3, v5};
            if (i3.type == SatType::ThreeVertex) {
                ext_detail::q_extend(w, v, qsats, cfg.pairs, i1, q1);
            } else {
                trace.c2_light_branch = true;
                w.set(i3.x, W::first(w.avail(i3.x)));
                w.set(i3.y, W::first(w.avail(i3.y)));
                if (!w.avail(s3).empty()) {
                    ext_detail::q_extend(w, v, qsats, cfg.pairs, i1, q1);
                } else {
                    trace.c2_exhausted_list = true;
                    w.color_pair(s1, q1);
                    w.set(v5, W::first(w.avail(v5)));
                    int a = 0;
                    for (int c : lists.at(v)) {
                        if (c == pi.at(v4)) continue;
                        if (w.count_on(c, {s1, q1, v5}) <= 1) {
                            a = c;
                            break;
                        }
                    }
                    w.set(v, a);
                    int c3 = pi.at(i3.x) != a ? pi.at(i3.x) : pi.at(i3.y);
                    w.set(s3, c3);
                }
            }
            break;
        }
        case ConfigKind::C3: {
            std::vector<int> sats(V.begin() + 1, V.end());
            ext_detail::q_extend(w, V[0], sats, cfg.pairs, cfg.sats.at(0),
                                 ext_detail::partner_of(cfg, cfg.sats.at(0).vertex));
            break;
        }
        case ConfigKind::KEY_twoBad5s: {
            int u = V[0], v = V[1], wv = V[2];
            int s_v = V[3], q_v = V[4], v3 = V[5];
            int s_w = V[6], q_w = V[7], w3 = V[8];
            const SatInfo& iv = cfg.sats.at(0);
            const SatInfo& iw = cfg.sats.at(1);
            w.color_pair(s_w, q_w);
            w.set(w3, W::first(w.avail(w3)));
            if (!w.avail(wv).empty()) {
                trace.key_early_q = true;
                ext_detail::q_extend(w, v, {s_v, q_v, v3, wv}, {{{s_v, q_v}}}, iv, q_v);
                break;
            }
            // a: a color of L(w) off pi(u) carried by exactly one w-satellite.
            int a = 0;
            for (int c : lists.at(wv)) {
                if (c == pi.at(u)) continue;
                if (w.count_on(c, {s_w, q_w, w3}) == 1) {
                    a = c;
                    break;
                }
            }
            require(a != 0, Errc::ExtensionFailed, "no single-use color for the second bad vertex");
            w.set(wv, a);
            w.color_pair(s_v, q_v);
            w.set(v3, W::first(w.avail(v3)));
            std::vector<int> vstar{s_v, q_v, v3, wv};
            int b = 0;
            for (int c : lists.at(v)) {
                if (c == pi.at(u)) continue;
                if (w.count_on(c, vstar) <= 1) {
                    b = c;
                    break;
                }
            }
            if (b != 0) {
                if (b != a) {
                    w.set(v, b);
                } else {
                    trace.key_erase_w = true;
                    w.erase(wv);
                    w.erase(s_w);
                    w.erase(q_w);
                    w.erase(w3);
                    ext_detail::q_extend(w, wv, {v, s_w, q_w, w3}, {{{s_w, q_w}}}, iw, q_w);
                }
            } else {
                trace.key_bad_case = true;
                ext_detail::q_repair(w, v, iv, q_v, cfg.delete_verts);
                if (w.color(v) == a) {
                    // v ended on the second bad vertex's color: re-extend
                    // around that vertex instead.
                    trace.key_erase_w = true;
                    w.erase(v);
                    w.erase(wv);
                    w.erase(s_w);
                    w.erase(q_w);
                    w.erase(w3);
                    ext_detail::q_extend(w, wv, {v, s_w, q_w, w3}, {{{s_w, q_w}}}, iw, q_w);
                }
            }
            break;
        }
        case ConfigKind::Q_lemma2: {
            std::vector<int> sats(V.begin() + 1, V.end());
            ext_detail::q_extend(w, V[0], sats, cfg.pairs, cfg.sats.at(0),
                                 ext_detail::partner_of(cfg, cfg.sats.at(0).vertex));
            break;
        }
    }
    return trace;
}

// The always-revalidated form used on real graphs: any invalid result is an
// implementation bug and is surfaced loudly.
inline ExtendTrace extend_checked(const PlaneGraph& g, const Configuration& cfg, Coloring& pi,
                                  const ListAssignment& lists) {
    SimpleGraph sg = g.simple_graph();
    ExtendTrace trace = extend(sg, cfg, pi, lists);
    auto res = check(sg, &lists, pi, 1);
    require(res.ok, Errc::ExtensionFailed, "extension produced an invalid coloring for " + cfg.str());
    return trace;
}

}  // namespace plic
