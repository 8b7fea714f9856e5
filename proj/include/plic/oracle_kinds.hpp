#pragma once

#include "plic/oracle.hpp"

namespace plic {
namespace oracle {

// One verifier per configuration kind. Slot domains list exactly the prior
// colors an entry is ever compared against; everything else collapses to a
// fresh representative, which keeps the enumerations small without losing
// equality patterns.

inline KindReport verify_A1() {
    KindReport rep{"A1"};
    for_set(1, 3, {}, 0, [&](const std::vector<int>& A, int) {
        Builder b;
        int v = b.scratch(A, static_cast<int>(A.size()) - 1);
        Configuration c;
        c.kind = ConfigKind::A1_smallDegree;
        c.verts = {v};
        c.delete_verts = {v};
        run_case(b.finish(std::move(c)), rep);
    });
    return rep;
}

inline KindReport verify_A2() {
    KindReport rep{"A2"};
    for_set(1, 3, {}, 0, [&](const std::vector<int>& Au, int u1) {
        for_set(1, 3, Au, u1, [&](const std::vector<int>& Av, int) {
            Builder b;
            int u = b.scratch(Au, static_cast<int>(Au.size()) - 1);
            int v = b.scratch(Av, static_cast<int>(Av.size()) - 1);
            b.edge(u, v);
            Configuration c;
            c.kind = ConfigKind::A2_adjacent3s;
            c.verts = {u, v};
            c.delete_verts = {u, v};
            run_case(b.finish(std::move(c)), rep);
        });
    });
    return rep;
}

inline KindReport verify_A3() {
    KindReport rep{"A3"};
    for_set(2, 3, {}, 0, [&](const std::vector<int>& Ax, int u1) {
        for_color(Ax, u1, [&](int cy, int u2) {
            std::vector<int> d2 = Ax;
            d2.push_back(cy);
            for_color(d2, u2, [&](int cz, int) {
                Builder b;
                int x = b.scratch(Ax, static_cast<int>(Ax.size()) - 2);
                int y = b.scratch({cy}, 0);
                int z = b.scratch({cz}, 0);
                b.edge(x, y);
                b.edge(y, z);
                b.edge(z, x);
                Configuration c;
                c.kind = ConfigKind::A3_face344;
                c.verts = {x, y, z};
                c.delete_verts = {x, y, z};
                run_case(b.finish(std::move(c)), rep);
            });
        });
    });
    return rep;
}

inline KindReport verify_B1() {
    KindReport rep{"B1"};
    for_set(2, 3, {}, 0, [&](const std::vector<int>& Av, int u1) {
        for_color(Av, u1, [&](int c1, int u2) {
            std::vector<int> d2 = Av;
            d2.push_back(c1);
            for_color(d2, u2, [&](int c2, int u3) {
                std::vector<int> d3 = d2;
                d3.push_back(c2);
                for_color(d3, u3, [&](int c3, int) {
                    Builder b;
                    int v = b.scratch(Av, static_cast<int>(Av.size()) - 2);
                    int t1 = b.scratch({c1}, 0);
                    int t2 = b.scratch({c2}, 0);
                    int t3 = b.scratch({c3}, 0);
                    for (int t : {t1, t2, t3}) b.edge(v, t);
                    Configuration c;
                    c.kind = ConfigKind::B1_fourVertexThree3s;
                    c.verts = {v, t1, t2, t3};
                    c.delete_verts = c.verts;
                    run_case(b.finish(std::move(c)), rep);
                });
            });
        });
    });
    return rep;
}

// Shared Q-gadget enumeration; also drives B4 and C3 with their own kind
// tags and role layouts.
inline void q_cases(KindReport& rep, ConfigKind kind, bool second_pair, SatType s1type) {
    auto build = [&](const std::vector<int>& Av, const std::vector<int>& Ls1,
                     const std::vector<int>& As1, int cs2, int c3, int c4, int ax, int ay) {
        Builder b;
        int v = b.scratch(Av, static_cast<int>(Av.size()) - 2);
        int s1 = 0, x1 = 0, y1 = 0;
        if (s1type == SatType::ThreeVertex) {
            s1 = b.scratch(As1, static_cast<int>(As1.size()) - 2);
        } else {
            s1 = b.scratch_listed(Ls1);
            x1 = b.recolorable({ax});
            y1 = b.recolorable({ay});
            b.edge(s1, x1);
            b.edge(s1, y1);
            // Initial colors of x1, y1 realize the blocked part of L(s1).
            std::vector<int> blocked;
            for (int c : Ls1)
                if (std::find(As1.begin(), As1.end(), c) == As1.end()) blocked.push_back(c);
            if (blocked.size() > 0) b.set_color(x1, blocked[0]);
            if (blocked.size() > 1) b.set_color(y1, blocked[1]);
        }
        int s2 = b.scratch({cs2}, 0);
        int t3 = b.scratch({c3}, 0);
        int t4 = b.scratch({c4}, 0);
        b.edge(v, s1);
        b.edge(v, s2);
        b.edge(v, t3);
        b.edge(v, t4);
        b.edge(s1, s2);
        if (second_pair) b.edge(t3, t4);
        Configuration c;
        c.kind = kind;
        c.verts = {v, s1, s2, t3, t4};
        c.delete_verts = c.verts;
        c.pairs = {{s1, s2}};
        if (second_pair) c.pairs.push_back({t3, t4});
        SatInfo si;
        si.vertex = s1;
        si.type = s1type;
        si.x = x1;
        si.y = y1;
        c.sats = {si};
        run_case(b.finish(std::move(c)), rep);
    };

    for_set(2, 3, {}, 0, [&](const std::vector<int>& Av, int u1) {
        auto with_s1 = [&](const std::vector<int>& Ls1, const std::vector<int>& As1, int u2,
                           const std::vector<int>& s1colors) {
            std::vector<int> d = Av;
            d.insert(d.end(), s1colors.begin(), s1colors.end());
            for_color(d, u2, [&](int cs2, int u3) {
                for_color(Av, u3, [&](int c3, int u4) {
                    std::vector<int> d4 = Av;
                    d4.push_back(c3);
                    for_color(d4, u4, [&](int c4, int u5) {
                        if (s1type == SatType::ThreeVertex) {
                            build(Av, {}, As1, cs2, c3, c4, 0, 0);
                        } else {
                            std::vector<int> dx = Ls1;
                            dx.push_back(cs2);
                            for_color(dx, u5, [&](int ax, int u6) {
                                std::vector<int> dy = dx;
                                dy.push_back(ax);
                                for_color(dy, u6, [&](int ay, int) {
                                    build(Av, Ls1, As1, cs2, c3, c4, ax, ay);
                                });
                            });
                        }
                    });
                });
            });
        };
        if (s1type == SatType::ThreeVertex) {
            for_set(2, 3, Av, u1, [&](const std::vector<int>& As1, int u2) {
                with_s1({}, As1, u2, As1);
            });
        } else {
            for_set(3, 3, Av, u1, [&](const std::vector<int>& Ls1, int u2) {
                for (int cs1 : Ls1) with_s1(Ls1, {cs1}, u2, Ls1);
            });
        }
    });
}

inline KindReport verify_Q() {
    KindReport rep{"Q"};
    for (bool second_pair : {false, true})
        for (SatType t : {SatType::ThreeVertex, SatType::LightFour})
            q_cases(rep, ConfigKind::Q_lemma2, second_pair, t);
    return rep;
}

inline KindReport verify_B4() {
    KindReport rep{"B4"};
    for (SatType t : {SatType::ThreeVertex, SatType::LightFour})
        q_cases(rep, ConfigKind::B4_fiveVertex, false, t);
    return rep;
}

inline KindReport verify_C3() {
    KindReport rep{"C3"};
    for (SatType t : {SatType::ThreeVertex, SatType::LightFour})
        q_cases(rep, ConfigKind::C3, true, t);
    return rep;
}

inline KindReport verify_B5() {
    KindReport rep{"B5"};
    std::vector<int> Lv{1, 2, 3};
    for (SatType t : {SatType::ThreeVertex, SatType::LightFour}) {
        // Forced colors for the two low pairs.
        for_color(Lv, 3, [&](int c1, int u1) {
            std::vector<int> d1 = Lv;
            d1.push_back(c1);
            for_color(d1, u1, [&](int c2, int u2) {
                std::vector<int> d2 = d1;
                d2.push_back(c2);
                for_color(d2, u2, [&](int c3, int u3) {
                    std::vector<int> d3 = d2;
                    d3.push_back(c3);
                    for_color(d3, u3, [&](int c4, int u4) {
                        auto finish = [&](const std::vector<int>& Ls5,
                                          const std::vector<int>& As5, int cq, int ax, int ay) {
                            Builder b;
                            int v = b.scratch_listed(Lv);
                            int v1 = b.scratch({c1}, 0), v2 = b.scratch({c2}, 0);
                            int v3 = b.scratch({c3}, 0), v4 = b.scratch({c4}, 0);
                            int s5 = 0, x5 = 0, y5 = 0;
                            if (t == SatType::ThreeVertex) {
                                s5 = b.scratch(As5, static_cast<int>(As5.size()) - 2);
                            } else {
                                s5 = b.scratch_listed(Ls5);
                                x5 = b.recolorable({ax});
                                y5 = b.recolorable({ay});
                                b.edge(s5, x5);
                                b.edge(s5, y5);
                                std::vector<int> blocked;
                                for (int c : Ls5)
                                    if (std::find(As5.begin(), As5.end(), c) == As5.end())
                                        blocked.push_back(c);
                                if (blocked.size() > 0) b.set_color(x5, blocked[0]);
                                if (blocked.size() > 1) b.set_color(y5, blocked[1]);
                            }
                            int q6 = b.scratch({cq}, 0);
                            for (int s : {v1, v2, v3, v4, s5, q6}) b.edge(v, s);
                            b.edge(v1, v2);
                            b.edge(v3, v4);
                            b.edge(s5, q6);
                            Configuration c;
                            c.kind = ConfigKind::B5_sixVertex;
                            c.verts = {v, v1, v2, v3, v4, s5, q6};
                            c.delete_verts = c.verts;
                            c.pairs = {{v1, v2}, {v3, v4}, {s5, q6}};
                            SatInfo si;
                            si.vertex = s5;
                            si.type = t;
                            si.x = x5;
                            si.y = y5;
                            c.sats = {si};
                            run_case(b.finish(std::move(c)), rep);
                        };
                        if (t == SatType::ThreeVertex) {
                            for_set(2, 3, Lv, u4, [&](const std::vector<int>& As5, int u5) {
                                std::vector<int> dq = Lv;
                                dq.insert(dq.end(), As5.begin(), As5.end());
                                for_color(dq, u5, [&](int cq, int) {
                                    finish({}, As5, cq, 0, 0);
                                });
                            });
                        } else {
                            for_set(3, 3, Lv, u4, [&](const std::vector<int>& Ls5, int u5) {
                                for (int cs5 : Ls5) {
                                    std::vector<int> dq = Lv;
                                    dq.insert(dq.end(), Ls5.begin(), Ls5.end());
                                    for_color(dq, u5, [&](int cq, int u6) {
                                        std::vector<int> dx = Ls5;
                                        dx.push_back(cq);
                                        for_color(dx, u6, [&](int ax, int u7) {
                                            std::vector<int> dy = dx;
                                            dy.push_back(ax);
                                            for_color(dy, u7, [&](int ay, int) {
                                                finish(Ls5, {cs5}, cq, ax, ay);
                                            });
                                        });
                                    });
                                }
                            });
                        }
                    });
                });
            });
        });
    }
    return rep;
}

inline KindReport verify_F1() {
    KindReport rep{"F1"};
    for_set(2, 3, {}, 0, [&](const std::vector<int>& Au, int u1) {
        for_set(2, 3, Au, u1, [&](const std::vector<int>& Ax, int u2) {
            std::vector<int> d = Au;
            d.insert(d.end(), Ax.begin(), Ax.end());
            for_color(d, u2, [&](int cv, int u3) {
                std::vector<int> d2 = d;
                d2.push_back(cv);
                for_color(d2, u3, [&](int cy, int) {
                    Builder b;
                    int u = b.scratch(Au, static_cast<int>(Au.size()) - 2);
                    int v = b.scratch({cv}, 0);
                    int x = b.scratch(Ax, static_cast<int>(Ax.size()) - 2);
                    int y = b.scratch({cy}, 0);
                    b.edge(u, v);
                    b.edge(v, x);
                    b.edge(x, y);
                    b.edge(y, u);
                    Configuration c;
                    c.kind = ConfigKind::F1_34m4face;
                    c.verts = {u, v, x, y};
                    c.delete_verts = c.verts;
                    run_case(b.finish(std::move(c)), rep);
                });
            });
        });
    });
    return rep;
}

inline KindReport verify_F2() {
    KindReport rep{"F2"};
    for_set(2, 3, {}, 0, [&](const std::vector<int>& Au, int u1) {
        for_set(3, 3, Au, u1, [&](const std::vector<int>& Lx, int u2) {
            std::vector<int> d = Au;
            d.insert(d.end(), Lx.begin(), Lx.end());
            for_color(d, u2, [&](int cv, int u3) {
                std::vector<int> d2 = d;
                d2.push_back(cv);
                for_color(d2, u3, [&](int cy, int u4) {
                    std::vector<int> dx1 = Lx;
                    dx1.push_back(cv);
                    for_color(dx1, u4, [&](int cx1, int u5) {
                        std::vector<int> dx2 = dx1;
                        dx2.push_back(cx1);
                        for_color(dx2, u5, [&](int cx2, int) {
                            Builder b;
                            int u = b.scratch(Au, static_cast<int>(Au.size()) - 2);
                            int v = b.scratch({cv}, 0);
                            int x = b.scratch_listed(Lx);
                            int y = b.scratch({cy}, 0);
                            int x1 = b.scratch({cx1}, 0);
                            int x2 = b.scratch({cx2}, 0);
                            b.edge(u, v);
                            b.edge(v, x);
                            b.edge(x, y);
                            b.edge(y, u);
                            b.edge(x, x1);
                            b.edge(x, x2);
                            Configuration c;
                            c.kind = ConfigKind::F2_softOpposite;
                            c.verts = {u, v, x, y, x1, x2};
                            c.delete_verts = c.verts;
                            run_case(b.finish(std::move(c)), rep);
                        });
                    });
                });
            });
        });
    });
    return rep;
}

inline KindReport verify_SOFT() {
    KindReport rep{"SOFT"};
    std::vector<int> Lu{1, 2, 3};
    for_set(3, 3, Lu, 3, [&](const std::vector<int>& Lv, int u1) {
        for_color(Lu, u1, [&](int px, int u2) {
            std::vector<int> dy = Lv;
            dy.push_back(px);
            for_color(dy, u2, [&](int py, int u3) {
                for_color(Lu, u3, [&](int cu1, int u4) {
                    std::vector<int> du2 = Lu;
                    du2.push_back(cu1);
                    for_color(du2, u4, [&](int cu2, int u5) {
                        for_color(Lv, u5, [&](int cv1, int u6) {
                            std::vector<int> dv2 = Lv;
                            dv2.push_back(cv1);
                            for_color(dv2, u6, [&](int cv2, int) {
                                Builder b;
                                int u = b.scratch_listed(Lu);
                                int v = b.scratch_listed(Lv);
                                int x = b.ring(px);
                                int y = b.ring(py);
                                int u1v = b.scratch({cu1}, 0);
                                int u2v = b.scratch({cu2}, 0);
                                int v1v = b.scratch({cv1}, 0);
                                int v2v = b.scratch({cv2}, 0);
                                b.edge(u, v);
                                b.edge(u, x);
                                b.edge(x, y);
                                b.edge(y, v);
                                b.edge(u, u1v);
                                b.edge(u, u2v);
                                b.edge(v, v1v);
                                b.edge(v, v2v);
                                Configuration c;
                                c.kind = ConfigKind::SOFT_adjacentSoft;
                                c.verts = {u, v, x, y, u1v, u2v, v1v, v2v};
                                c.delete_verts = {u, v, u1v, u2v, v1v, v2v};
                                run_case(b.finish(std::move(c)), rep);
                            });
                        });
                    });
                });
            });
        });
    });
    return rep;
}

// C2 in its four satellite-type combinations. The light-4 extras on the
// first face are enumerated lazily: a probe with inert recolor sets runs
// first, and only the cases that actually reach the light repair re-run
// over the real recolor-set values.
inline KindReport verify_C2() {
    KindReport rep{"C2"};
    std::vector<int> Lv{1, 2, 3};
    for (SatType t1 : {SatType::ThreeVertex, SatType::LightFour})
        for (SatType t3 : {SatType::ThreeVertex, SatType::LightFour}) {
            struct Outer {
                std::vector<int> As1, Ls1, Ls3;
                int cs1 = 0, cq1 = 0, cs3 = 0, pv4 = 0, cv5 = 0;
                int ax3 = 0, ay3 = 0;
                int used = 0;
            };
            auto build = [&](const Outer& o, int ax1, int ay1) {
                Builder b;
                int v = b.scratch_listed(Lv);
                int s1 = 0, x1 = 0, y1 = 0;
                SatInfo i1;
                if (t1 == SatType::ThreeVertex) {
                    s1 = b.scratch(o.As1, static_cast<int>(o.As1.size()) - 2);
                } else {
                    s1 = b.scratch_listed(o.Ls1);
                    x1 = b.recolorable({ax1});
                    y1 = b.recolorable({ay1});
                    b.edge(s1, x1);
                    b.edge(s1, y1);
                    std::vector<int> blocked;
                    for (int c : o.Ls1)
                        if (c != o.cs1) blocked.push_back(c);
                    if (blocked.size() > 0) b.set_color(x1, blocked[0]);
                    if (blocked.size() > 1) b.set_color(y1, blocked[1]);
                }
                i1.vertex = s1;
                i1.type = t1;
                i1.x = x1;
                i1.y = y1;
                int q1 = b.scratch({o.cq1}, 0);
                int v4 = b.ring(o.pv4);
                int s3 = 0, x3 = 0, y3 = 0;
                SatInfo i3;
                if (t3 == SatType::ThreeVertex) {
                    s3 = b.scratch({o.cs3}, 0);
                } else {
                    s3 = b.scratch_listed(o.Ls3);
                    x3 = b.recolorable({o.ax3});
                    y3 = b.recolorable({o.ay3});
                    b.edge(s3, x3);
                    b.edge(s3, y3);
                }
                i3.vertex = s3;
                i3.type = t3;
                i3.x = x3;
                i3.y = y3;
                int v5 = b.scratch({o.cv5}, 0);
                b.edge(v, s1);
                b.edge(v, q1);
                b.edge(v, s3);
                b.edge(v, v4);
                b.edge(v, v5);
                b.edge(s1, q1);
                b.edge(s3, v4);
                Configuration c;
                c.kind = ConfigKind::C2;
                c.verts = {v, s1, q1, s3, v4, v5};
                c.delete_verts = {v, s1, q1, s3, v5};
                c.pairs = {{s1, q1}};
                c.sats = {i1, i3};
                return b.finish(std::move(c));
            };
            auto run_lazy = [&](const Outer& o) {
                if (t1 != SatType::LightFour) {
                    run_case(build(o, 0, 0), rep);
                    return;
                }
                Instance probe = build(o, o.used + 1, o.used + 2);
                Coloring pi = probe.initial;
                ExtendTrace tr;
                bool threw = false;
                try {
                    tr = extend(probe.g, probe.cfg, pi, probe.lists);
                } catch (const Error&) {
                    threw = true;
                }
                bool reads_xy = threw || tr.q_repair_light;
                if (!reads_xy) {
                    run_case(probe, rep);
                    return;
                }
                std::vector<int> dx = o.Ls1;
                dx.push_back(o.cq1);
                for_color(dx, o.used, [&](int ax, int u2) {
                    std::vector<int> dy = dx;
                    dy.push_back(ax);
                    for_color(dy, u2, [&](int ay, int) { run_case(build(o, ax, ay), rep); });
                });
            };

            auto with_s3 = [&](Outer o) {
                // v4's color, then v5; v4 must differ from a 3-vertex s3's
                // forced color (it is excluded by the induced list).
                std::vector<int> dv4 = Lv;
                if (t3 == SatType::ThreeVertex)
                    dv4.push_back(o.cs3);
                else
                    dv4.insert(dv4.end(), o.Ls3.begin(), o.Ls3.end());
                for_color(dv4, o.used, [&](int pv4, int u5) {
                    if (t3 == SatType::ThreeVertex && pv4 == o.cs3) return;
                    for_color(Lv, u5, [&](int cv5, int u6) {
                        Outer o2 = o;
                        o2.pv4 = pv4;
                        o2.cv5 = cv5;
                        o2.used = u6;
                        if (t3 != SatType::LightFour) {
                            run_lazy(o2);
                            return;
                        }
                        std::vector<int> dx3 = o.Ls3;
                        dx3.insert(dx3.end(), Lv.begin(), Lv.end());
                        dx3.push_back(pv4);
                        for_color(dx3, u6, [&](int ax3, int u7) {
                            std::vector<int> dy3 = dx3;
                            dy3.push_back(ax3);
                            for_color(dy3, u7, [&](int ay3, int u8) {
                                Outer o3 = o2;
                                o3.ax3 = ax3;
                                o3.ay3 = ay3;
                                o3.used = u8;
                                run_lazy(o3);
                            });
                        });
                    });
                });
            };

            auto with_q1 = [&](Outer o, const std::vector<int>& s1colors) {
                std::vector<int> dq = Lv;
                dq.insert(dq.end(), s1colors.begin(), s1colors.end());
                for_color(dq, o.used, [&](int cq1, int u3) {
                    Outer o2 = o;
                    o2.cq1 = cq1;
                    o2.used = u3;
                    if (t3 == SatType::ThreeVertex) {
                        for_color(Lv, u3, [&](int cs3, int u4) {
                            Outer o3 = o2;
                            o3.cs3 = cs3;
                            o3.used = u4;
                            with_s3(o3);
                        });
                    } else {
                        for_set(3, 3, Lv, u3, [&](const std::vector<int>& Ls3, int u4) {
                            Outer o3 = o2;
                            o3.Ls3 = Ls3;
                            o3.used = u4;
                            with_s3(o3);
                        });
                    }
                });
            };

            if (t1 == SatType::ThreeVertex) {
                for_set(2, 3, Lv, 3, [&](const std::vector<int>& As1, int u2) {
                    Outer o;
                    o.As1 = As1;
                    o.used = u2;
                    with_q1(o, As1);
                });
            } else {
                for_set(3, 3, Lv, 3, [&](const std::vector<int>& Ls1, int u2) {
                    for (int cs1 : Ls1) {
                        Outer o;
                        o.Ls1 = Ls1;
                        o.cs1 = cs1;
                        o.used = u2;
                        with_q1(o, Ls1);
                    }
                });
            }
        }
    return rep;
}

// Helper for the edge-deletion kinds: validity of the initial coloring on
// the template minus the deleted edge.
inline bool valid_without_edge(const SimpleGraph& g, const Coloring& pi, int a, int b) {
    for (int v : g.verts) {
        int c = pi.at(v);
        if (c == 0) return false;
        int same = 0;
        for (int u : g.adj[v]) {
            if ((v == a && u == b) || (v == b && u == a)) continue;
            if (pi.at(u) == c) ++same;
        }
        if (same > 1) return false;
    }
    return true;
}

inline KindReport verify_B2() {
    KindReport rep{"B2"};
    std::vector<int> L1{1, 2, 3};
    for_set(3, 3, L1, 3, [&](const std::vector<int>& L2, int u1) {
        std::vector<int> d12 = L1;
        d12.insert(d12.end(), L2.begin(), L2.end());
        for_set(3, 3, d12, u1, [&](const std::vector<int>& L3, int u2) {
            for (int p1 : L1) {
                // Only the interesting half-space: the deleted edge's ends
                // share a color (otherwise the coloring transfers as-is).
                if (!std::count(L2.begin(), L2.end(), p1)) continue;
                int p2 = p1;
                for (int p3 : L3) {
                    auto ring_pair = [&](const std::vector<int>& Lbase, int used,
                                         auto&& inner) {
                        for_color(Lbase, used, [&](int rx, int u4) {
                            std::vector<int> dy = Lbase;
                            dy.push_back(rx);
                            for_color(dy, u4, [&](int ry, int u5) {
                                if (ry < rx) return;  // unordered pair
                                inner(rx, ry, u5);
                            });
                        });
                    };
                    ring_pair(L1, u2, [&](int x1, int y1, int u5) {
                        ring_pair(L2, u5, [&](int x2, int y2, int u6) {
                            ring_pair(L3, u6, [&](int x3, int y3, int) {
                                Builder b;
                                int v1 = b.colored_listed(L1, p1);
                                int v2 = b.colored_listed(L2, p2);
                                int v3 = b.colored_listed(L3, p3);
                                b.allow_recolor(v1);
                                b.allow_recolor(v2);
                                b.allow_recolor(v3);
                                b.edge(v1, v2);
                                b.edge(v2, v3);
                                b.edge(v3, v1);
                                int xs[3] = {x1, x2, x3}, ys[3] = {y1, y2, y3};
                                int face[3] = {v1, v2, v3};
                                for (int i = 0; i < 3; ++i) {
                                    b.edge(face[i], b.ring(xs[i]));
                                    b.edge(face[i], b.ring(ys[i]));
                                }
                                Configuration c;
                                c.kind = ConfigKind::B2_face444;
                                c.verts = {v1, v2, v3};
                                c.delete_edge = {v1, v2};
                                Instance inst = b.finish(std::move(c));
                                if (!valid_without_edge(inst.g, inst.initial, v1, v2)) return;
                                run_case(inst, rep);
                            });
                        });
                    });
                }
            }
        });
    });
    return rep;
}

inline KindReport verify_B3() {
    KindReport rep{"B3"};
    std::vector<int> L2{1, 2, 3};
    for_set(3, 3, L2, 3, [&](const std::vector<int>& L3, int u1) {
        std::vector<int> d23 = L2;
        d23.insert(d23.end(), L3.begin(), L3.end());
        for_color(d23, u1, [&](int pv1, int u2) {
            for (int p2 : L2) {
                if (!std::count(L3.begin(), L3.end(), p2)) continue;
                int p3 = p2;
                auto ring_pair = [&](const std::vector<int>& Lbase, int used, auto&& inner) {
                    for_color(Lbase, used, [&](int rx, int u4) {
                        std::vector<int> dy = Lbase;
                        dy.push_back(rx);
                        for_color(dy, u4, [&](int ry, int u5) {
                            if (ry < rx) return;
                            inner(rx, ry, u5);
                        });
                    });
                };
                ring_pair(L2, u2, [&](int x2, int y2, int u5) {
                    ring_pair(L3, u5, [&](int x3, int y3, int u6) {
                        struct Shape {
                            int v1, v2, v3;
                            int offs[4];  // x2, y2, x3, y3 vertex ids
                        };
                        auto build = [&](const std::array<std::vector<int>, 4>& avails) {
                            Builder b;
                            int v1 = b.ring(pv1);
                            int v2 = b.colored_listed(L2, p2);
                            int v3 = b.colored_listed(L3, p3);
                            b.allow_recolor(v2);
                            b.allow_recolor(v3);
                            b.edge(v1, v2);
                            b.edge(v2, v3);
                            b.edge(v3, v1);
                            int cols[4] = {x2, y2, x3, y3};
                            int owner[4] = {v2, v2, v3, v3};
                            Shape sh{v1, v2, v3, {0, 0, 0, 0}};
                            for (int i = 0; i < 4; ++i) {
                                int t = b.recolorable(avails[i]);
                                b.set_color(t, cols[i]);
                                b.edge(owner[i], t);
                                sh.offs[i] = t;
                            }
                            Configuration c;
                            c.kind = ConfigKind::B3_lightLightFace;
                            c.verts = {v1, v2, v3};
                            c.delete_edge = {v2, v3};
                            Instance inst = b.finish(std::move(c));
                            return std::make_pair(inst, sh);
                        };
                        int cols[4] = {x2, y2, x3, y3};
                        auto stay = [&](int i) { return std::vector<int>{cols[i]}; };
                        auto [probe, sh] = build({stay(0), stay(1), stay(2), stay(3)});
                        if (!valid_without_edge(probe.g, probe.initial, sh.v2, sh.v3)) return;
                        Coloring pi = probe.initial;
                        ExtendTrace tr;
                        bool threw = false;
                        try {
                            tr = extend(probe.g, probe.cfg, pi, probe.lists);
                        } catch (const Error&) {
                            threw = true;
                        }
                        if (!threw && tr.b3_recolored == 0) {
                            run_case(probe, rep);
                            return;
                        }
                        int which = 0;
                        for (int i = 0; i < 4; ++i)
                            if (sh.offs[i] == tr.b3_recolored) which = i;
                        std::vector<int> da = d23;
                        da.push_back(pv1);
                        for_color(da, u6, [&](int a, int) {
                            std::array<std::vector<int>, 4> av{stay(0), stay(1), stay(2),
                                                               stay(3)};
                            av[which] = {a};
                            auto [inst, sh2] = build(av);
                            (void)sh2;
                            if (!valid_without_edge(inst.g, inst.initial, sh.v2, sh.v3)) return;
                            run_case(inst, rep);
                        });
                    });
                });
            }
        });
    });
    return rep;
}

// KEY in its four satellite-type combinations. The template topology is
// fixed per combination, so one skeleton instance is built up front and
// each case only rewrites lists and boundary colors. Light-4 recolor sets
// are expanded lazily and per-side: a probe with inert placeholders runs
// first, and only the sides whose repair actually fired are enumerated.
class KeyVerifier {
public:
    KeyVerifier(SatType tv, SatType tw) : tv_(tv), tw_(tw) { build_skeleton(); }

    struct Case {
        std::vector<int> Lw, Asv, Lsv, Asw, Lsw;
        int csv = 0, csw = 0;
        int pu = 0, cqv = 0, cv3 = 0, cqw = 0, cw3 = 0;
        int used = 0;
    };

    void run(const Case& o, KindReport& rep) {
        fill_common(o);
        int f = o.used;
        if (tv_ != SatType::LightFour && tw_ != SatType::LightFour) {
            run_case(inst_, rep);
            return;
        }
        // Dry probe: which light repairs fire with inert placeholders?
        bool expand_v = false, expand_w = false;
        probe(o, f + 1, f + 2, f + 3, f + 4, expand_v, expand_w);
        if (!expand_v && !expand_w) {
            fill_xy(o, f + 1, f + 2, f + 3, f + 4);
            run_case(inst_, rep);
            return;
        }
        // Fixed point of the side set under dry enumeration.
        for (int round = 0; round < 2; ++round) {
            bool grew = false;
            enumerate_xy(o, expand_v, expand_w, f, [&](int axv, int ayv, int axw, int ayw) {
                bool nv = false, nw = false;
                probe(o, axv, ayv, axw, ayw, nv, nw);
                if (nv && !expand_v) {
                    expand_v = true;
                    grew = true;
                }
                if (nw && !expand_w) {
                    expand_w = true;
                    grew = true;
                }
            });
            if (!grew) break;
        }
        enumerate_xy(o, expand_v, expand_w, f, [&](int axv, int ayv, int axw, int ayw) {
            fill_xy(o, axv, ayv, axw, ayw);
            run_case(inst_, rep);
        });
    }

private:
    void probe(const Case& o, int axv, int ayv, int axw, int ayw, bool& need_v, bool& need_w) {
        fill_xy(o, axv, ayv, axw, ayw);
        Coloring pi = inst_.initial;
        try {
            ExtendTrace tr = extend(inst_.g, inst_.cfg, pi, inst_.lists);
            for (int s : tr.light_repaired) {
                if (s == sv_) need_v = true;
                if (s == sw_) need_w = true;
            }
        } catch (const Error&) {
            need_v = need_v || tv_ == SatType::LightFour;
            need_w = need_w || tw_ == SatType::LightFour;
        }
    }

    template <class F>
    void enumerate_xy(const Case& o, bool expand_v, bool expand_w, int f, F body) {
        auto for_v = [&](auto&& cont) {
            if (!expand_v) {
                cont(f + 1, f + 2, o.used);
                return;
            }
            std::vector<int> dx = tv_ == SatType::LightFour ? o.Lsv : o.Asv;
            dx.push_back(o.cqv);
            for_color(dx, o.used, [&](int ax, int u2) {
                std::vector<int> dy = dx;
                dy.push_back(ax);
                for_color(dy, u2, [&](int ay, int u3) { cont(ax, ay, u3); });
            });
        };
        for_v([&](int axv, int ayv, int uu) {
            if (!expand_w) {
                body(axv, ayv, f + 3, f + 4);
                return;
            }
            std::vector<int> dx = tw_ == SatType::LightFour ? o.Lsw : o.Asw;
            dx.push_back(o.cqw);
            for_color(dx, uu, [&](int axw, int u2) {
                std::vector<int> dy = dx;
                dy.push_back(axw);
                for_color(dy, u2,
                          [&](int ayw, int) { body(axv, ayv, axw, ayw); });
            });
        });
    }
    void build_skeleton() {
        Builder b;
        u_ = b.ring(1);
        v_ = b.scratch_listed({1, 2, 3});
        w_ = b.scratch_listed({1, 2, 3});
        b.edge(u_, v_);
        b.edge(u_, w_);
        b.edge(v_, w_);
        auto side = [&](SatType t, int owner, int& s, int& q, int& p3, int& x, int& y) {
            if (t == SatType::ThreeVertex) {
                s = b.scratch({1, 2}, 1);  // one blocked pad plus one inert ring
            } else {
                s = b.scratch_listed({1, 2, 3});
                x = b.recolorable({1});
                y = b.recolorable({1});
                b.edge(s, x);
                b.edge(s, y);
            }
            q = b.scratch({1}, 0);
            p3 = b.scratch({1}, 0);
            b.edge(owner, s);
            b.edge(owner, q);
            b.edge(owner, p3);
            b.edge(s, q);
        };
        side(tv_, v_, sv_, qv_, v3_, xv_, yv_);
        side(tw_, w_, sw_, qw_, w3_, xw_, yw_);
        Configuration c;
        c.kind = ConfigKind::KEY_twoBad5s;
        c.verts = {u_, v_, w_, sv_, qv_, v3_, sw_, qw_, w3_};
        c.delete_verts = {v_, w_, sv_, qv_, v3_, sw_, qw_, w3_};
        c.pairs = {{sv_, qv_}, {sw_, qw_}};
        SatInfo iv{sv_, tv_, xv_, yv_}, iw{sw_, tw_, xw_, yw_};
        c.sats = {iv, iw};
        inst_ = b.finish(std::move(c));
    }

    // Rewrite a padded scratch vertex: list = avail plus blocked fillers.
    void fill_padded(int vertex, const std::vector<int>& avail) {
        std::vector<int> list = avail;
        const auto& nbrs = inst_.g.adj[vertex];
        // Pad rings are the trailing ring neighbors (filler-colored).
        std::size_t need = 3 - avail.size();
        std::size_t ri = 0;
        for (int nb : nbrs) {
            if (inst_.modifiable[nb] || !inst_.initial.colored(nb)) continue;
            int c = inst_.initial.at(nb);
            if (c < kFiller) continue;
            if (ri < need) list.push_back(c);
            ++ri;
        }
        inst_.lists.set(vertex, list);
    }

    void fill_common(const Case& o) {
        inst_.initial.set(u_, o.pu);
        inst_.lists.set(w_, o.Lw);
        if (tv_ == SatType::ThreeVertex) {
            fill_padded(sv_, o.Asv);
        } else {
            inst_.lists.set(sv_, o.Lsv);
        }
        fill_padded(qv_, {o.cqv});
        fill_padded(v3_, {o.cv3});
        if (tw_ == SatType::ThreeVertex) {
            fill_padded(sw_, o.Asw);
        } else {
            inst_.lists.set(sw_, o.Lsw);
        }
        fill_padded(qw_, {o.cqw});
        fill_padded(w3_, {o.cw3});
        csv_ = o.csv;
        csw_ = o.csw;
        Lsv_ = o.Lsv;
        Lsw_ = o.Lsw;
    }

    void fill_xy(const Case& o, int axv, int ayv, int axw, int ayw) {
        (void)o;
        if (tv_ == SatType::LightFour) {
            fill_padded(xv_, {axv});
            fill_padded(yv_, {ayv});
            std::vector<int> blocked;
            for (int c : Lsv_)
                if (c != csv_) blocked.push_back(c);
            inst_.initial.set(xv_, blocked.size() > 0 ? blocked[0] : kFiller + 900);
            inst_.initial.set(yv_, blocked.size() > 1 ? blocked[1] : kFiller + 901);
        }
        if (tw_ == SatType::LightFour) {
            fill_padded(xw_, {axw});
            fill_padded(yw_, {ayw});
            std::vector<int> blocked;
            for (int c : Lsw_)
                if (c != csw_) blocked.push_back(c);
            inst_.initial.set(xw_, blocked.size() > 0 ? blocked[0] : kFiller + 902);
            inst_.initial.set(yw_, blocked.size() > 1 ? blocked[1] : kFiller + 903);
        }
    }

    SatType tv_, tw_;
    Instance inst_;
    int u_ = 0, v_ = 0, w_ = 0;
    int sv_ = 0, qv_ = 0, v3_ = 0, xv_ = 0, yv_ = 0;
    int sw_ = 0, qw_ = 0, w3_ = 0, xw_ = 0, yw_ = 0;
    int csv_ = 0, csw_ = 0;
    std::vector<int> Lsv_, Lsw_;
};

inline KindReport verify_KEY() {
    KindReport rep{"KEY"};
    std::vector<int> Lv{1, 2, 3};
    for (SatType tv : {SatType::ThreeVertex, SatType::LightFour})
        for (SatType tw : {SatType::ThreeVertex, SatType::LightFour}) {
            KeyVerifier kv(tv, tw);
            using Case = KeyVerifier::Case;

            auto w_side_slots = [&](Case o) {
                auto finishw = [&](Case o2, const std::vector<int>& swcolors) {
                    std::vector<int> dq = o2.Lw;
                    dq.insert(dq.end(), swcolors.begin(), swcolors.end());
                    for_color(dq, o2.used, [&](int cqw, int u6) {
                        for_color(o2.Lw, u6, [&](int cw3, int u7) {
                            Case o3 = o2;
                            o3.cqw = cqw;
                            o3.cw3 = cw3;
                            o3.used = u7;
                            kv.run(o3, rep);
                        });
                    });
                };
                if (tw == SatType::ThreeVertex) {
                    for_set(2, 3, o.Lw, o.used, [&](const std::vector<int>& Asw, int u5) {
                        Case o2 = o;
                        o2.Asw = Asw;
                        o2.used = u5;
                        finishw(o2, Asw);
                    });
                } else {
                    for_set(3, 3, o.Lw, o.used, [&](const std::vector<int>& Lsw, int u5) {
                        for (int csw : Lsw) {
                            Case o2 = o;
                            o2.Lsw = Lsw;
                            o2.Asw = {csw};
                            o2.csw = csw;
                            o2.used = u5;
                            finishw(o2, Lsw);
                        }
                    });
                }
            };

            auto v_side_slots = [&](Case o) {
                auto finishv = [&](Case o2, const std::vector<int>& svcolors) {
                    std::vector<int> dq = Lv;
                    dq.insert(dq.end(), svcolors.begin(), svcolors.end());
                    for_color(dq, o2.used, [&](int cqv, int u4) {
                        for_color(Lv, u4, [&](int cv3, int u5) {
                            Case o3 = o2;
                            o3.cqv = cqv;
                            o3.cv3 = cv3;
                            o3.used = u5;
                            w_side_slots(o3);
                        });
                    });
                };
                if (tv == SatType::ThreeVertex) {
                    for_set(2, 3, Lv, o.used, [&](const std::vector<int>& Asv, int u3) {
                        Case o2 = o;
                        o2.Asv = Asv;
                        o2.used = u3;
                        finishv(o2, Asv);
                    });
                } else {
                    for_set(3, 3, Lv, o.used, [&](const std::vector<int>& Lsv, int u3) {
                        for (int csv : Lsv) {
                            Case o2 = o;
                            o2.Lsv = Lsv;
                            o2.Asv = {csv};
                            o2.csv = csv;
                            o2.used = u3;
                            finishv(o2, Lsv);
                        }
                    });
                }
            };

            for_set(3, 3, Lv, 3, [&](const std::vector<int>& Lw, int u1) {
                std::vector<int> du = Lv;
                du.insert(du.end(), Lw.begin(), Lw.end());
                for_color(du, u1, [&](int pu, int u2) {
                    Case o;
                    o.Lw = Lw;
                    o.pu = pu;
                    o.used = u2;
                    v_side_slots(o);
                });
            });
        }
    return rep;
}

inline KindReport verify_C1() {
    KindReport rep{"C1"};
    std::vector<int> Lv{1, 2, 3};
    for_color(Lv, 3, [&](int c1, int u1) {
        std::vector<int> d1 = Lv;
        d1.push_back(c1);
        for_color(d1, u1, [&](int c2, int u2) {
            std::vector<int> d2 = d1;
            d2.push_back(c2);
            for_color(d2, u2, [&](int c3, int u3) {
                std::vector<int> d3 = d2;
                d3.push_back(c3);
                for_color(d3, u3, [&](int c4, int u4) {
                    std::vector<int> d4 = d3;
                    d4.push_back(c4);
                    for_color(d4, u4, [&](int c5, int) {
                        Builder b;
                        int v = b.scratch_listed(Lv);
                        int v1 = b.scratch({c1}, 0), v2 = b.scratch({c2}, 0);
                        int v3 = b.scratch({c3}, 0), v4 = b.scratch({c4}, 0);
                        int v5 = b.scratch({c5}, 0);
                        for (int s : {v1, v2, v3, v4, v5}) b.edge(v, s);
                        b.edge(v1, v2);
                        b.edge(v3, v4);
                        Configuration c;
                        c.kind = ConfigKind::C1;
                        c.verts = {v, v1, v2, v3, v4, v5};
                        c.delete_verts = c.verts;
                        c.pairs = {{v1, v2}, {v3, v4}};
                        run_case(b.finish(std::move(c)), rep);
                    });
                });
            });
        });
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

inline KindReport verify_kind(ConfigKind k) {
    switch (k) {
        case ConfigKind::A1_smallDegree: return verify_A1();
        case ConfigKind::A2_adjacent3s: return verify_A2();
        case ConfigKind::A3_face344: return verify_A3();
        case ConfigKind::Q_lemma2: return verify_Q();
        case ConfigKind::B1_fourVertexThree3s: return verify_B1();
        case ConfigKind::B2_face444: return verify_B2();
        case ConfigKind::B3_lightLightFace: return verify_B3();
        case ConfigKind::B4_fiveVertex: return verify_B4();
        case ConfigKind::B5_sixVertex: return verify_B5();
        case ConfigKind::F1_34m4face: return verify_F1();
        case ConfigKind::F2_softOpposite: return verify_F2();
        case ConfigKind::SOFT_adjacentSoft: return verify_SOFT();
        case ConfigKind::C1: return verify_C1();
        case ConfigKind::C2: return verify_C2();
        case ConfigKind::C3: return verify_C3();
        case ConfigKind::KEY_twoBad5s: return verify_KEY();
    }
    fail(Errc::Internal, "unknown kind");
}

inline std::vector<ConfigKind> all_kinds() {
    return {ConfigKind::A1_smallDegree,    ConfigKind::A2_adjacent3s,
            ConfigKind::A3_face344,        ConfigKind::Q_lemma2,
            ConfigKind::B1_fourVertexThree3s, ConfigKind::B2_face444,
            ConfigKind::B3_lightLightFace, ConfigKind::B4_fiveVertex,
            ConfigKind::B5_sixVertex,      ConfigKind::F1_34m4face,
            ConfigKind::F2_softOpposite,   ConfigKind::SOFT_adjacentSoft,
            ConfigKind::C1,                ConfigKind::C2,
            ConfigKind::C3,                ConfigKind::KEY_twoBad5s};
}

inline std::vector<KindReport> verify_all() {
    std::vector<KindReport> out;
    for (ConfigKind k : all_kinds()) out.push_back(verify_kind(k));
    return out;
}

}  // namespace oracle
}  // namespace plic
