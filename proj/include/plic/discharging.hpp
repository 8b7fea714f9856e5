#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "plic/rational.hpp"
#include "plic/reducibility.hpp"
#include "plic/structure.hpp"

namespace plic {

// A charge carrier: vertex or face.
struct Element {
    bool is_face = false;
    int id = 0;
    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
    std::string str() const { return (is_face ? "f" : "v") + std::to_string(id); }
};

inline Element vertex_elem(int v) { return {false, v}; }
inline Element face_elem(int f) { return {true, f}; }

// Transfer rule identifiers; amounts are fixed per rule.
enum class Rule {
    R1_1,
    R1_2,
    R1_3a,
    R1_3b,
    R1_4a,
    R1_4b,
    R1_5a,
    R1_5b,
    R2_1,
    R2_2,
    R3_1_1,
    R3_1_2,
    R3_2_1,
    R3_2_2,
    R3_3,
    R4_pendant,
    R4_free,
};

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R1_1: return "R1.1";
        case Rule::R1_2: return "R1.2";
        case Rule::R1_3a: return "R1.3a";
        case Rule::R1_3b: return "R1.3b";
        case Rule::R1_4a: return "R1.4a";
        case Rule::R1_4b: return "R1.4b";
        case Rule::R1_5a: return "R1.5a";
        case Rule::R1_5b: return "R1.5b";
        case Rule::R2_1: return "R2.1";
        case Rule::R2_2: return "R2.2";
        case Rule::R3_1_1: return "R3.1.1";
        case Rule::R3_1_2: return "R3.1.2";
        case Rule::R3_2_1: return "R3.2.1";
        case Rule::R3_2_2: return "R3.2.2";
        case Rule::R3_3: return "R3.3";
        case Rule::R4_pendant: return "R4.pendant";
        case Rule::R4_free: return "R4.free";
    }
    return "?";
}

struct Transfer {
    Element from, to;
    Rational amount;
    Rule rule;

    std::string str() const {
        std::ostringstream os;
        os << rule_name(rule) << " " << from.str() << " -> " << to.str() << " : " << amount.str();
        return os.str();
    }
};

class ChargeState {
public:
    void set(Element e, Rational r) { charge_[e] = r; }
    Rational at(Element e) const {
        auto it = charge_.find(e);
        return it == charge_.end() ? Rational(0) : it->second;
    }
    void move(const Transfer& t) {
        charge_[t.from] -= t.amount;
        charge_[t.to] += t.amount;
    }
    Rational total() const {
        Rational s(0);
        for (const auto& [e, r] : charge_) s += r;
        return s;
    }
    const std::map<Element, Rational>& entries() const { return charge_; }

private:
    std::map<Element, Rational> charge_;
};

struct TransferLedger {
    std::vector<Transfer> transfers;
    std::vector<std::string> warnings;  // role ties resolved lexicographically
};

// Initial weights 3d(v)-10 and 2d(f)-10; the Euler identity pins the total
// of any connected plane graph at exactly -20.
inline ChargeState initial_charge(const PlaneGraph& g) {
    ChargeState st;
    for (int v : g.vertices()) st.set(vertex_elem(v), Rational(3 * g.degree(v) - 10));
    for (const Face& f : g.faces()) st.set(face_elem(f.id), Rational(2 * f.degree() - 10));
    require(st.total() == Rational(-20), Errc::Internal, "initial charge total is not -20");
    return st;
}

namespace detail {

// Role split of a 3-face by the degree shape the rules cover. Returns false
// for shapes outside the schedule (possible only when a reducible
// configuration is present).
struct R1Roles {
    bool covered = false;
    Rule rule{};
    // parallel vectors: vertex, amount
    std::vector<std::pair<int, Rational>> give;
};

inline R1Roles r1_dispatch(const PlaneGraph& g, const StructureReport& rep, const Face& f,
                           std::vector<std::string>* warnings) {
    R1Roles out;
    std::vector<int> bnd = f.boundary_vertices();
    std::sort(bnd.begin(), bnd.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    int d0 = g.degree(bnd[0]), d1 = g.degree(bnd[1]), d2 = g.degree(bnd[2]);
    auto warn = [&](const std::string& w) {
        if (warnings) warnings->push_back(w);
    };
    auto lights = [&]() {
        std::vector<int> ls;
        for (int v : bnd)
            if (g.degree(v) == 4 && rep.at(v).light4) ls.push_back(v);
        return ls;
    };
    auto bads = [&]() {
        std::vector<int> bs;
        for (int v : bnd)
            if (rep.at(v).bad5) bs.push_back(v);
        return bs;
    };

    if (d0 == 3 && d1 == 4 && d2 >= 5) {
        out.covered = true;
        out.rule = Rule::R1_1;
        out.give = {{bnd[0], Rational(0)}, {bnd[1], Rational(1)}, {bnd[2], Rational(3)}};
    } else if (d0 == 3 && d1 >= 5) {
        out.covered = true;
        out.rule = Rule::R1_2;
        out.give = {{bnd[0], Rational(0)}, {bnd[1], Rational(2)}, {bnd[2], Rational(2)}};
    } else if (d0 == 4 && d1 == 4 && d2 >= 5) {
        auto ls = lights();
        if (!ls.empty()) {
            if (ls.size() == 2) warn("two light 4-vertices on face f" + std::to_string(f.id));
            int other = bnd[0] == ls[0] ? bnd[1] : bnd[0];
            out.covered = true;
            out.rule = Rule::R1_3a;
            out.give = {{ls[0], Rational(0)}, {other, Rational(1)}, {bnd[2], Rational(3)}};
        } else {
            out.covered = true;
            out.rule = Rule::R1_3b;
            out.give = {{bnd[0], Rational(1)}, {bnd[1], Rational(1)}, {bnd[2], Rational(2)}};
        }
    } else if (d0 == 4 && d1 >= 5) {
        auto bs = bads();
        if (!bs.empty()) {
            if (bs.size() == 2) warn("two bad 5-vertices on face f" + std::to_string(f.id));
            int other = bnd[1] == bs[0] ? bnd[2] : bnd[1];
            out.covered = true;
            out.rule = Rule::R1_4a;
            out.give = {{bnd[0], Rational(1)}, {bs[0], Rational(1)}, {other, Rational(2)}};
        } else {
            out.covered = true;
            out.rule = Rule::R1_4b;
            out.give = {{bnd[0], Rational(0)}, {bnd[1], Rational(2)}, {bnd[2], Rational(2)}};
        }
    } else if (d0 >= 5) {
        auto bs = bads();
        if (!bs.empty()) {
            if (bs.size() >= 2) warn("two bad 5-vertices on face f" + std::to_string(f.id));
            std::vector<int> rest;
            for (int v : bnd)
                if (v != bs[0]) rest.push_back(v);
            out.covered = true;
            out.rule = Rule::R1_5a;
            out.give = {{bs[0], Rational(1)},
                        {rest[0], Rational(3, 2)},
                        {rest[1], Rational(3, 2)}};
        } else {
            out.covered = true;
            out.rule = Rule::R1_5b;
            out.give = {{bnd[0], Rational(4, 3)},
                        {bnd[1], Rational(4, 3)},
                        {bnd[2], Rational(4, 3)}};
        }
    }
    return out;
}

// The two face-neighbors of v on a 4-face, and the opposite vertex.
struct FourFaceCorner {
    int v1 = 0, v2 = 0, opposite = 0;
};

inline FourFaceCorner four_face_corner(const PlaneGraph& g, int v, const Face& f) {
    FourFaceCorner c;
    auto bnd = f.boundary_vertices();
    for (int i = 0; i < 4; ++i)
        if (bnd[i] == v) {
            c.v1 = bnd[(i + 3) % 4];
            c.v2 = bnd[(i + 1) % 4];
            c.opposite = bnd[(i + 2) % 4];
        }
    return c;
}

}  // namespace detail

// Apply the full rule schedule. Requires a class member: outside the class
// the face-adjacency structure the rules presume breaks down.
inline std::pair<ChargeState, TransferLedger> apply_rules(const PlaneGraph& g,
                                                          const StructureReport& rep) {
    require(in_class(g).in_class, Errc::NotInClass, "discharging requires a class member");
    ChargeState st = initial_charge(g);
    TransferLedger ledger;
    auto emit = [&](Element from, Element to, Rational amount, Rule rule) {
        if (amount == Rational(0)) return;
        Transfer t{from, to, amount, rule};
        st.move(t);
        ledger.transfers.push_back(std::move(t));
    };

    // R1: 3-faces take from their boundary by degree shape.
    for (const Face& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto roles = detail::r1_dispatch(g, rep, f, &ledger.warnings);
        if (!roles.covered) continue;
        for (const auto& [v, amount] : roles.give) emit(vertex_elem(v), face_elem(f.id), amount, roles.rule);
    }

    // R2/R3: 4-faces take from incident 5+-vertices and non-weak 4-vertices.
    for (const Face& f : g.faces()) {
        if (f.degree() != 4) continue;
        for (int v : f.boundary_vertices()) {
            auto corner = detail::four_face_corner(g, v, f);
            int d1 = g.degree(corner.v1), d2 = g.degree(corner.v2);
            if (g.degree(v) >= 5) {
                if (d1 >= 4 && d2 >= 4)
                    emit(vertex_elem(v), face_elem(f.id), Rational(1), Rule::R2_1);
                else
                    emit(vertex_elem(v), face_elem(f.id), Rational(4, 3), Rule::R2_2);
            } else if (g.degree(v) == 4 && !rep.at(v).weak4) {
                if (d1 == 3 && d2 == 3) {
                    // Opposite face via v in rotation-corner terms.
                    auto inc = g.incident_faces(v);
                    int opp = -1;
                    for (int i = 0; i < 4; ++i)
                        if (inc[i] == f.id) opp = inc[(i + 2) % 4];
                    if (opp >= 0 && g.face_degree(opp) == 3)
                        emit(vertex_elem(v), face_elem(f.id), Rational(4, 3), Rule::R3_1_1);
                    else
                        emit(vertex_elem(v), face_elem(f.id), Rational(2, 3), Rule::R3_1_2);
                } else if (d1 >= 4 && d2 >= 4) {
                    if (rep.at(corner.v1).soft4 || rep.at(corner.v2).soft4)
                        emit(vertex_elem(v), face_elem(f.id), Rational(1), Rule::R3_2_1);
                    else
                        emit(vertex_elem(v), face_elem(f.id), Rational(2, 3), Rule::R3_2_2);
                } else if ((d1 == 3 && d2 >= 4) || (d1 >= 4 && d2 == 3)) {
                    emit(vertex_elem(v), face_elem(f.id), Rational(2, 3), Rule::R3_3);
                }
            }
        }
    }

    // R4: every 4+-vertex pays its pendant and free 3-neighbors.
    for (int u : g.vertices()) {
        if (g.degree(u) < 4) continue;
        for (int v : g.rotation(u)) {
            if (g.degree(v) != 3) continue;
            int tv = rep.at(v).t;
            if (is_pendant_3_of(g, u, v, tv))
                emit(vertex_elem(u), vertex_elem(v), Rational(1), Rule::R4_pendant);
            else if (is_free_3_of(g, u, v, tv))
                emit(vertex_elem(u), vertex_elem(v), Rational(1, 3), Rule::R4_free);
        }
    }

    return {st, ledger};
}

inline std::pair<ChargeState, TransferLedger> apply_rules(const PlaneGraph& g) {
    auto rep = classify(g);
    return apply_rules(g, rep);
}

struct AuditReport {
    bool conservation = false;         // final total is exactly -20
    bool bounds_ok = false;            // every 3-face transfer within the stated menu
    bool r1_totals_ok = false;         // each covered 3-face took exactly 4
    std::vector<Element> negative;     // elements with negative final charge
    bool configurations_present = false;
    bool proof_gap = false;            // class member with no configuration
    std::vector<std::string> notes;

    bool consistent() const { return conservation && bounds_ok && r1_totals_ok && !proof_gap; }
};

// Conservation, the per-rule bounds on 3-face transfers, the
// 4-per-covered-face totals, negative elements, and the cross-reference
// against the configuration catalog.
inline AuditReport audit(const PlaneGraph& g, const StructureReport& rep, const ChargeState& st,
                         const TransferLedger& ledger) {
    AuditReport out;
    out.conservation = st.total() == Rational(-20);

    out.bounds_ok = true;
    std::map<int, Rational> face_in;  // 3-face id -> received under R1
    for (const Transfer& t : ledger.transfers) {
        if (!t.to.is_face) continue;
        const Face& f = g.face(t.to.id);
        if (f.degree() != 3) continue;
        face_in[f.id] += t.amount;
        int d = g.degree(t.from.id);
        if (d == 4) {
            if (t.amount > Rational(1)) {
                out.bounds_ok = false;
                out.notes.push_back("4-vertex over-transfer: " + t.str());
            }
        } else if (d >= 5) {
            static const Rational menu[] = {Rational(3), Rational(2), Rational(3, 2),
                                            Rational(4, 3), Rational(1)};
            bool found = false;
            for (const Rational& m : menu) found = found || t.amount == m;
            if (!found) {
                out.bounds_ok = false;
                out.notes.push_back("5+-vertex off-menu transfer: " + t.str());
            }
            if (t.amount == Rational(3) && !face_pattern(g, rep, f.id, {"5+", "*", "4"})) {
                out.bounds_ok = false;
                out.notes.push_back("transfer of 3 into a non-(5+,*,4)-face: " + t.str());
            }
        }
    }

    out.r1_totals_ok = true;
    for (const Face& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto roles = detail::r1_dispatch(g, rep, f, nullptr);
        Rational got = face_in.count(f.id) ? face_in.at(f.id) : Rational(0);
        Rational want = roles.covered ? Rational(4) : Rational(0);
        if (got != want) {
            out.r1_totals_ok = false;
            out.notes.push_back("face f" + std::to_string(f.id) + " received " + got.str() +
                                ", expected " + want.str());
        }
    }

    for (const auto& [e, r] : st.entries())
        if (r < Rational(0)) out.negative.push_back(e);

    out.configurations_present = !find_all(g, rep).empty();
    out.proof_gap = !out.configurations_present;
    if (out.proof_gap)
        out.notes.push_back("PROOF_GAP: class member with no reducible configuration");
    return out;
}

inline std::string format_discharge(const PlaneGraph& g, const ChargeState& st,
                                    const TransferLedger& ledger, const AuditReport& rep) {
    std::ostringstream os;
    for (const Transfer& t : ledger.transfers) os << t.str() << "\n";
    for (const std::string& w : ledger.warnings) os << "warning: " << w << "\n";
    for (int v : g.vertices()) os << "charge v" << v << " = " << st.at(vertex_elem(v)).str() << "\n";
    for (const Face& f : g.faces())
        os << "charge f" << f.id << " = " << st.at(face_elem(f.id)).str() << "\n";
    os << "total = " << st.total().str() << "\n";
    os << "audit: conservation=" << (rep.conservation ? "ok" : "VIOLATED")
       << " bounds=" << (rep.bounds_ok ? "ok" : "VIOLATED")
       << " r1-totals=" << (rep.r1_totals_ok ? "ok" : "VIOLATED")
       << " negatives=" << rep.negative.size()
       << " configurations=" << (rep.configurations_present ? "present" : "ABSENT") << "\n";
    for (const std::string& n : rep.notes) os << "note: " << n << "\n";
    os << "verdict: " << (rep.consistent() ? "consistent" : "INCONSISTENT") << "\n";
    return os.str();
}

}  // namespace plic
