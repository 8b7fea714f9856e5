#pragma once

#include <string>
#include <vector>

#include "plic/coloring.hpp"
#include "plic/extension.hpp"
#include "plic/reducibility.hpp"

namespace plic {

// Anomaly log for the recursive colorer. A PROOF_GAP entry means a class
// member offered no configuration to reduce (or a base case came back
// infeasible) - impossible if the catalog is complete, so any entry is a
// bug report against the configuration machinery, not a user error.
struct Diagnostics {
    std::vector<std::string> proof_gaps;
    long long reductions = 0;
    long long base_solves = 0;
};

namespace detail {

inline void recursive_color_impl(const PlaneGraph& g, const ListAssignment& lists, Coloring& out,
                                 Diagnostics* diag, int base_threshold) {
    if (g.vertex_count() <= base_threshold) {
        if (diag) ++diag->base_solves;
        auto res = solve(g.simple_graph(), lists, 1);
        if (!res) {
            if (diag)
                diag->proof_gaps.push_back("PROOF_GAP: base case infeasible on " +
                                           std::to_string(g.vertex_count()) + " vertices");
            fail(Errc::Internal, "base case infeasible; the catalog or solver is wrong");
        }
        for (int v : g.vertices()) out.set(v, res->at(v));
        return;
    }
    auto cfgs = find_all(g);
    if (cfgs.empty()) {
        if (diag)
            diag->proof_gaps.push_back("PROOF_GAP: class member with no configuration, n=" +
                                       std::to_string(g.vertex_count()));
        auto res = solve(g.simple_graph(), lists, 1);
        require(res.has_value(), Errc::Internal, "fallback solve infeasible");
        for (int v : g.vertices()) out.set(v, res->at(v));
        return;
    }
    const Configuration& cfg = cfgs.front();
    if (diag) ++diag->reductions;
    auto comps = reduce(g, cfg);
    Coloring merged(g.rotation_cap());
    for (const PlaneGraph& comp : comps)
        recursive_color_impl(comp, lists, merged, diag, base_threshold);
    ExtendTrace trace = extend_checked(g, cfg, merged, lists);
    (void)trace;
    for (int v : g.vertices()) out.set(v, merged.at(v));
}

}  // namespace detail

// Defect-1 list coloring of a class member from 3-lists by peeling
// configurations: detect, delete, color the rest, extend back.
inline Coloring recursive_color(const PlaneGraph& g, const ListAssignment& lists,
                                Diagnostics* diag = nullptr, int base_threshold = 6) {
    require(in_class(g).in_class, Errc::NotInClass, "graph has a 4-cycle adjacent to a short cycle");
    for (int v : g.vertices())
        require(static_cast<int>(lists.at(v).size()) >= 3, Errc::ListTooSmall,
                "vertex " + std::to_string(v) + " has fewer than 3 colors");
    Coloring out(g.rotation_cap());
    detail::recursive_color_impl(g, lists, out, diag, base_threshold);
    auto res = check(g.simple_graph(), &lists, out, 1);
    require(res.ok, Errc::Internal, "recursive coloring failed validation");
    return out;
}

}  // namespace plic
