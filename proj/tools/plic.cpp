#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "plic/discharging.hpp"
#include "plic/generators.hpp"
#include "plic/io.hpp"
#include "plic/oracle_kinds.hpp"
#include "plic/recursive_color.hpp"

using namespace plic;

namespace {

ListAssignment lists_for(const PlaneGraph& g, const std::string& lists_path, int uniform_k) {
    if (!lists_path.empty())
        return ListAssignment::from_map(g.simple_graph(), parse_lists_file(lists_path));
    return ListAssignment::uniform(g.simple_graph(), uniform_k);
}

// Deterministic 3-lists over {1..9}; mt19937 is bit-stable across platforms.
ListAssignment random_3lists(const PlaneGraph& g, std::uint32_t seed) {
    std::mt19937 rng(seed);
    ListAssignment la(g.rotation_cap());
    for (int v : g.vertices()) {
        std::vector<int> cs;
        while (cs.size() < 3) {
            int c = 1 + static_cast<int>(rng() % 9);
            if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
        }
        la.set(v, cs);
    }
    return la;
}

int scan_one(const std::filesystem::path& path, std::uint32_t seed, int trials, std::ostream& os) {
    int failures = 0;
    auto fail_note = [&](const std::string& what) {
        ++failures;
        os << "  FAIL " << what << "\n";
    };
    ParsedGraph parsed = parse_rotation_file(path.string());
    PlaneGraph g = PlaneGraph::build_from_rotation(parsed.rotation);
    auto rep = classify(g);
    auto cls = in_class(g);
    os << path.filename().string() << ": n=" << g.vertex_count() << " m=" << g.edge_count()
       << " faces=" << g.faces().size() << " in_class=" << (cls.in_class ? "yes" : "no");

    if (parsed.expect.has("in_class")) {
        bool want = parsed.expect.get("in_class") == "yes";
        if (want != cls.in_class) fail_note("expected in_class=" + parsed.expect.get("in_class"));
    }
    if (parsed.expect.has("girth")) {
        int want = std::stoi(parsed.expect.get("girth"));
        int got = girth(g);
        os << " girth=" << got;
        if (got != want) fail_note("expected girth=" + parsed.expect.get("girth"));
    }
    auto cfgs = find_all(g, rep);
    os << " configs=" << cfgs.size() << "\n";
    if (parsed.expect.has("configs")) {
        std::set<std::string> have;
        for (const auto& c : cfgs) have.insert(kind_name(c.kind));
        std::stringstream want(parsed.expect.get("configs"));
        std::string item;
        while (std::getline(want, item, ','))
            if (!have.count(item)) fail_note("expected configuration " + item);
    }

    if (!cls.in_class) return failures;

    if (cfgs.empty()) fail_note("class member without configurations");
    auto [st, led] = apply_rules(g, rep);
    auto a = audit(g, rep, st, led);
    if (!a.consistent()) fail_note("discharging audit inconsistent");
    if (st.total() != Rational(-20)) fail_note("charge total drifted");

    Diagnostics diag;
    for (int t = 0; t < trials; ++t) {
        std::uint32_t s = seed + 1000003u * static_cast<std::uint32_t>(t) +
                          static_cast<std::uint32_t>(
                              std::hash<std::string>{}(path.filename().string()));
        auto la = random_3lists(g, s);
        try {
            auto pi = recursive_color(g, la, &diag);
            if (!check(g.simple_graph(), &la, pi, 1).ok) fail_note("invalid coloring in trial");
            if (!solve(g.simple_graph(), la, 1)) fail_note("solver disagrees on feasibility");
        } catch (const Error& e) {
            fail_note(std::string("trial raised: ") + e.what());
            break;
        }
    }
    if (!diag.proof_gaps.empty()) fail_note("PROOF_GAP anomalies recorded");
    return failures;
}

void write_fixtures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto write = [&](const std::string& name, const PlaneGraph& g, const std::string& expect) {
        std::ofstream out(fs::path(out_dir) / (name + ".rot"));
        if (!expect.empty()) out << "# expect " << expect << "\n";
        out << format_rotation(g.rotation_table());
    };
    write("k2", PlaneGraph::build_from_rotation({{1, {2}}, {2, {1}}}), "in_class=yes configs=A1");
    write("p3", gen::path(3), "in_class=yes configs=A1");
    write("c3", gen::cycle(3), "in_class=yes girth=3 configs=A1");
    write("c5", gen::cycle(5), "in_class=yes girth=5 configs=A1");
    write("c15", gen::cycle(15), "in_class=yes girth=15 configs=A1");
    write("star4", gen::star(4), "in_class=yes configs=A1");
    write("k4", gen::k4(), "in_class=no girth=3");
    write("cube", gen::cube(), "in_class=no girth=4");
    write("octahedron", gen::octahedron(), "in_class=no girth=3 configs=B2");
    write("dodecahedron", gen::dodecahedron(), "in_class=yes girth=5 configs=A2");
    write("icosahedron", gen::icosahedron(), "in_class=no girth=3");
    write("fig_light4", gen::fig_light4(), "in_class=yes girth=3 configs=A1");
    write("fig_soft4_weak", gen::fig_soft4_weak(), "in_class=yes girth=4 configs=A1");
    write("fig_soft4_notweak", gen::fig_soft4_notweak(), "in_class=yes girth=4 configs=A1");
    write("fig_bad5", gen::fig_bad5(), "in_class=yes girth=3 configs=A1");
    write("fig_badface", gen::fig_badface(), "in_class=yes girth=3 configs=A1");
    write("fig_bad555", gen::fig_bad555(), "in_class=yes girth=3 configs=A1");
    write("fig_pendant3", gen::fig_pendant3(), "in_class=yes girth=3 configs=A1");
    write("fig_free3hub", gen::fig_free3hub(), "in_class=yes configs=A1");
    write("fig_r311", gen::fig_r311(), "in_class=yes girth=3 configs=A1");
    write("triquad", gen::fig_triquad(), "in_class=yes girth=3 configs=A1");
    write("pentaglue", gen::fig_pentaglue(), "in_class=yes girth=3 configs=A1");
    write("subdiv_octahedron", gen::subdivide(gen::octahedron()),
          "in_class=yes girth=6 configs=A1");
    write("subdiv_cube", gen::subdivide(gen::cube()), "in_class=yes girth=8 configs=A1");
    write("subdiv_wheel5", gen::subdivide(gen::wheel(5)), "in_class=yes girth=6 configs=A1");
    write("dodeca_minus_one", gen::delete_one_vertex(gen::dodecahedron(), 1),
          "in_class=yes girth=5 configs=A1,A2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph defective list-coloring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, lists_path, out_dir, kind_filter, corpus_dir;
    int uniform_k = 3, defect = 1, kk = 3, dd = 1, trials = 100;
    std::uint32_t seed = 20240601u;

    auto* c_faces = app.add_subcommand("faces", "list the faces of an embedded graph");
    c_faces->add_option("graph", graph_path)->required();

    auto* c_girth = app.add_subcommand("girth", "shortest cycle length");
    c_girth->add_option("graph", graph_path)->required();

    auto* c_classify = app.add_subcommand("classify", "vertex and face structure report");
    c_classify->add_option("graph", graph_path)->required();

    auto* c_class = app.add_subcommand("check-class", "any 4-cycle adjacent to a short cycle?");
    c_class->add_option("graph", graph_path)->required();

    auto* c_color = app.add_subcommand("color", "exact defective list coloring");
    c_color->add_option("graph", graph_path)->required();
    c_color->add_option("--lists", lists_path, "list file (v: c1 c2 c3)");
    c_color->add_option("--uniform", uniform_k, "uniform lists {1..k}");
    c_color->add_option("--defect", defect, "allowed same-colored neighbors");

    auto* c_choose = app.add_subcommand("choosable", "exhaustive (k,d)*-choosability");
    c_choose->add_option("graph", graph_path)->required();
    c_choose->add_option("k", kk)->required();
    c_choose->add_option("d", dd)->required();

    auto* c_find = app.add_subcommand("find-config", "reducible configurations present");
    c_find->add_option("graph", graph_path)->required();

    auto* c_discharge = app.add_subcommand("discharge", "charge ledger and audit");
    c_discharge->add_option("graph", graph_path)->required();

    auto* c_lemmas = app.add_subcommand("verify-lemmas", "exhaustive extension oracles");
    c_lemmas->add_option("--kind", kind_filter, "run a single kind (A1..KEY)");

    auto* c_recolor = app.add_subcommand("recursive-color", "peel configurations, color, extend");
    c_recolor->add_option("graph", graph_path)->required();
    c_recolor->add_option("--lists", lists_path);
    c_recolor->add_option("--uniform", uniform_k);

    auto* c_scan = app.add_subcommand("scan", "full pipeline over a fixture directory");
    c_scan->add_option("dir", corpus_dir)->required();
    c_scan->add_option("--seed", seed);
    c_scan->add_option("--trials", trials);

    auto* c_gen = app.add_subcommand("gen", "write the builtin fixture corpus");
    c_gen->add_option("dir", out_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_faces->parsed()) {
            auto g = load_graph(graph_path);
            for (const Face& f : g.faces()) {
                std::cout << "f" << f.id << " deg=" << f.degree() << " [";
                auto b = f.boundary_vertices();
                for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? " " : "") << b[i];
                std::cout << "]\n";
            }
        } else if (c_girth->parsed()) {
            std::cout << "girth: " << girth(load_graph(graph_path)) << "\n";
        } else if (c_classify->parsed()) {
            auto g = load_graph(graph_path);
            std::cout << format_structure_report(g, classify(g));
        } else if (c_class->parsed()) {
            std::cout << format_class_report(in_class(load_graph(graph_path)));
        } else if (c_color->parsed()) {
            auto g = load_graph(graph_path);
            auto la = lists_for(g, lists_path, uniform_k);
            auto res = solve(g.simple_graph(), la, defect);
            if (!res) {
                std::cout << "infeasible\n";
                return 1;
            }
            require(check(g.simple_graph(), &la, *res, defect).ok, Errc::Internal,
                    "solver output failed the checker");
            for (int v : g.vertices()) std::cout << v << ": " << res->at(v) << "\n";
        } else if (c_choose->parsed()) {
            auto g = load_graph(graph_path);
            auto res = is_choosable(g.simple_graph(), kk, dd);
            std::cout << "(" << kk << "," << dd
                      << ")*-choosable: " << (res.choosable ? "yes" : "no") << " ("
                      << res.assignments_tested << " assignments)\n";
            if (!res.choosable) {
                std::cout << "witness lists:\n";
                for (const auto& [v, cs] : res.witness) {
                    std::cout << "  " << v << ":";
                    for (int c : cs) std::cout << " " << c;
                    std::cout << "\n";
                }
                return 1;
            }
        } else if (c_find->parsed()) {
            auto g = load_graph(graph_path);
            for (const auto& cfg : find_all(g)) std::cout << cfg.str() << "\n";
        } else if (c_discharge->parsed()) {
            auto g = load_graph(graph_path);
            auto rep = classify(g);
            auto [st, led] = apply_rules(g, rep);
            auto a = audit(g, rep, st, led);
            std::cout << format_discharge(g, st, led, a);
            return a.consistent() ? 0 : 1;
        } else if (c_lemmas->parsed()) {
            bool all_ok = true;
            for (ConfigKind k : oracle::all_kinds()) {
                if (!kind_filter.empty() && kind_filter != kind_name(k)) continue;
                auto t0 = std::chrono::steady_clock::now();
                auto rep = oracle::verify_kind(k);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                std::cout << rep.name << ": cases=" << rep.cases
                          << " counterexamples=" << rep.counterexamples
                          << " extend_failures=" << rep.extend_failures << " (" << ms << " ms) "
                          << (rep.ok() ? "PASS" : "FAIL") << "\n";
                if (!rep.first_failure.empty()) std::cout << "  " << rep.first_failure << "\n";
                all_ok = all_ok && rep.ok();
            }
            return all_ok ? 0 : 1;
        } else if (c_recolor->parsed()) {
            auto g = load_graph(graph_path);
            auto la = lists_for(g, lists_path, uniform_k);
            Diagnostics diag;
            auto pi = recursive_color(g, la, &diag);
            for (int v : g.vertices()) std::cout << v << ": " << pi.at(v) << "\n";
            for (const auto& gap : diag.proof_gaps) std::cout << gap << "\n";
            return diag.proof_gaps.empty() ? 0 : 1;
        } else if (c_scan->parsed()) {
            int failures = 0;
            std::vector<std::filesystem::path> files;
            for (const auto& e : std::filesystem::directory_iterator(corpus_dir))
                if (e.path().extension() == ".rot") files.push_back(e.path());
            std::sort(files.begin(), files.end());
            require(!files.empty(), Errc::ParseError, "no .rot fixtures in " + corpus_dir);
            for (const auto& p : files) failures += scan_one(p, seed, trials, std::cout);
            std::cout << (failures == 0 ? "scan: all checks passed" : "scan: FAILURES") << " ("
                      << files.size() << " fixtures)\n";
            return failures == 0 ? 0 : 1;
        } else if (c_gen->parsed()) {
            write_fixtures(out_dir);
            std::cout << "fixtures written to " << out_dir << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
