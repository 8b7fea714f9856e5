#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "plic/error.hpp"
#include "plic/plane_graph.hpp"

namespace plic {

// Graph text format: one line per vertex, "v: n1 n2 n3 ..." giving the
// clockwise rotation at v. '#' starts a comment, blank lines are ignored.
// Every edge must appear in both endpoint lines (checked at construction).
//
// A comment of the form "# expect key=value ..." records properties a scan
// re-verifies on load (in_class=yes|no, girth=N, configs=A1,B2,...).

struct Expectations {
    std::map<std::string, std::string> kv;
    bool has(const std::string& k) const { return kv.count(k) > 0; }
    std::string get(const std::string& k) const { return kv.at(k); }
};

struct ParsedGraph {
    std::map<int, std::vector<int>> rotation;
    Expectations expect;
};

inline ParsedGraph parse_rotation_stream(std::istream& in, const std::string& name) {
    ParsedGraph out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = name + ":" + std::to_string(lineno);
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream cs(line.substr(hash + 1));
            std::string word;
            if (cs >> word && word == "expect") {
                std::string pair;
                while (cs >> pair) {
                    auto eq = pair.find('=');
                    require(eq != std::string::npos, Errc::ParseError, where + ": bad expect entry");
                    out.expect.kv[pair.substr(0, eq)] = pair.substr(eq + 1);
                }
            }
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        int v;
        if (!(ls >> v)) {
            std::string rest;
            ls.clear();
            require(!(ls >> rest), Errc::ParseError, where + ": expected vertex id");
            continue;  // blank line
        }
        require(v > 0, Errc::ParseError, where + ": vertex ids must be positive");
        char colon = 0;
        ls >> colon;
        require(colon == ':', Errc::ParseError, where + ": expected ':' after vertex id");
        require(out.rotation.find(v) == out.rotation.end(), Errc::ParseError,
                where + ": vertex " + std::to_string(v) + " defined twice");
        std::vector<int> nbrs;
        int u;
        while (ls >> u) {
            require(u > 0, Errc::ParseError, where + ": neighbor ids must be positive");
            nbrs.push_back(u);
        }
        require(ls.eof(), Errc::ParseError, where + ": trailing garbage");
        out.rotation[v] = nbrs;
    }
    require(!out.rotation.empty(), Errc::ParseError, name + ": empty graph file");
    return out;
}

inline ParsedGraph parse_rotation_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::ParseError, "cannot open " + path);
    return parse_rotation_stream(in, path);
}

inline PlaneGraph load_graph(const std::string& path) {
    return PlaneGraph::build_from_rotation(parse_rotation_file(path).rotation);
}

inline std::string format_rotation(const std::map<int, std::vector<int>>& rotation) {
    std::ostringstream os;
    for (const auto& [v, nbrs] : rotation) {
        os << v << ":";
        for (int u : nbrs) os << " " << u;
        os << "\n";
    }
    return os.str();
}

// List file format: "v: c1 c2 c3" per vertex.
inline std::map<int, std::vector<int>> parse_lists_stream(std::istream& in, const std::string& name) {
    std::map<int, std::vector<int>> lists;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = name + ":" + std::to_string(lineno);
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int v;
        if (!(ls >> v)) continue;
        char colon = 0;
        ls >> colon;
        require(colon == ':', Errc::ParseError, where + ": expected ':'");
        std::vector<int> cs;
        int c;
        while (ls >> c) cs.push_back(c);
        require(!cs.empty(), Errc::ParseError, where + ": empty list");
        lists[v] = cs;
    }
    return lists;
}

inline std::map<int, std::vector<int>> parse_lists_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::ParseError, "cannot open " + path);
    return parse_lists_stream(in, path);
}

}  // namespace plic
