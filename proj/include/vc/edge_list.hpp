#pragma once

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vc/graph.hpp"

namespace vc {

struct EdgeListError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result of parsing an edge-list file.  Vertex ids from the file are
// remapped to [0, n) in first-appearance order; ids[v] is the original id.
struct LoadedEdgeList {
    Graph graph;
    std::vector<long long> ids;
};

// Parse whitespace-separated "u v" lines.  '#' starts a comment line, blank
// lines are skipped, self-loops and duplicate undirected edges are dropped.
inline LoadedEdgeList parse_edge_list(std::istream& in, const std::string& origin = "<stream>") {
    std::unordered_map<long long, int> remap;
    std::vector<long long> ids;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int lineno = 0;
    auto intern = [&](long long raw) {
        auto it = remap.find(raw);
        if (it != remap.end()) return it->second;
        int v = static_cast<int>(ids.size());
        remap.emplace(raw, v);
        ids.push_back(raw);
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long long a, b;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0) {
            throw EdgeListError(origin + ":" + std::to_string(lineno) +
                                ": malformed edge line: '" + line + "'");
        }
        int u = intern(a), v = intern(b);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        edges.emplace_back(u, v);
    }
    Graph g = Graph::from_undirected_edges(static_cast<int>(ids.size()), edges);
    return LoadedEdgeList{std::move(g), std::move(ids)};
}

inline LoadedEdgeList load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EdgeListError("cannot open edge list: " + path);
    return parse_edge_list(in, path);
}

// Write one "u v" line per undirected edge (arcs u<v), using original ids
// when provided.
inline void save_edge_list(const Graph& g, std::ostream& out,
                           const std::vector<long long>* ids = nullptr) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int i = 0; i < g.out_degree(u); ++i) {
            int v = g.head(u, i);
            if (u < v) {
                long long a = ids ? (*ids)[u] : u;
                long long b = ids ? (*ids)[v] : v;
                out << a << ' ' << b << '\n';
            }
        }
}

inline void save_edge_list(const Graph& g, const std::string& path,
                           const std::vector<long long>* ids = nullptr) {
    std::ofstream out(path);
    if (!out) throw EdgeListError("cannot open for write: " + path);
    save_edge_list(g, out, ids);
}

}  // namespace vc
