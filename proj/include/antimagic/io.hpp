#pragma once

// Text formats and the graph-spec grammar.
//
// Graph file:    line "graph <n> <m>" followed by m lines "<u> <v>".
// Labeling file: line "graph <n> <m>" followed by m lines "<u> <v> <label>".
// '#' starts a comment line in both.
//
// Graph-spec grammar: term ("+" term)* with
//   cycle:N | path:V | star:N | doublestar:A:B | jellyfish:K:R | p3x:T | file:PATH

#include "graph.hpp"
#include "labeling.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace antimagic {

inline std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool next_content_line(std::istream& in, std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
        const std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") != std::string::npos) {
            out = body;
            return true;
        }
    }
    return false;
}

inline std::pair<int, int> read_graph_header(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line))
        throw std::runtime_error("graph file: missing header line");
    std::istringstream ls(line);
    std::string tag;
    int n, m;
    if (!(ls >> tag >> n >> m) || tag != "graph")
        throw std::runtime_error("graph file: expected 'graph <n> <m>'");
    return {n, m};
}

inline Graph read_graph(std::istream& in) {
    const auto [n, m] = read_graph_header(in);
    Graph g;
    g.vertex_count = n;
    for (int i = 0; i < m; ++i) {
        std::string line;
        if (!next_content_line(in, line))
            throw std::runtime_error("graph file: expected " + std::to_string(m) + " edges");
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("graph file: bad edge line");
        g.edges.emplace_back(u, v);
    }
    validate_graph(g);
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

inline EdgeLabeling read_labeling(std::istream& in) {
    const auto [n, m] = read_graph_header(in);
    EdgeLabeling L;
    L.graph.vertex_count = n;
    for (int i = 0; i < m; ++i) {
        std::string line;
        if (!next_content_line(in, line))
            throw std::runtime_error("labeling file: expected " + std::to_string(m) + " edges");
        std::istringstream ls(line);
        int u, v, lab;
        if (!(ls >> u >> v >> lab)) throw std::runtime_error("labeling file: bad edge line");
        L.graph.edges.emplace_back(u, v);
        L.labels.push_back(lab);
    }
    validate_graph(L.graph);
    validate_bijection(L);
    return L;
}

inline void write_labeling(std::ostream& out, const EdgeLabeling& L,
                           const std::string& comment = "") {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "graph " << L.graph.vertex_count << " " << L.graph.edge_count() << "\n";
    for (int i = 0; i < L.graph.edge_count(); ++i)
        out << L.graph.edges[i].first << " " << L.graph.edges[i].second << " " << L.labels[i]
            << "\n";
}

// DOT export: vertices annotated with phi, edges with their labels.
inline void write_dot(std::ostream& out, const EdgeLabeling& L) {
    const auto p = phi_profile(L);
    out << "graph antimagic {\n";
    for (int v = 0; v < L.graph.vertex_count; ++v)
        out << "  v" << v << " [label=\"phi=" << p.phi[v] << "\"];\n";
    for (int i = 0; i < L.graph.edge_count(); ++i)
        out << "  v" << L.graph.edges[i].first << " -- v" << L.graph.edges[i].second
            << " [label=\"" << L.labels[i] << "\"];\n";
    out << "}\n";
}

// ---- graph-spec grammar -------------------------------------------------

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline Graph parse_graphspec_term(const std::string& term) {
    const auto parts = split_on(term, ':');
    auto arg = [&](size_t i) {
        if (i >= parts.size()) throw std::runtime_error("graphspec: missing argument in " + term);
        return std::stoi(parts[i]);
    };
    const std::string& kind = parts[0];
    if (kind == "cycle") return cycle(arg(1));
    if (kind == "path") return path_graph(arg(1));
    if (kind == "star") return star(arg(1));
    if (kind == "doublestar") return double_star(arg(1), arg(2));
    if (kind == "jellyfish") return jellyfish(arg(1), arg(2));
    if (kind == "p3x") return t_paths3(arg(1));
    if (kind == "file") {
        if (parts.size() < 2) throw std::runtime_error("graphspec: file needs a path");
        // a path may itself contain ':'; rejoin everything after the tag
        std::string path = term.substr(5);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("graphspec: cannot open " + path);
        return read_graph(in);
    }
    throw std::runtime_error("graphspec: unknown term '" + term + "'");
}

inline Graph parse_graphspec(const std::string& spec) {
    const auto terms = split_on(spec, '+');
    if (terms.empty()) throw std::runtime_error("graphspec: empty spec");
    Graph g = parse_graphspec_term(terms[0]);
    for (size_t i = 1; i < terms.size(); ++i) g = disjoint_union(g, parse_graphspec_term(terms[i]));
    return g;
}

}  // namespace antimagic
