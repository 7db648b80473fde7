#pragma once

// Undirected simple graphs as a vertex count plus a positional edge list.
// Edge order is load-bearing: labelings are stored as arrays parallel to
// the edge list, so no operation may silently reorder edges.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

using Edge = std::pair<int, int>;

struct Graph {
    int vertex_count = 0;
    std::vector<Edge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

inline void validate_graph(const Graph& g) {
    if (g.vertex_count < 0)
        throw std::invalid_argument("graph: negative vertex count");
    std::vector<std::pair<int, int>> seen;
    seen.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("graph: duplicate edge");
}

inline Graph make_graph(int vertex_count, std::vector<Edge> edges) {
    Graph g{vertex_count, std::move(edges)};
    validate_graph(g);
    return g;
}

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (const auto& [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

// ---- family builders ----------------------------------------------------
//
// Canonical orderings (documented so labelings and table ingestion are
// reproducible):
//   cycle(n):        vertices 0..n-1, edges (0,1),(1,2),...,(n-1,0)
//   path(v):         vertices 0..v-1, edges (i,i+1)
//   star(n):         center 0, leaves 1..n, edges (0,i)
//   double_star(a,b):centers 0,1; internal edge (0,1) first, then the a
//                    leaves of center 0, then the b leaves of center 1
//   jellyfish(k,r):  cycle vertices 0..k-1 with cycle edges first, then
//                    pendant edges grouped by cycle vertex; leaf j of
//                    cycle vertex i is vertex k + i*r + j
//   disjoint_union:  left-to-right concatenation with index shift

inline Graph cycle(int n) {
    if (n < 3) throw std::domain_error("cycle: need n >= 3");
    Graph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int v) {
    if (v < 2) throw std::domain_error("path: need at least 2 vertices");
    Graph g;
    g.vertex_count = v;
    for (int i = 0; i + 1 < v; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

inline Graph star(int n) {
    if (n < 1) throw std::domain_error("star: need at least 1 edge");
    Graph g;
    g.vertex_count = n + 1;
    for (int i = 1; i <= n; ++i) g.edges.emplace_back(0, i);
    return g;
}

inline Graph double_star(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("double_star: need a,b >= 1");
    Graph g;
    g.vertex_count = a + b + 2;
    g.edges.emplace_back(0, 1);
    for (int i = 0; i < a; ++i) g.edges.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) g.edges.emplace_back(1, 2 + a + i);
    return g;
}

inline Graph jellyfish(int k, int r) {
    if (k < 3) throw std::domain_error("jellyfish: need k >= 3");
    if (r < 1) throw std::domain_error("jellyfish: need r >= 1");
    Graph g;
    g.vertex_count = k + k * r;
    for (int i = 0; i < k; ++i) g.edges.emplace_back(i, (i + 1) % k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) g.edges.emplace_back(i, k + i * r + j);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    const int shift = a.vertex_count;
    g.vertex_count += b.vertex_count;
    for (const auto& [u, v] : b.edges) g.edges.emplace_back(u + shift, v + shift);
    return g;
}

inline Graph t_paths3(int t) {
    if (t < 0) throw std::domain_error("t_paths3: need t >= 0");
    Graph g;
    g.vertex_count = 3 * t;
    for (int i = 0; i < t; ++i) {
        const int base = 3 * i;
        g.edges.emplace_back(base, base + 1);
        g.edges.emplace_back(base + 1, base + 2);
    }
    return g;
}

// Host-first layout of G union tP3; the t path components follow the host.
inline Graph with_paths(const Graph& host, int t) {
    return disjoint_union(host, t_paths3(t));
}

// ---- component statistics ----------------------------------------------

struct ComponentSummary {
    int component_count = 0;      // q
    int p3_count = 0;             // t'
    bool has_p2 = false;
    int isolated_vertex_count = 0;
    int internal_edge_count = 0;  // k: both endpoints non-leaf
};

inline ComponentSummary summarize_components(const Graph& g) {
    ComponentSummary cs;
    const auto deg = degrees(g);
    for (const auto& [u, v] : g.edges)
        if (deg[u] >= 2 && deg[v] >= 2) ++cs.internal_edge_count;

    // union-find over vertices
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);

    std::vector<int> comp_vertices(g.vertex_count, 0), comp_edges(g.vertex_count, 0);
    for (int v = 0; v < g.vertex_count; ++v) ++comp_vertices[find(v)];
    for (const auto& [u, v] : g.edges) {
        (void)v;
        ++comp_edges[find(u)];
    }
    for (int root = 0; root < g.vertex_count; ++root) {
        if (comp_vertices[root] == 0) continue;
        ++cs.component_count;
        const int nv = comp_vertices[root];
        const int ne = comp_edges[root];
        if (nv == 1 && ne == 0) ++cs.isolated_vertex_count;
        if (nv == 2 && ne == 1) cs.has_p2 = true;
        if (nv == 3 && ne == 2) ++cs.p3_count;  // 2 edges on 3 vertices is a P3
    }
    return cs;
}

// ---- subdivision surgery ------------------------------------------------

struct Subdivision {
    Graph graph;
    // edge_map[i] lists the new indices of old edge i; for the subdivided
    // edge (u,v) the chain is listed from the u end to the v end, so the
    // first entry is the piece incident to u and the last the piece
    // incident to v. Untouched edges map to themselves.
    std::vector<std::vector<int>> edge_map;
    int first_new_vertex = -1;
};

// Replace edge u-v by a path u-w1-...-w_{p-1}-v of p edges. The replaced
// edge's index holds the piece at the u end; the remaining pieces are
// appended in chain order. p=1 is the identity.
inline Subdivision subdivide(const Graph& g, int edge_index, int p) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw std::out_of_range("subdivide: bad edge index");
    if (p < 1) throw std::domain_error("subdivide: need p >= 1");

    Subdivision out;
    out.graph = g;
    out.edge_map.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) out.edge_map[i] = {i};
    if (p == 1) return out;

    const auto [u, v] = g.edges[edge_index];
    out.first_new_vertex = g.vertex_count;
    out.graph.vertex_count += p - 1;

    std::vector<int> chain = {u};
    for (int i = 0; i < p - 1; ++i) chain.push_back(out.first_new_vertex + i);
    chain.push_back(v);

    out.graph.edges[edge_index] = {chain[0], chain[1]};
    out.edge_map[edge_index] = {edge_index};
    for (int i = 1; i < p; ++i) {
        out.edge_map[edge_index].push_back(out.graph.edge_count());
        out.graph.edges.emplace_back(chain[i], chain[i + 1]);
    }
    return out;
}

}  // namespace antimagic
