#pragma once

// Edge labelings, phi-value computation, the antimagic verifier, and the
// hypothesis checkers feeding the two subdivision-extension mechanisms.

#include "bounds.hpp"
#include "graph.hpp"

#include <map>
#include <tuple>

namespace antimagic {

struct EdgeLabeling {
    Graph graph;
    std::vector<int> labels;  // parallel to graph.edges; a permutation of 1..m
};

// Throws naming the offending value when labels is not a permutation of 1..m.
inline void validate_bijection(const EdgeLabeling& L) {
    const int m = L.graph.edge_count();
    if (static_cast<int>(L.labels.size()) != m)
        throw std::invalid_argument("labeling: label array size does not match edge count");
    std::vector<char> seen(m + 1, 0);
    for (int x : L.labels) {
        if (x < 1 || x > m)
            throw std::invalid_argument("labeling: label " + std::to_string(x) +
                                        " outside 1.." + std::to_string(m));
        if (seen[x])
            throw std::invalid_argument("labeling: label " + std::to_string(x) + " repeated");
        seen[x] = 1;
    }
}

struct PhiProfile {
    std::vector<long long> phi;  // parallel to the vertex list
};

inline PhiProfile phi_profile(const EdgeLabeling& L) {
    validate_bijection(L);
    PhiProfile p;
    p.phi.assign(L.graph.vertex_count, 0);
    for (int i = 0; i < L.graph.edge_count(); ++i) {
        const auto& [u, v] = L.graph.edges[i];
        p.phi[u] += L.labels[i];
        p.phi[v] += L.labels[i];
    }
    return p;
}

struct VerifyReport {
    bool antimagic = false;
    // every colliding pair (u, v, shared phi), u < v, ordered by vertex index
    std::vector<std::tuple<int, int, long long>> duplicate_pairs;
    long long max_phi = 0;
};

inline VerifyReport verify_antimagic(const EdgeLabeling& L) {
    const auto p = phi_profile(L);
    VerifyReport r;
    std::map<long long, std::vector<int>> by_phi;
    for (int v = 0; v < L.graph.vertex_count; ++v) {
        by_phi[p.phi[v]].push_back(v);
        r.max_phi = std::max(r.max_phi, p.phi[v]);
    }
    for (const auto& [value, verts] : by_phi)
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                r.duplicate_pairs.emplace_back(verts[i], verts[j], value);
    std::sort(r.duplicate_pairs.begin(), r.duplicate_pairs.end());
    r.antimagic = r.duplicate_pairs.empty();
    return r;
}

inline std::vector<std::vector<int>> incident_edges(const Graph& g) {
    std::vector<std::vector<int>> inc(g.vertex_count);
    for (int i = 0; i < g.edge_count(); ++i) {
        inc[g.edges[i].first].push_back(i);
        inc[g.edges[i].second].push_back(i);
    }
    return inc;
}

// Degree-2 vertices whose two incident edges carry the labels m' and m'-1,
// reported only when additionally max phi <= 2m'-1 holds globally. These
// are exactly the vertices at which the two-largest-labels subdivision
// extension may be applied.
inline std::vector<int> check_two_largest_hypothesis(const EdgeLabeling& L) {
    const auto p = phi_profile(L);
    const long long m = L.graph.edge_count();
    long long max_phi = 0;
    for (long long x : p.phi) max_phi = std::max(max_phi, x);
    if (max_phi > 2 * m - 1) return {};

    const auto inc = incident_edges(L.graph);
    std::vector<int> out;
    for (int v = 0; v < L.graph.vertex_count; ++v) {
        if (inc[v].size() != 2) continue;
        const int a = L.labels[inc[v][0]];
        const int b = L.labels[inc[v][1]];
        if (std::min(a, b) == m - 1 && std::max(a, b) == m) out.push_back(v);
    }
    return out;
}

struct ThresholdQualifier {
    int vertex;
    int edge_a, edge_b;  // the two incident host edges, both labeled >= t+s-l
};

// Internal form: host delimited by an explicit edge membership mask plus
// the host's (n, m) for the threshold value.
inline std::vector<ThresholdQualifier> check_threshold_hypothesis_masked(
    const EdgeLabeling& L, const std::vector<char>& host_edge, const std::vector<char>& host_vertex,
    long long host_n, long long host_m, long long t) {
    validate_bijection(L);
    if (host_m < host_n) return {};  // the extension argument needs m >= n
    const long long thr = threshold(host_n, host_m, t);

    std::vector<std::vector<int>> inc(L.graph.vertex_count);
    for (int i = 0; i < L.graph.edge_count(); ++i) {
        if (!host_edge[i]) continue;
        inc[L.graph.edges[i].first].push_back(i);
        inc[L.graph.edges[i].second].push_back(i);
    }
    const auto deg = degrees(L.graph);
    std::vector<ThresholdQualifier> out;
    for (int v = 0; v < L.graph.vertex_count; ++v) {
        if (!host_vertex[v] || deg[v] != 2 || inc[v].size() != 2) continue;
        if (L.labels[inc[v][0]] >= thr && L.labels[inc[v][1]] >= thr)
            out.push_back({v, inc[v][0], inc[v][1]});
    }
    return out;
}

// Host-first layout: the host subgraph occupies vertices [0, host_n) and
// edges [0, host_m); everything after is the t P3 components.
inline std::vector<ThresholdQualifier> check_threshold_hypothesis(const EdgeLabeling& L,
                                                                  long long host_n,
                                                                  long long host_m, long long t) {
    std::vector<char> he(L.graph.edge_count(), 0), hv(L.graph.vertex_count, 0);
    for (long long i = 0; i < host_m; ++i) he[i] = 1;
    for (long long v = 0; v < host_n; ++v) hv[v] = 1;
    return check_threshold_hypothesis_masked(L, he, hv, host_n, host_m, t);
}

// Split an arbitrary graph into (host, t): t counts the P3 components and
// the host is everything else. Returns per-edge and per-vertex host masks.
struct P3Split {
    int t = 0;
    long long host_n = 0, host_m = 0;
    std::vector<char> host_edge, host_vertex;
};

inline P3Split split_p3_components(const Graph& g) {
    P3Split sp;
    sp.host_edge.assign(g.edge_count(), 1);
    sp.host_vertex.assign(g.vertex_count, 1);

    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);
    std::vector<int> nv(g.vertex_count, 0), ne(g.vertex_count, 0);
    for (int v = 0; v < g.vertex_count; ++v) ++nv[find(v)];
    for (const auto& [u, v] : g.edges) {
        (void)v;
        ++ne[find(u)];
    }
    for (int v = 0; v < g.vertex_count; ++v) {
        const int r = find(v);
        if (nv[r] == 3 && ne[r] == 2) sp.host_vertex[v] = 0;
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (!sp.host_vertex[g.edges[i].first]) sp.host_edge[i] = 0;
    for (int r = 0; r < g.vertex_count; ++r)
        if (find(r) == r && nv[r] == 3 && ne[r] == 2) ++sp.t;
    for (char c : sp.host_vertex) sp.host_n += c;
    for (char c : sp.host_edge) sp.host_m += c;
    return sp;
}

}  // namespace antimagic
