#pragma once

// Constructive labelings: the jellyfish J(C3,r) union tP3 family, the two
// subdivision extensions, the cycle prepend, and the pipelines assembling
// them with the embedded tables into C_n union tP3 and C_n union C3 union
// tP3 labelings. Every constructor verifies its own output before
// returning; a failure there is a transcription bug, not a caller error.

#include "blocks.hpp"
#include "bounds.hpp"
#include "labeling.hpp"
#include "tables.hpp"

#include <map>

namespace antimagic {

inline void verify_or_die(const EdgeLabeling& L, const char* who) {
    if (!verify_antimagic(L).antimagic)
        throw std::logic_error(std::string(who) + ": constructed labeling failed verification");
}

inline int edge_index_of_label(const EdgeLabeling& L, int label) {
    for (int i = 0; i < L.graph.edge_count(); ++i)
        if (L.labels[i] == label) return i;
    throw std::logic_error("edge_index_of_label: label not present");
}

// One step of the two-largest mechanism: `at` is a degree-2 vertex whose
// incident edges carry the labels M and M-1. The edge labeled M is split;
// the piece hugging `at` takes the fresh label M+1 and the far piece keeps
// M. The new vertex then carries the (new) two largest labels, so the step
// iterates. Returns the new qualifying vertex.
inline int two_largest_step(EdgeLabeling& L, int at) {
    const int M = L.graph.edge_count();
    const int idx = edge_index_of_label(L, M);
    const auto [u, v] = L.graph.edges[idx];
    if (u != at && v != at) throw std::logic_error("two_largest_step: top edge not at vertex");

    auto sub = subdivide(L.graph, idx, 2);
    const int w = sub.first_new_vertex;
    L.graph = std::move(sub.graph);
    if (u == at) {
        // chain at-w-v: old index now holds (at,w)
        L.labels[idx] = M + 1;
        L.labels.push_back(M);
    } else {
        // chain u-w-at: appended edge (w,at) hugs `at`
        L.labels.push_back(M + 1);
    }
    return w;
}

// Subdivide the edge labeled m' into p edges, assigning the fresh labels
// m'+1, m'+2, ... to the piece adjacent to the current qualifying vertex
// at every step. Requires the two-largest hypothesis at `at`.
inline EdgeLabeling extend_two_largest(const EdgeLabeling& L, int at, int p) {
    if (p < 1) throw std::domain_error("extend_two_largest: need p >= 1");
    const auto q = check_two_largest_hypothesis(L);
    if (std::find(q.begin(), q.end(), at) == q.end())
        throw std::invalid_argument("extend_two_largest: hypothesis not satisfied at vertex");
    EdgeLabeling out = L;
    int cur = at;
    for (int step = 0; step < p - 1; ++step) cur = two_largest_step(out, cur);
    verify_or_die(out, "extend_two_largest");
    return out;
}

// Threshold extension on a host-first G union tP3 labeling: insert edges
// labeled m+2t+1 (and m+2t+2) next to the qualifying vertex, then hand the
// remaining subdivisions to the two-largest mechanism.
inline EdgeLabeling extend_threshold(const EdgeLabeling& L, long long host_n, long long host_m,
                                     long long t, int at, int p) {
    if (p < 1) throw std::domain_error("extend_threshold: need p >= 1");
    const auto quals = check_threshold_hypothesis(L, host_n, host_m, t);
    const ThresholdQualifier* q = nullptr;
    for (const auto& c : quals)
        if (c.vertex == at) q = &c;
    if (!q) throw std::invalid_argument("extend_threshold: hypothesis not satisfied at vertex");

    EdgeLabeling out = L;
    if (p == 1) return out;

    const int mprime = out.graph.edge_count();  // host_m + 2t
    // Split the lower-labeled of the two qualifying edges: the kept vertex
    // then sums to higher + m'+2 and the far one to lower + m'+1, which
    // differ by at least 2. Splitting the other way collides when the two
    // labels are consecutive.
    int idx = out.labels[q->edge_a] < out.labels[q->edge_b] ? q->edge_a : q->edge_b;

    auto insert_near = [&](int edge_idx, int fresh_label) {
        const auto [u, v] = out.graph.edges[edge_idx];
        auto sub = subdivide(out.graph, edge_idx, 2);
        const int w = sub.first_new_vertex;
        out.graph = std::move(sub.graph);
        if (u == at) {
            const int old = out.labels[edge_idx];
            out.labels[edge_idx] = fresh_label;
            out.labels.push_back(old);
        } else {
            out.labels.push_back(fresh_label);
        }
        return w;
    };

    int w = insert_near(idx, mprime + 1);
    if (p >= 3) {
        // the second insertion splits the fresh edge, again hugging `at`;
        // afterwards the middle vertex carries the two largest labels
        const int fresh_idx = edge_index_of_label(out, mprime + 1);
        int w2 = insert_near(fresh_idx, mprime + 2);
        int cur = w2;
        (void)w;
        for (int step = 0; step < p - 3; ++step) cur = two_largest_step(out, cur);
    }
    verify_or_die(out, "extend_threshold");
    return out;
}

// Add a q-cycle carrying the largest fresh labels to a labeled 2-regular
// host union tP3 (host-first layout). The triangle is appended after the
// paths; for q >= 4 its top edge is grown by the two-largest mechanism.
inline EdgeLabeling prepend_cycle(const EdgeLabeling& L, long long host_n, long long t, int q) {
    if (q < 3) throw std::domain_error("prepend_cycle: need q >= 3");
    validate_bijection(L);
    const auto deg = degrees(L.graph);
    if (host_n + 3 * t != L.graph.vertex_count || host_n + 2 * t != L.graph.edge_count())
        throw std::invalid_argument("prepend_cycle: layout does not match host_n and t");
    for (long long v = 0; v < host_n; ++v)
        if (deg[v] != 2) throw std::invalid_argument("prepend_cycle: host is not 2-regular");

    EdgeLabeling out = L;
    const int M = out.graph.edge_count() + 3;
    const int x = out.graph.vertex_count;
    out.graph.vertex_count += 3;
    out.graph.edges.emplace_back(x, x + 1);
    out.graph.edges.emplace_back(x + 1, x + 2);
    out.graph.edges.emplace_back(x + 2, x);
    out.labels.push_back(M - 2);
    out.labels.push_back(M - 1);
    out.labels.push_back(M);  // vertex x+2 carries M-1 and M

    if (q > 3) {
        int cur = x + 2;
        for (int step = 0; step < q - 3; ++step) cur = two_largest_step(out, cur);
    }
    verify_or_die(out, "prepend_cycle");
    return out;
}

// ---- the jellyfish construction ----------------------------------------

namespace detail {

// Distribute le_par parts over the three cycle vertices: block 0 of the
// family holds the vertices' partial sums, so each part is routed to the
// vertex owning the partial sum it contains. Pendant labels are written
// into the vertex's next free pendant slots.
inline void assign_parts_to_cycle(EdgeLabeling& L, int r, const BlockPartition& parts,
                                  const std::map<long long, int>& vertex_by_partial,
                                  std::vector<int>& next_slot) {
    for (const auto& part : parts.parts) {
        const int v = vertex_by_partial.at(part[0]);
        for (size_t i = 1; i < part.size(); ++i) {
            const int slot = next_slot[v]++;
            L.labels[3 + v * r + slot] = static_cast<int>(part[i]);
        }
    }
}

}  // namespace detail

// Antimagic labeling of J(C3,r) union tP3 for r >= 11 and 0 <= t <= 6r+22.
inline EdgeLabeling build_jellyfish_c3_labeling(int r, int t) {
    if (r < 11) throw std::domain_error("build_jellyfish_c3_labeling: need r >= 11");
    if (t < 0 || t > 6 * r + 22)
        throw std::domain_error("build_jellyfish_c3_labeling: need 0 <= t <= 6r+22");

    EdgeLabeling L;
    L.graph = with_paths(jellyfish(3, r), t);
    L.labels.assign(L.graph.edge_count(), 0);
    const int mprime = 3 * r + 3 + 2 * t;
    const int path_edge = 3 + 3 * r;  // first path edge index
    auto set_path = [&](int j, int a, int b) {
        L.labels[path_edge + 2 * j] = a;
        L.labels[path_edge + 2 * j + 1] = b;
    };
    std::vector<int> next_slot(3, 0);

    if (t <= 2) {
        // top three labels on the cycle; partial sums 2m'-3..2m'-1
        L.labels[0] = mprime - 2;  // e1 = v0v1
        L.labels[1] = mprime - 1;  // e2 = v1v2
        L.labels[2] = mprime;      // e3 = v2v0
        const std::map<long long, int> vertex_by_partial = {
            {2LL * mprime - 2, 0}, {2LL * mprime - 3, 1}, {2LL * mprime - 1, 2}};
        if (t >= 1) set_path(0, mprime - 3, mprime - 4);
        if (t == 2) set_path(1, mprime - 5, mprime - 6);

        BlockFamily fam;
        fam.k = 3;
        fam.starts.push_back(2LL * mprime - 3);
        for (int i = 0; i < r; ++i) fam.starts.push_back(3LL * i + 1);  // [1,3r]
        detail::assign_parts_to_cycle(L, r, le_par_partition(fam), vertex_by_partial, next_slot);
    } else {
        // step 1: three fixed paths and the cycle; cycle partial sums 17..19
        set_path(0, 2, 6);
        set_path(1, 4, 5);
        set_path(2, 3, 7);
        L.labels[0] = 8;
        L.labels[1] = 9;
        L.labels[2] = 10;
        const std::map<long long, int> vertex_by_partial = {{18, 0}, {17, 1}, {19, 2}};

        // step 2: pendant edges
        int pool_lo, paired_from;
        if (t % 2 == 0 || t == 3) {
            // fixed equal-sum pendant quadruples, then blocks from [22,3r+9]
            const std::map<long long, std::vector<int>> fixed = {
                {17, {1, 17, 20, 21}}, {18, {12, 13, 16, 18}}, {19, {11, 14, 15, 19}}};
            for (const auto& [partial, labels] : fixed) {
                const int v = vertex_by_partial.at(partial);
                for (int x : labels) L.labels[3 + v * r + next_slot[v]++] = x;
            }
            BlockFamily fam;
            fam.k = 3;
            fam.starts.push_back(76);
            for (int i = 0; i < r - 4; ++i) fam.starts.push_back(22LL + 3 * i);
            const std::map<long long, int> by_sum = {
                {76, vertex_by_partial.at(17)}, {77, vertex_by_partial.at(18)},
                {78, vertex_by_partial.at(19)}};
            detail::assign_parts_to_cycle(L, r, le_par_partition(fam), by_sum, next_slot);
            pool_lo = 3 * r + 10;
            paired_from = 3;
        } else {
            // t odd, t != 3: blocks from [11,3r+10] straight onto the partials
            BlockFamily fam;
            fam.k = 3;
            fam.starts.push_back(17);
            for (int i = 0; i < r; ++i) fam.starts.push_back(11LL + 3 * i);
            detail::assign_parts_to_cycle(L, r, le_par_partition(fam), vertex_by_partial,
                                          next_slot);
            set_path(3, 1, mprime);
            pool_lo = 3 * r + 11;
            paired_from = 4;
        }

        // step 3: pair the unused labels onto the remaining paths; the two
        // consecutive halves form a 2-row family, so part sums (the path
        // centers' phi values) are consecutive
        const int kk = t - paired_from;
        if (kk > 0) {
            BlockFamily fam;
            fam.k = kk;
            fam.starts = {pool_lo, pool_lo + static_cast<long long>(kk)};
            const auto parts = le_par_partition(fam);
            for (int j = 0; j < kk; ++j)
                set_path(paired_from + j, static_cast<int>(parts.parts[j][0]),
                         static_cast<int>(parts.parts[j][1]));
        }
    }

    validate_bijection(L);
    verify_or_die(L, "build_jellyfish_c3_labeling");
    return L;
}

// ---- pipelines ----------------------------------------------------------

// Base windows for the threshold pipeline: for 7 <= t <= 22, the smallest
// cycle length whose table window contains t.
inline int cycle_base_for_t(int t) {
    if (t <= 8) return 3;
    if (t <= 10) return 4;
    if (t <= 13) return 5;
    if (t <= 15) return 6;
    if (t <= 18) return 7;
    if (t <= 20) return 8;
    return 9;
}

// Antimagic labeling of C_n union tP3 for t <= min(22, beta(C_n)).
inline EdgeLabeling construct_cycle(int n, int t) {
    if (n < 3) throw std::domain_error("construct_cycle: need n >= 3");
    if (t < 0 || t > 22 || t > beta_report(cycle(n)).beta)
        throw std::domain_error("construct_cycle: t outside min(22, beta(C_n))");

    if (t <= 6) {
        EdgeLabeling base = embedded_table(TableFamily::C3, 3, t);
        if (n == 3) return base;
        return extend_two_largest(base, 2, n - 2);  // vertex 2 holds 2t+2, 2t+3
    }
    const int n0 = cycle_base_for_t(t);
    EdgeLabeling base = embedded_table(TableFamily::CYCLE, n0, t);
    if (n == n0) return base;
    const auto quals = check_threshold_hypothesis(base, n0, n0, t);
    if (quals.empty()) throw std::logic_error("construct_cycle: table row lost its qualifier");
    return extend_threshold(base, n0, n0, t, quals.front().vertex, n - n0 + 1);
}

// Antimagic labeling of C_n union C3 union tP3 for t <= 15.
inline EdgeLabeling construct_union_cycle_c3(int n, int t) {
    if (n < 3) throw std::domain_error("construct_union_cycle_c3: need n >= 3");
    if (t < 0) throw std::domain_error("construct_union_cycle_c3: need t >= 0");
    if (t > 15)
        throw std::domain_error("construct_union_cycle_c3: t > 15 not constructed");

    if (t <= 8) {
        EdgeLabeling base = t <= 6 ? embedded_table(TableFamily::C3, 3, t)
                                   : embedded_table(TableFamily::CYCLE, 3, t);
        return prepend_cycle(base, 3, t, n);
    }
    EdgeLabeling base = embedded_table(TableFamily::TWO_C3, 6, t);
    if (t <= 13) {
        const auto quals = check_two_largest_hypothesis(base);
        if (quals.empty())
            throw std::logic_error("construct_union_cycle_c3: table row lost its qualifier");
        if (n == 3) return base;
        return extend_two_largest(base, quals.front(), n - 2);
    }
    const auto quals = check_threshold_hypothesis(base, 6, 6, t);
    if (quals.empty())
        throw std::logic_error("construct_union_cycle_c3: table row lost its qualifier");
    if (n == 3) return base;
    return extend_threshold(base, 6, 6, t, quals.front().vertex, n - 2);
}

}  // namespace antimagic
