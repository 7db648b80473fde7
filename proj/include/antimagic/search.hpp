#pragma once

// Exhaustive decision procedures: budget-limited backtracking over
// label-to-edge assignments, the factorial enumeration oracle, and exact
// tau computation for small graphs.

#include "bounds.hpp"
#include "labeling.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

namespace antimagic {

enum class SearchStatus { Found, NotAntimagic, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotAntimagic;
    std::optional<EdgeLabeling> labeling;
    long long nodes_explored = 0;
};

namespace detail {

// Fixed edge order: edges grouped by component, and within a component
// greedily preferring edges that close vertices early so the duplicate-phi
// prune fires as soon as possible. Deterministic, so single-threaded node
// counts are reproducible.
inline std::vector<int> search_edge_order(const Graph& g) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);

    std::vector<int> order;
    std::vector<char> used(g.edge_count(), 0), seen(g.vertex_count, 0);
    std::vector<int> remaining = degrees(g);

    for (int i = 0; i < g.edge_count(); ++i) {
        if (used[i]) continue;
        const int comp = find(g.edges[i].first);
        int pending = 0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!used[e] && find(g.edges[e].first) == comp) ++pending;
        while (pending > 0) {
            int best = -1, best_score = -1;
            for (int e = 0; e < g.edge_count(); ++e) {
                if (used[e] || find(g.edges[e].first) != comp) continue;
                const auto& [u, v] = g.edges[e];
                // prefer edges about to close a vertex, then touching seen ones
                int score = 0;
                if (seen[u]) score += 2 + (remaining[u] == 1 ? 4 : 0);
                if (seen[v]) score += 2 + (remaining[v] == 1 ? 4 : 0);
                if (score > best_score) {
                    best_score = score;
                    best = e;
                }
            }
            used[best] = 1;
            order.push_back(best);
            seen[g.edges[best].first] = seen[g.edges[best].second] = 1;
            --remaining[g.edges[best].first];
            --remaining[g.edges[best].second];
            --pending;
        }
    }
    return order;
}

struct SearchShared {
    std::atomic<long long> nodes{0};
    std::atomic<bool> found{false};
    std::atomic<bool> out_of_budget{false};
    long long budget = std::numeric_limits<long long>::max();
};

class Backtracker {
  public:
    Backtracker(const Graph& g, const std::vector<int>& order, SearchShared& shared)
        : g_(g), order_(order), shared_(shared), labels_(g.edge_count(), 0),
          remaining_(degrees(g)), phi_(g.vertex_count, 0), label_used_(g.edge_count() + 1, 0),
          phi_used_(static_cast<long long>(g.edge_count()) * (g.edge_count() + 1) / 2 + 1, 0) {
        // isolated vertices are closed from the start with phi 0
        for (int v = 0; v < g.vertex_count; ++v)
            if (remaining_[v] == 0) {
                if (phi_used_[0]) clash_at_init_ = true;
                phi_used_[0] = 1;
            }
    }

    bool clash_at_init() const { return clash_at_init_; }

    // Explore assignments for position pos onward; first_label restricts
    // the label of position 0 (for splitting work across threads), -1
    // meaning unrestricted.
    bool run(int pos, int first_label) {
        if (shared_.found.load(std::memory_order_relaxed)) return false;
        if (pos == static_cast<int>(order_.size())) return true;
        const int e = order_[pos];
        const auto [u, v] = g_.edges[e];
        for (int lab = 1; lab <= g_.edge_count(); ++lab) {
            if (label_used_[lab]) continue;
            if (pos == 0 && first_label != -1 && lab != first_label) continue;
            const long long n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if (n > shared_.budget) {
                shared_.out_of_budget.store(true, std::memory_order_relaxed);
                return false;
            }
            label_used_[lab] = 1;
            labels_[e] = lab;
            phi_[u] += lab;
            phi_[v] += lab;
            --remaining_[u];
            --remaining_[v];
            bool ok = true;
            int closed = 0;  // bit 1: u closed, bit 2: v closed
            if (remaining_[u] == 0) {
                if (phi_used_[phi_[u]]) ok = false;
                else {
                    phi_used_[phi_[u]] = 1;
                    closed |= 1;
                }
            }
            if (ok && remaining_[v] == 0) {
                if (phi_used_[phi_[v]]) ok = false;
                else {
                    phi_used_[phi_[v]] = 1;
                    closed |= 2;
                }
            }
            if (ok && run(pos + 1, first_label)) return true;
            if (closed & 1) phi_used_[phi_[u]] = 0;
            if (closed & 2) phi_used_[phi_[v]] = 0;
            ++remaining_[u];
            ++remaining_[v];
            phi_[u] -= lab;
            phi_[v] -= lab;
            labels_[e] = 0;
            label_used_[lab] = 0;
            if (shared_.found.load(std::memory_order_relaxed) ||
                shared_.out_of_budget.load(std::memory_order_relaxed))
                return false;
        }
        return false;
    }

    std::vector<int> labels() const { return labels_; }

  private:
    const Graph& g_;
    const std::vector<int>& order_;
    SearchShared& shared_;
    std::vector<int> labels_;
    std::vector<int> remaining_;
    std::vector<long long> phi_;
    std::vector<char> label_used_;
    std::vector<char> phi_used_;  // phi values are at most m(m+1)/2
    bool clash_at_init_ = false;
};

}  // namespace detail

inline SearchOutcome search_antimagic(const Graph& g, long long budget,
                                      int threads = 1) {
    if (g.edge_count() < 1) throw std::domain_error("search_antimagic: need m >= 1");

    SearchOutcome out;

    // Infeasibility certificate first: with t the number of P3 components
    // and the host the rest, s < l rules the graph out with zero nodes.
    const auto sp = split_p3_components(g);
    const long long s = sum_s(sp.host_m, sp.t);
    const long long l = least_l(sp.host_n, sp.host_m, sp.t);
    if (s < l) return out;  // NotAntimagic, 0 nodes

    const auto order = detail::search_edge_order(g);
    detail::SearchShared shared;
    shared.budget = budget;

    if (threads <= 1) {
        detail::Backtracker bt(g, order, shared);
        if (!bt.clash_at_init() && bt.run(0, -1)) {
            out.status = SearchStatus::Found;
            out.labeling = EdgeLabeling{g, bt.labels()};
        } else if (shared.out_of_budget.load()) {
            out.status = SearchStatus::BudgetExceeded;
        }
        out.nodes_explored = shared.nodes.load();
        return out;
    }

    // fan the first edge's label choices out across workers
    std::optional<EdgeLabeling> witness;
    std::mutex witness_mutex;
    std::atomic<int> next_label{1};
    auto worker = [&]() {
        detail::Backtracker bt(g, order, shared);
        if (bt.clash_at_init()) return;
        for (;;) {
            const int lab = next_label.fetch_add(1);
            if (lab > g.edge_count()) return;
            if (shared.found.load() || shared.out_of_budget.load()) return;
            if (bt.run(0, lab)) {
                std::lock_guard<std::mutex> lock(witness_mutex);
                if (!shared.found.exchange(true)) witness = EdgeLabeling{g, bt.labels()};
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (witness) {
        out.status = SearchStatus::Found;
        out.labeling = std::move(witness);
    } else if (shared.out_of_budget.load()) {
        out.status = SearchStatus::BudgetExceeded;
    }
    out.nodes_explored = shared.nodes.load();
    return out;
}

inline SearchOutcome search_antimagic(const Graph& g) {
    return search_antimagic(g, std::numeric_limits<long long>::max(), 1);
}

// Independent oracle: try every permutation of 1..m. Only for m <= 9.
inline SearchOutcome oracle_enumerate(const Graph& g) {
    if (g.edge_count() < 1 || g.edge_count() > 9)
        throw std::domain_error("oracle_enumerate: need 1 <= m <= 9");
    const int m = g.edge_count();
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    SearchOutcome out;
    do {
        ++out.nodes_explored;
        EdgeLabeling L{g, labels};
        const auto p = phi_profile(L);
        auto phis = p.phi;
        std::sort(phis.begin(), phis.end());
        if (std::adjacent_find(phis.begin(), phis.end()) == phis.end()) {
            out.status = SearchStatus::Found;
            out.labeling = std::move(L);
            return out;
        }
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

// ---- exact tau ----------------------------------------------------------

struct TauResult {
    // tau semantics: the largest t with G union t'P3 antimagic for all
    // t' <= t; minus infinity when G itself is not antimagic; a lower
    // bound when the scan stopped at t_max or ran out of budget.
    enum class Kind { Exact, MinusInfinity, LowerBound } kind = Kind::MinusInfinity;
    long long tau = 0;
    std::vector<SearchOutcome> per_t;
};

inline TauResult tau_exact(const Graph& g, int t_max, long long budget) {
    TauResult r;
    for (int t = 0; t <= t_max; ++t) {
        auto outcome = search_antimagic(with_paths(g, t), budget, 1);
        const auto status = outcome.status;
        r.per_t.push_back(std::move(outcome));
        if (status == SearchStatus::NotAntimagic) {
            if (t == 0) {
                r.kind = TauResult::Kind::MinusInfinity;
            } else {
                r.kind = TauResult::Kind::Exact;
                r.tau = t - 1;
            }
            return r;
        }
        if (status == SearchStatus::BudgetExceeded) {
            if (t == 0) {
                r.kind = TauResult::Kind::LowerBound;
                r.tau = -1;  // nothing established
            } else {
                r.kind = TauResult::Kind::LowerBound;
                r.tau = t - 1;
            }
            return r;
        }
    }
    r.kind = TauResult::Kind::LowerBound;
    r.tau = t_max;
    return r;
}

}  // namespace antimagic
