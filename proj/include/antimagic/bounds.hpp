#pragma once

// Exact evaluation of the antimagicness bounds for G union tP3: the label
// total s, the forced-large total l, the two upper bounds on t, their
// floor beta, the t+s-l extension threshold, and the max-phi ceiling.
// No floating point anywhere in this header.

#include "graph.hpp"
#include "sqrt2.hpp"

namespace antimagic {

// s(G,t) = sum of 1..(m+2t) = 2t^2 + (2m+1)t + m(m+1)/2
inline long long sum_s(long long m, long long t) {
    return 2 * t * t + (2 * m + 1) * t + m * (m + 1) / 2;
}

// l(G,t) = (t+n-m)(5t+n+m+1)/2, the least possible total of the t+n-m
// vertex sums forced above m+2t. Raw formula value even when t+n-m < 0;
// callers wanting the clamped "sum of least values" semantics clamp at 0.
inline long long least_l(long long n, long long m, long long t) {
    return (t + n - m) * (5 * t + n + m + 1) / 2;
}

// Minimum label size on two incident edges enabling the threshold extension.
inline long long threshold(long long n, long long m, long long t) {
    return t + sum_s(m, t) - least_l(n, m, t);
}

// Upper bound on every vertex sum of an antimagic labeling of G union tP3.
inline long long max_phi_ceiling(long long n, long long m, long long t) {
    return n + 3 * t + sum_s(m, t) - least_l(n, m, t);
}

struct BoundReport {
    long long n = 0, m = 0, k = 0, t_prime = 0;
    SqrtTwoNumber bound_first;       // (3+2sqrt2)(m-n) + (1+sqrt2)(m+1/2), exact
    long long bound_first_floor = 0;
    long long bound_second = 0;      // 2m + 5(k-t') + 1
    long long beta = 0;              // min of the floors
    bool valid = false;              // hypotheses: no isolated vertex, no P2 component

    long long s_at(long long t) const { return sum_s(m, t); }
};

inline SqrtTwoNumber first_bound_exact(long long n, long long m) {
    // (3+2sqrt2)(m-n) + (1+sqrt2)(m+1/2)
    const SqrtTwoNumber c1{Rational(3), Rational(2)};
    const SqrtTwoNumber c2{Rational(1), Rational(1)};
    const SqrtTwoNumber mn{Rational(m - n), Rational(0)};
    const SqrtTwoNumber mh{Rational(2 * m + 1, 2), Rational(0)};
    return c1 * mn + c2 * mh;
}

inline BoundReport beta_report(const Graph& g) {
    const auto cs = summarize_components(g);
    BoundReport r;
    r.n = g.vertex_count;
    r.m = g.edge_count();
    r.k = cs.internal_edge_count;
    r.t_prime = cs.p3_count;
    r.valid = cs.isolated_vertex_count == 0 && !cs.has_p2;
    r.bound_first = first_bound_exact(r.n, r.m);
    r.bound_first_floor = floor_sqrt2(r.bound_first);
    r.bound_second = 2 * r.m + 5 * (r.k - r.t_prime) + 1;
    r.beta = std::min(r.bound_first_floor, r.bound_second);
    return r;
}

struct Feasibility {
    bool feasible = true;
    long long s = 0, l = 0;
};

// Infeasible iff s < l: the forced-large vertex sums alone would exceed
// the label total, so G union tP3 is not antimagic and no search is needed.
inline Feasibility feasibility_filter(const Graph& g, long long t) {
    Feasibility f;
    f.s = sum_s(g.edge_count(), t);
    f.l = least_l(g.vertex_count, g.edge_count(), t);
    f.feasible = f.s >= f.l;
    return f;
}

}  // namespace antimagic
