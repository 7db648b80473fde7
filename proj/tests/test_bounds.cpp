#include <catch2/catch_amalgamated.hpp>

#include "antimagic/bounds.hpp"

#include <random>

using namespace antimagic;

TEST_CASE("sum_s matches the closed form and the literal sum") {
    CHECK(sum_s(3, 0) == 6);
    CHECK(sum_s(3, 6) == 120);
    CHECK(sum_s(3, 7) == 153);
    CHECK(sum_s(3, 9) == 231);
    CHECK(sum_s(5, 13) == 496);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> dm(1, 60), dt(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const long long m = dm(rng), t = dt(rng);
        long long literal = 0;
        for (long long x = 1; x <= m + 2 * t; ++x) literal += x;
        CHECK(sum_s(m, t) == literal);
    }
}

TEST_CASE("least_l values") {
    CHECK(least_l(3, 3, 0) == 0);
    CHECK(least_l(3, 3, 6) == 111);
    CHECK(least_l(3, 3, 7) == 147);
    CHECK(least_l(3, 3, 9) == 234);
    CHECK(least_l(5, 5, 13) == 494);

    // literal reading: the t+n-m smallest sums strictly above m+2t are
    // m+2t+1 .. m+2t+(t+n-m), and l is their total
    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> dn(1, 40), dt(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const long long n = dn(rng), t = dt(rng);
        std::uniform_int_distribution<long long> dm(0, n);  // keep t+n-m >= 0
        const long long m = dm(rng);
        long long literal = 0;
        for (long long i = 1; i <= t + n - m; ++i) literal += m + 2 * t + i;
        CHECK(least_l(n, m, t) == literal);
    }
}

TEST_CASE("threshold and max-phi ceiling") {
    CHECK(threshold(3, 3, 7) == 13);
    CHECK(threshold(3, 3, 8) == 10);
    CHECK(threshold(5, 5, 13) == 15);
    CHECK(threshold(6, 6, 14) == 28);
    CHECK(threshold(6, 6, 15) == 21);
    CHECK(threshold(6, 6, 9) == 48);

    CHECK(max_phi_ceiling(3, 3, 0) == 9);
    CHECK(max_phi_ceiling(3, 3, 6) == 30);
}

TEST_CASE("feasibility filter") {
    const Graph c3 = cycle(3);
    CHECK(feasibility_filter(c3, 8).feasible);   // 190 >= 188
    CHECK_FALSE(feasibility_filter(c3, 9).feasible);  // 231 < 234
    const auto f = feasibility_filter(c3, 9);
    CHECK(f.s == 231);
    CHECK(f.l == 234);
}

TEST_CASE("floor in Q(sqrt2)") {
    auto q = [](long long p, long long r) { return Rational(p, r); };
    CHECK(floor_sqrt2({q(0, 1), q(1, 1)}) == 1);
    CHECK(floor_sqrt2({q(0, 1), q(2, 1)}) == 2);
    CHECK(floor_sqrt2({q(0, 1), q(-1, 1)}) == -2);
    CHECK(floor_sqrt2({q(0, 1), q(100, 1)}) == 141);
    CHECK(floor_sqrt2({q(1, 2), q(1, 2)}) == 1);
    CHECK(floor_sqrt2({q(-3, 1), q(0, 1)}) == -3);
    CHECK(floor_sqrt2({q(73, 2), q(73, 2)}) == 88);  // (1+sqrt2)*36.5

    // definitional property, decided by the exact sign routine
    std::mt19937 rng(17);
    std::uniform_int_distribution<long long> num(-5000, 5000), den(1, 97);
    for (int trial = 0; trial < 2000; ++trial) {
        const SqrtTwoNumber x{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        const long long f = floor_sqrt2(x);
        CHECK(SqrtTwoNumber(f) <= x);
        CHECK(x < SqrtTwoNumber(f + 1));
    }
}

TEST_CASE("sign is exact near zero") {
    // 99/70 and 140/99 straddle sqrt(2) tightly
    CHECK(SqrtTwoNumber{Rational(-99, 70), Rational(1)}.sign() == -1);
    CHECK(SqrtTwoNumber{Rational(-140, 99), Rational(1)}.sign() == 1);
    CHECK(SqrtTwoNumber{Rational(0), Rational(0)}.sign() == 0);
}

TEST_CASE("first bound in exact form") {
    // n = m: (1+sqrt2)(m+1/2)
    const auto b = first_bound_exact(9, 9);
    CHECK(b.a == Rational(19, 2));
    CHECK(b.b == Rational(19, 2));
    CHECK(floor_sqrt2(b) == 22);

    // general shape: (4m-3n+1/2) + (3m-2n+1/2) sqrt2
    std::mt19937 rng(19);
    std::uniform_int_distribution<long long> d(1, 300);
    for (int trial = 0; trial < 200; ++trial) {
        const long long n = d(rng), m = d(rng);
        const auto x = first_bound_exact(n, m);
        CHECK(x.a == Rational(8 * m - 6 * n + 1, 2));
        CHECK(x.b == Rational(6 * m - 4 * n + 1, 2));
    }
}

TEST_CASE("beta for the standard hosts") {
    CHECK(beta_report(cycle(3)).beta == 8);
    CHECK(beta_report(cycle(4)).beta == 10);
    CHECK(beta_report(cycle(5)).beta == 13);
    CHECK(beta_report(cycle(6)).beta == 15);
    CHECK(beta_report(cycle(7)).beta == 18);
    CHECK(beta_report(cycle(8)).beta == 20);
    CHECK(beta_report(cycle(9)).beta == 22);
    CHECK(beta_report(disjoint_union(cycle(3), cycle(3))).beta == 15);

    const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(beta_report(k4).beta == 27);

    // pendant-heavy host: both bounds in play, r >= 11 gives beta 6r+22
    for (int r = 11; r <= 14; ++r)
        CHECK(beta_report(jellyfish(3, r)).beta == 6 * r + 22);
    const auto j11 = beta_report(jellyfish(3, 11));
    CHECK(j11.bound_first_floor == 88);
    CHECK(j11.bound_second == 88);  // 2*36 + 5*3 + 1
}

TEST_CASE("beta report flags the hypotheses") {
    CHECK(beta_report(cycle(5)).valid);
    CHECK_FALSE(beta_report(path_graph(2)).valid);

    Graph g = cycle(3);
    g.vertex_count = 4;  // add an isolated vertex
    CHECK_FALSE(beta_report(g).valid);

    const auto r = beta_report(with_paths(cycle(3), 2));
    CHECK(r.valid);
    CHECK(r.t_prime == 2);
    CHECK(r.k == 3);
}
