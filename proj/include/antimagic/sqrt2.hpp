#pragma once

// Exact arithmetic in Q(sqrt(2)). Values a + b*sqrt(2) with rational a, b.
// Comparisons and floors are decided purely in integer arithmetic: the
// bounds this type carries sit within O(1/(n+m)) of an integer, which a
// double cannot floor reliably.

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace antimagic {

using Rational = boost::rational<long long>;

inline long long floor_rational(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

// floor(sqrt(x)) for non-negative integers, Newton iteration on __int128.
inline long long isqrt(__int128 x) {
    if (x < 0) throw std::domain_error("isqrt: negative argument");
    if (x == 0) return 0;
    // Newton iteration from above; the sequence is strictly decreasing
    // until it reaches floor(sqrt(x)), which avoids the classic two-cycle.
    __int128 r = x;
    __int128 next = (r + 1) / 2;
    while (next < r) {
        r = next;
        next = (r + x / r) / 2;
    }
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<long long>(r);
}

struct SqrtTwoNumber {
    Rational a{0};  // rational part
    Rational b{0};  // coefficient of sqrt(2)

    SqrtTwoNumber() = default;
    SqrtTwoNumber(Rational ra, Rational rb) : a(ra), b(rb) {}
    explicit SqrtTwoNumber(long long x) : a(x), b(0) {}

    SqrtTwoNumber operator+(const SqrtTwoNumber& o) const { return {a + o.a, b + o.b}; }
    SqrtTwoNumber operator-(const SqrtTwoNumber& o) const { return {a - o.a, b - o.b}; }
    SqrtTwoNumber operator-() const { return {-a, -b}; }
    SqrtTwoNumber operator*(const SqrtTwoNumber& o) const {
        return {a * o.a + Rational(2) * b * o.b, a * o.b + b * o.a};
    }

    // Sign of a + b*sqrt(2): when a and b disagree in sign the decision
    // reduces to comparing a^2 with 2 b^2.
    int sign() const {
        const int sa = a > 0 ? 1 : (a < 0 ? -1 : 0);
        const int sb = b > 0 ? 1 : (b < 0 ? -1 : 0);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational a2 = a * a;
        const Rational b2 = Rational(2) * b * b;
        if (a2 == b2) return 0;  // impossible for b != 0 with rational a, kept for safety
        return (a2 > b2) ? sa : sb;
    }

    bool operator<(const SqrtTwoNumber& o) const { return (*this - o).sign() < 0; }
    bool operator>(const SqrtTwoNumber& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const SqrtTwoNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const SqrtTwoNumber& o) const { return (*this - o).sign() >= 0; }
    bool operator==(const SqrtTwoNumber& o) const { return a == o.a && b == o.b; }
};

// floor(b * sqrt(2)) for rational b = p/q, q > 0, in integer arithmetic.
inline long long floor_b_sqrt2(const Rational& b) {
    const long long p = b.numerator();
    const long long q = b.denominator();
    if (p == 0) return 0;
    if (p > 0) {
        // floor(sqrt(2 p^2) / q); nested floors collapse for integer q
        const long long s = isqrt(static_cast<__int128>(2) * p * p);
        return s / q;
    }
    // b < 0: floor(b*sqrt2) = -ceil(|b|*sqrt2) = -(floor(|b|*sqrt2)+1),
    // sqrt(2)*|b| being irrational for p != 0
    const long long s = isqrt(static_cast<__int128>(2) * p * p);
    return -(s / q) - 1;
}

// The unique integer f with f <= x < f+1.
inline long long floor_sqrt2(const SqrtTwoNumber& x) {
    long long f = floor_rational(x.a) + floor_b_sqrt2(x.b);
    // seed is off by at most one; correct with exact comparisons
    while (x < SqrtTwoNumber(f)) --f;
    while (x >= SqrtTwoNumber(f + 1)) ++f;
    return f;
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

// Rendered as "a + b*sqrt(2)" with reduced fractions.
inline std::string to_string(const SqrtTwoNumber& x) {
    std::ostringstream os;
    os << to_string(x.a);
    if (x.b >= 0)
        os << " + " << to_string(x.b);
    else
        os << " - " << to_string(-x.b);
    os << "*sqrt(2)";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const SqrtTwoNumber& x) {
    return os << to_string(x);
}

}  // namespace antimagic
