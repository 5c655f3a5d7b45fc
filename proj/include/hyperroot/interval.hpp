#pragma once

// Closed intervals with rational endpoints and outward dyadic rounding, plus
// enclosures of pi, sin(pi r) and cos(pi r) for rational r.

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace hyperroot {

struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(const Rational& x) : lo(x), hi(x) {}  // NOLINT(google-explicit-constructor)
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::logic_error("interval with hi < lo");
    }

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] Rational mid() const { return (lo + hi) / 2; }
    [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    [[nodiscard]] bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    [[nodiscard]] bool positive() const { return lo > 0; }
    [[nodiscard]] bool negative() const { return hi < 0; }

    // Keeps denominators bounded; the result still contains the original.
    [[nodiscard]] Interval rounded(long bits) const {
        return {round_down(lo, bits), round_up(hi, bits)};
    }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    return a * Interval(1 / b.hi, 1 / b.lo);
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval square(const Interval& a) {
    if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
    if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
    return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

inline Interval sqrt_interval(const Interval& a, long bits) {
    if (a.hi < 0) throw std::domain_error("square root of a negative interval");
    Rational lo = 0;
    if (a.lo > 0) lo = sqrt_bounds(a.lo, bits).first;
    return {lo, sqrt_bounds(a.hi, bits).second};
}

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << '[' << a.lo.get_d() << ", " << a.hi.get_d() << ']';
}

namespace detail {

// Alternating series for arctan(1/x); returns bounds with width < 2^-bits.
inline Interval arctan_inverse(long x, long bits) {
    Rational eps = two_pow(-bits);
    Rational x2 = Rational(x) * x;
    Rational power = Rational(1, x);  // x^-(2k+1)
    power.canonicalize();
    Rational sum = 0;
    for (long k = 0;; ++k) {
        Rational term = power / (2 * k + 1);
        Rational next = sum + ((k % 2 == 0) ? term : Rational(-term));
        Rational next_term = power / x2 / (2 * k + 3);
        if (next_term < eps) {
            // truncation error lies between 0 and the next term with the next sign
            Rational other = next + ((k % 2 == 0) ? Rational(-next_term) : next_term);
            return {std::min(next, other), std::max(next, other)};
        }
        sum = next;
        power /= x2;
    }
}

// Bounds for sin(x) or cos(x) at a rational point 0 <= x <= 1.
inline Interval taylor_trig(const Rational& x, bool want_sin, long bits) {
    Rational eps = two_pow(-bits);
    Rational term = want_sin ? x : Rational(1);
    long k = want_sin ? 1 : 0;  // term = x^k / k!
    Rational sum = 0;
    for (int sgn = 1;; sgn = -sgn) {
        Rational next = sum + (sgn > 0 ? term : Rational(-term));
        Rational next_term = term * x * x / ((k + 1) * (k + 2));
        if (next_term < eps) {
            Rational other = next + (sgn > 0 ? Rational(-next_term) : next_term);
            return {std::min(next, other), std::max(next, other)};
        }
        sum = next;
        term = next_term;
        k += 2;
    }
}

}  // namespace detail

inline Interval pi_interval(long bits) {
    static std::mutex mutex;
    static std::map<long, Interval> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(bits); it != cache.end()) return it->second;
    Interval a = detail::arctan_inverse(5, bits + 6);
    Interval b = detail::arctan_inverse(239, bits + 6);
    Interval pi = Interval(Rational(16)) * a - Interval(Rational(4)) * b;
    cache.emplace(bits, pi);
    return pi;
}

namespace detail {

// sin(pi t) or cos(pi t) for 0 <= t <= 1/4.
inline Interval trig_small(const Rational& t, bool want_sin, long bits) {
    if (t == 0) return want_sin ? Interval(Rational(0)) : Interval(Rational(1));
    Interval x = (pi_interval(bits + 8) * Interval(t)).rounded(bits + 8);
    if (want_sin) {
        return {taylor_trig(x.lo, true, bits + 4).lo, taylor_trig(x.hi, true, bits + 4).hi};
    }
    return {taylor_trig(x.hi, false, bits + 4).lo, taylor_trig(x.lo, false, bits + 4).hi};
}

inline Rational reduce_mod2(const Rational& r) {
    Rational t = r - 2 * Rational(floor_of(r / 2));
    return t;
}

}  // namespace detail

// Enclosure of sin(pi r) with width roughly 2^-bits.
inline Interval sinpi(const Rational& r, long bits) {
    Rational t = detail::reduce_mod2(r);
    bool negate = false;
    if (t >= 1) {
        t -= 1;
        negate = true;
    }
    if (t > Rational(1, 2)) t = 1 - t;
    Interval v;
    if (t <= Rational(1, 4)) {
        v = detail::trig_small(t, true, bits);
    } else {
        v = detail::trig_small(Rational(1, 2) - t, false, bits);
    }
    return negate ? -v : v;
}

inline Interval cospi(const Rational& r, long bits) { return sinpi(r + Rational(1, 2), bits); }

}  // namespace hyperroot
