#pragma once

// Numbers a + b*sqrt(D) with rational a, b and a fixed positive radicand D.
// Two values may only be combined when their radicands agree (a value with
// b == 0 adapts to any radicand).

#include "interval.hpp"

#include <stdexcept>
#include <string>

namespace hyperroot {

namespace detail {

// Writes r = s^2 * D with D a squarefree integer, as far as trial division up
// to 10^5 can tell. Returns {s, D}.
inline std::pair<Rational, Integer> split_square(const Rational& r) {
    if (r <= 0) throw std::domain_error("radicand must be positive");
    Integer n = r.get_num() * r.get_den();
    Rational scale = Rational(Integer(1), r.get_den());
    Integer core = 1;
    for (unsigned long p = 2; p <= 100000 && Integer(p) * p <= n; ++p) {
        unsigned long count = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            n /= p;
            ++count;
        }
        for (unsigned long k = 0; k < count / 2; ++k) scale *= p;
        if (count % 2 == 1) core *= p;
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        scale *= root;
    } else {
        core *= n;
    }
    scale.canonicalize();
    return {scale, core};
}

}  // namespace detail

class QuadRational {
public:
    QuadRational() = default;
    QuadRational(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadRational(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)

    // a + b*sqrt(r), with r > 0 arbitrary; square factors are pulled out.
    static QuadRational with_root(const Rational& a, const Rational& b, const Rational& r) {
        QuadRational q(a);
        if (b == 0) return q;
        auto [s, core] = detail::split_square(r);
        if (core == 1) {
            q.a_ += b * s;
            return q;
        }
        q.b_ = b * s;
        q.d_ = core;
        return q;
    }

    static QuadRational sqrt_of(const Rational& r) {
        if (r == 0) return QuadRational();
        return with_root(0, 1, r);
    }

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& root_part() const { return b_; }
    [[nodiscard]] const Integer& radicand() const { return d_; }
    [[nodiscard]] bool is_rational() const { return b_ == 0; }
    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }

    [[nodiscard]] int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // opposite signs: compare a^2 with b^2 D
        Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;  // cannot happen for non-square D, kept for safety
        return lhs > rhs ? sa : sb;
    }

    [[nodiscard]] Interval enclosure(long bits) const {
        if (b_ == 0) return Interval(a_);
        auto [lo, hi] = sqrt_bounds(Rational(d_), bits + 4 + static_cast<long>(mpz_sizeinbase(b_.get_num_mpz_t(), 2)));
        return Interval(a_) + Interval(b_) * Interval(lo, hi);
    }

    [[nodiscard]] QuadRational conjugate() const {
        QuadRational q = *this;
        q.b_ = -q.b_;
        return q;
    }

    // a^2 - b^2 D, the field norm down to Q.
    [[nodiscard]] Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    [[nodiscard]] QuadRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational n = norm();
        QuadRational q = conjugate();
        q.a_ /= n;
        q.b_ /= n;
        return q;
    }

    friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
        QuadRational r;
        r.d_ = common_radicand(x, y);
        r.a_ = x.a_ + y.a_;
        r.b_ = x.b_ + y.b_;
        if (r.b_ == 0) r.d_ = 0;
        return r;
    }
    friend QuadRational operator-(const QuadRational& x) {
        QuadRational r = x;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }
    friend QuadRational operator-(const QuadRational& x, const QuadRational& y) { return x + (-y); }
    friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
        QuadRational r;
        Integer d = common_radicand(x, y);
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        r.d_ = r.b_ == 0 ? Integer(0) : d;
        return r;
    }
    friend QuadRational operator/(const QuadRational& x, const QuadRational& y) { return x * y.inverse(); }
    QuadRational& operator+=(const QuadRational& y) { return *this = *this + y; }
    QuadRational& operator-=(const QuadRational& y) { return *this = *this - y; }
    QuadRational& operator*=(const QuadRational& y) { return *this = *this * y; }

    friend bool operator==(const QuadRational& x, const QuadRational& y) { return (x - y).is_zero(); }
    friend bool operator<(const QuadRational& x, const QuadRational& y) { return (x - y).sign() < 0; }

    [[nodiscard]] std::string str() const {
        if (b_ == 0) return to_display_string(a_);
        std::string s;
        if (a_ != 0) s = to_display_string(a_) + (b_ > 0 ? "+" : "-");
        else if (b_ < 0) s = "-";
        Rational mag = abs_value(b_);
        if (mag != 1) s += to_display_string(mag) + "*";
        return s + "sqrt(" + d_.get_str() + ")";
    }

private:
    static Integer common_radicand(const QuadRational& x, const QuadRational& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("mixing incompatible square roots");
        return x.d_;
    }

    Rational a_ = 0;
    Rational b_ = 0;
    Integer d_ = 0;
};

}  // namespace hyperroot
