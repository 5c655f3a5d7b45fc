#pragma once

// Exact complex numbers living in a cyclotomic field Q(zeta_M), optionally
// extended by one real square root when M divides 4. Values are stored in the
// power basis 1, zeta, ..., zeta^(phi(M)-1), which makes equality and zero
// tests exact coefficient comparisons.

#include "quadratic.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hyperroot {

namespace detail {

using IntPoly = std::vector<Integer>;  // low degree first

inline IntPoly intpoly_divide_exact(IntPoly num, const IntPoly& den) {
    // den is monic
    std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {Integer(0)};
    IntPoly q(num.size() - dn, Integer(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
        }
    }
    return q;
}

inline const IntPoly& cyclotomic_poly(long m) {
    static std::mutex mutex;
    static std::map<long, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(m) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) p = intpoly_divide_exact(p, cyclotomic_poly(d));
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(m, std::move(p)).first->second;
}

inline long euler_phi(long m) { return static_cast<long>(cyclotomic_poly(m).size()) - 1; }

inline long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace detail

class ExactComplex {
public:
    ExactComplex() : m_(1), c_(1) {}
    ExactComplex(const QuadRational& x) : m_(1), c_{x} {}  // NOLINT(google-explicit-constructor)
    ExactComplex(const Rational& x) : m_(1), c_{QuadRational(x)} {}  // NOLINT(google-explicit-constructor)
    ExactComplex(long x) : m_(1), c_{QuadRational(x)} {}  // NOLINT(google-explicit-constructor)

    static ExactComplex gaussian(const QuadRational& re, const QuadRational& im) {
        ExactComplex z;
        z.m_ = 4;
        z.c_ = {re, im};
        z.check_radicand();
        return z;
    }

    static ExactComplex imag_unit() { return gaussian(QuadRational(0), QuadRational(1)); }

    // exp(i*pi*r) for rational r.
    static ExactComplex unit(const Rational& r) {
        Rational half = r / 2;
        half -= Rational(floor_of(half));
        long m = half.get_den().get_si();
        long k = half.get_num().get_si();
        return zeta_power(m, k);
    }

    // zeta_m^k
    static ExactComplex zeta_power(long m, long k) {
        ExactComplex z;
        z.m_ = m;
        std::vector<QuadRational> raw(static_cast<std::size_t>(m));
        long e = ((k % m) + m) % m;
        raw[static_cast<std::size_t>(e)] = QuadRational(1);
        z.c_ = reduce(raw, m);
        return z;
    }

    // modulus * exp(i*pi*angle)
    static ExactComplex polar(const Rational& modulus, const Rational& angle) {
        return ExactComplex(modulus) * unit(angle);
    }

    [[nodiscard]] long conductor() const { return m_; }
    [[nodiscard]] const std::vector<QuadRational>& coefficients() const { return c_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    // The value as an element of Q(sqrt D) when it is one.
    [[nodiscard]] std::optional<QuadRational> as_real_quad() const {
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) return std::nullopt;
        }
        return c_[0];
    }

    [[nodiscard]] std::optional<Rational> as_rational() const {
        auto q = as_real_quad();
        if (!q || !q->is_rational()) return std::nullopt;
        return q->rational_part();
    }

    [[nodiscard]] ExactComplex lifted(long target) const {
        if (target == m_) return *this;
        if (target % m_ != 0) throw std::logic_error("conductor lift to a non-multiple");
        long step = target / m_;
        std::vector<QuadRational> raw(static_cast<std::size_t>(target));
        for (std::size_t k = 0; k < c_.size(); ++k) raw[k * static_cast<std::size_t>(step)] = c_[k];
        ExactComplex z;
        z.m_ = target;
        z.c_ = reduce(raw, target);
        z.check_radicand();
        return z;
    }

    [[nodiscard]] ExactComplex conj() const {
        std::vector<QuadRational> raw(static_cast<std::size_t>(m_));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            std::size_t e = (static_cast<std::size_t>(m_) - k) % static_cast<std::size_t>(m_);
            raw[e] += c_[k];
        }
        ExactComplex z;
        z.m_ = m_;
        z.c_ = reduce(raw, m_);
        return z;
    }

    // zeta -> zeta^k for k coprime to the conductor.
    [[nodiscard]] ExactComplex galois(long k) const {
        std::vector<QuadRational> raw(static_cast<std::size_t>(m_));
        for (std::size_t j = 0; j < c_.size(); ++j) {
            long e = (static_cast<long>(j) * k) % m_;
            raw[static_cast<std::size_t>(e)] += c_[j];
        }
        ExactComplex z;
        z.m_ = m_;
        z.c_ = reduce(raw, m_);
        return z;
    }

    [[nodiscard]] ExactComplex real_part() const { return (*this + conj()) * ExactComplex(Rational(1, 2)); }
    [[nodiscard]] ExactComplex imag_part() const {
        return (*this - conj()) * gaussian(QuadRational(0), QuadRational(Rational(-1, 2)));
    }
    [[nodiscard]] bool is_real() const { return (*this - conj()).is_zero(); }

    [[nodiscard]] ExactComplex abs_squared() const { return *this * conj(); }

    [[nodiscard]] ExactComplex inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        ExactComplex others(1);
        for (long k = 2; k < std::max<long>(m_, 2); ++k) {
            if (std::gcd(k, m_) == 1) others = others * galois(k);
        }
        auto norm = (*this * others).as_real_quad();
        if (!norm) throw std::logic_error("cyclotomic norm is not in the base field");
        return others * ExactComplex(norm->inverse());
    }

    // Enclosures of the real and imaginary parts.
    [[nodiscard]] std::pair<Interval, Interval> enclosure(long bits) const {
        Interval re(Rational(0)), im(Rational(0));
        long extra = 8 + static_cast<long>(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            Rational angle(2 * static_cast<long>(k), m_);
            angle.canonicalize();
            Interval coef = c_[k].enclosure(bits + extra);
            re += coef * cospi(angle, bits + extra);
            im += coef * sinpi(angle, bits + extra);
        }
        return {re.rounded(bits + 4), im.rounded(bits + 4)};
    }

    [[nodiscard]] std::complex<long double> approx() const {
        auto [re, im] = enclosure(70);
        return {static_cast<long double>(re.mid().get_d()), static_cast<long double>(im.mid().get_d())};
    }

    // Sign of a real value, decided exactly.
    [[nodiscard]] int real_sign() const {
        if (!is_real()) throw std::domain_error("sign of a non-real complex number");
        if (is_zero()) return 0;
        if (auto q = as_real_quad()) return q->sign();
        for (long bits = 64;; bits *= 2) {
            Interval re = enclosure(bits).first;
            if (re.positive()) return 1;
            if (re.negative()) return -1;
        }
    }

    // Sign of Re(z) and of Im(z).
    [[nodiscard]] int re_sign() const { return real_part().real_sign(); }
    [[nodiscard]] int im_sign() const { return imag_part().real_sign(); }

    // Phase in pi units when it is a rational multiple of pi reachable inside
    // the current field.
    [[nodiscard]] std::optional<Rational> exact_phase() const {
        if (is_zero()) return std::nullopt;
        long big = detail::lcm_long(2, m_);
        auto z = approx();
        long double ang = std::atan2(z.imag(), z.real());
        if (ang < 0) ang += 2 * std::acos(-1.0L);
        long guess = std::lround(static_cast<double>(ang / (2 * std::acos(-1.0L)) * big));
        for (long delta : {0L, -1L, 1L}) {
            long j = ((guess + delta) % big + big) % big;
            ExactComplex rotated = *this * zeta_power(big, -j);
            if (rotated.is_real() && rotated.real_sign() > 0) {
                Rational angle(2 * j, big);
                angle.canonicalize();
                return angle;
            }
        }
        return std::nullopt;
    }

    // |z| when it is rational.
    [[nodiscard]] std::optional<Rational> exact_modulus() const {
        auto sq = abs_squared().as_rational();
        if (!sq) return std::nullopt;
        return exact_sqrt(*sq);
    }

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        long m = detail::lcm_long(x.m_, y.m_);
        ExactComplex a = x.lifted(m), b = y.lifted(m);
        for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
        return a;
    }
    friend ExactComplex operator-(const ExactComplex& x) {
        ExactComplex a = x;
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) { return x + (-y); }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        long m = detail::lcm_long(x.m_, y.m_);
        ExactComplex a = x.lifted(m), b = y.lifted(m);
        std::vector<QuadRational> raw(a.c_.size() + b.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!b.c_[j].is_zero()) raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        ExactComplex z;
        z.m_ = m;
        z.c_ = reduce(raw, m);
        z.check_radicand();
        return z;
    }
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) { return x * y.inverse(); }
    ExactComplex& operator+=(const ExactComplex& y) { return *this = *this + y; }
    ExactComplex& operator-=(const ExactComplex& y) { return *this = *this - y; }
    ExactComplex& operator*=(const ExactComplex& y) { return *this = *this * y; }

    friend bool operator==(const ExactComplex& x, const ExactComplex& y) { return (x - y).is_zero(); }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

    // Human form: rational, Gaussian (a+bi), polar r*exp(ipi*k/m), or a
    // cyclotomic expansion.
    [[nodiscard]] std::string str() const {
        if (auto q = as_real_quad()) return q->str();
        if (auto parts = gaussian_parts()) {
            auto [re, im] = *parts;
            std::string s = "(";
            if (!re.is_zero()) s += re.str();
            std::string is = im.str();
            if (!re.is_zero() && is[0] != '-') s += "+";
            if (im == QuadRational(1)) s += "i";
            else if (im == QuadRational(-1)) s += "-i";
            else s += is + "i";
            return s + ")";
        }
        if (auto ph = exact_phase()) {
            auto mod = exact_modulus();
            std::string angle = "exp(ipi*" + to_fraction_string(*ph) + ")";
            if (mod) return *mod == 1 ? angle : to_display_string(*mod) + "*" + angle;
        }
        std::ostringstream os;
        os << "cyc" << m_ << "(";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k > 0) os << ",";
            os << c_[k].str();
        }
        os << ")";
        return os.str();
    }

    // Real and imaginary parts when both lie in Q(sqrt D).
    [[nodiscard]] std::optional<std::pair<QuadRational, QuadRational>> gaussian_parts() const {
        auto re = real_part().as_real_quad();
        auto im = imag_part().as_real_quad();
        if (!re || !im) return std::nullopt;
        return std::make_pair(*re, *im);
    }

private:
    static std::vector<QuadRational> reduce(std::vector<QuadRational> raw, long m) {
        const auto& phi = detail::cyclotomic_poly(m);
        std::size_t n = phi.size() - 1;
        for (std::size_t i = raw.size(); i-- > n;) {
            QuadRational c = raw[i];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j <= n; ++j) {
                if (phi[j] != 0) raw[i - n + j] -= c * QuadRational(Rational(phi[j]));
            }
        }
        raw.resize(n);
        return raw;
    }

    void check_radicand() const {
        if (4 % m_ == 0) return;
        for (const auto& c : c_) {
            if (!c.is_rational()) throw std::domain_error("square roots are only supported with Gaussian coefficients");
        }
    }

    long m_;
    std::vector<QuadRational> c_;
};

}  // namespace hyperroot
