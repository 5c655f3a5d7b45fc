#pragma once

// Exact rational scalars backed by GMP, with parsing, printing and dyadic
// rounding helpers used throughout the library.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hyperroot {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Rational pow_int(Rational base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        base = 1 / base;
        exponent = -exponent;
    }
    Rational result = 1;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

inline Rational two_pow(long bits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(bits < 0 ? -bits : bits));
    return bits >= 0 ? Rational(p) : Rational(Integer(1), p);
}

/// Largest multiple of 2^-bits that is <= r.
inline Rational round_down(const Rational& r, long bits) {
    Rational scale = two_pow(bits);
    return Rational(floor_of(r * scale)) / scale;
}

/// Smallest multiple of 2^-bits that is >= r.
inline Rational round_up(const Rational& r, long bits) {
    Rational scale = two_pow(bits);
    return Rational(ceil_of(r * scale)) / scale;
}

/// Exact square root when r is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    Rational s(n, d);
    s.canonicalize();
    return s;
}

/// Dyadic bounds lo <= sqrt(r) <= hi with hi - lo <= 2^-bits.
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& r, long bits) {
    if (r < 0) throw std::domain_error("square root of a negative rational");
    if (auto s = exact_sqrt(r)) return {*s, *s};
    // floor(sqrt(r * 4^bits)) / 2^bits
    Rational scaled = r * two_pow(2 * bits);
    Integer fl = floor_of(scaled);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    Rational scale = two_pow(bits);
    Rational lo = Rational(root) / scale;
    Rational hi = Rational(root + 1) / scale;
    return {lo, hi};
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Exponent of the prime q in r (r != 0).
inline long padic_order(const Rational& r, unsigned long q) {
    if (r == 0) throw std::domain_error("valuation of zero");
    auto count = [q](Integer n) {
        long k = 0;
        Integer qq = q;
        while (mpz_divisible_p(n.get_mpz_t(), qq.get_mpz_t()) != 0) {
            n /= qq;
            ++k;
        }
        return k;
    };
    return count(abs(r.get_num())) - count(r.get_den());
}

/// Parses `3`, `-2/7`, `5.1`, `0.512`, `+4` exactly. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string body = s.substr(pos);
    auto all_digits = [](const std::string& t) {
        return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
    };
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad fraction '" + s + "'");
        Integer d(den, 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        value = Rational(Integer(num, 10), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string ip = body.substr(0, dot);
        std::string fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) {
            throw std::invalid_argument("bad decimal '" + s + "'");
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        value = Rational(Integer(ip + fp, 10), scale);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("bad integer '" + s + "'");
        value = Rational(Integer(body, 10));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

/// `num/den` always, even for integers; the JSON wire form.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Shortest exact human form: integer, terminating decimal, or `num/den`.
inline std::string to_display_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    Integer den = r.get_den();
    int twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) { den /= 5; ++fives; }
    if (den != 1) return to_fraction_string(r);
    int digits = std::max(twos, fives);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs_value(r) * scale;
    std::string body = scaled.get_num().get_str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (r < 0 ? "-" : "") + body;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace hyperroot
