#pragma once

// Root machinery over Q and over exact complex numbers: polynomial
// arithmetic, squarefree decomposition, Sturm counting, exact counts of roots
// on a circle or a ray, Aberth iteration with certified clusters, Rouche
// dominance and q-adic Newton polygons.

#include "exact_complex.hpp"
#include "multiplicity.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyperroot {

inline int real_sign_of(const Rational& x) { return sgn(x); }
inline int real_sign_of(const ExactComplex& x) { return x.real_sign(); }

// Dense univariate polynomial over a field K; c[i] is the coefficient of T^i
// and the zero polynomial has no coefficients.
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
    static UPoly monomial(const K& k, std::size_t deg) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = k;
        return UPoly(std::move(c));
    }
    // T - r
    static UPoly linear(const K& r) { return UPoly(std::vector<K>{K(0) - r, K(1)}); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<K>& coeffs() const { return c_; }
    [[nodiscard]] K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    [[nodiscard]] const K& leading() const { return c_.back(); }

    [[nodiscard]] UPoly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / c_.back();
        std::vector<K> c = c_;
        for (auto& x : c) x = x * inv;
        return UPoly(std::move(c));
    }

    [[nodiscard]] UPoly derivative() const {
        std::vector<K> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * K(static_cast<long>(i)));
        return UPoly(std::move(c));
    }

    template <class X>
    [[nodiscard]] X eval(const X& x) const {
        X acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<K> c = a.c_;
        for (auto& x : c) x = K(0) - x;
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const K& k, const UPoly& a) { return constant(k) * a; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }

    // Quotient and remainder.
    [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<K> r = c_;
        if (degree() < d.degree()) return {UPoly(), *this};
        std::vector<K> q(c_.size() - d.c_.size() + 1, K(0));
        K inv = K(1) / d.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            K f = r[k + d.c_.size() - 1] * inv;
            q[k] = f;
            if (f == K(0)) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = r[k + j] - f * d.c_[j];
        }
        r.resize(d.c_.size() - 1);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    [[nodiscard]] std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == K(0)) continue;
            if (!s.empty()) s += " + ";
            s += "(" + to_str(c_[i]) + ")";
            if (i > 0) s += i == 1 ? "T" : "T^" + std::to_string(i);
        }
        return s;
    }

private:
    static std::string to_str(const Rational& x) { return to_display_string(x); }
    static std::string to_str(const ExactComplex& x) { return x.str(); }

    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

using QPoly = UPoly<Rational>;
using CPoly = UPoly<ExactComplex>;

template <class K>
UPoly<K> poly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Yun's algorithm: monic squarefree factors f_i with p = lc * prod f_i^i.
template <class K>
std::vector<std::pair<UPoly<K>, std::size_t>> squarefree_decomposition(const UPoly<K>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<UPoly<K>, std::size_t>> out;
    UPoly<K> f = p.monic();
    if (f.degree() == 0) return out;
    UPoly<K> df = f.derivative();
    UPoly<K> a = poly_gcd(f, df);
    UPoly<K> b = f.divmod(a).first;
    UPoly<K> c = df.divmod(a).first;
    UPoly<K> d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        UPoly<K> g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
    }
    return out;
}

// Open interval with optional (infinite when empty) ends.
struct OpenRange {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

struct RootCount {
    std::size_t distinct = 0;
    std::size_t weighted = 0;
};

namespace detail {

template <class K>
int sign_at(const UPoly<K>& p, const std::optional<Rational>& x, int infinity_side) {
    if (p.is_zero()) return 0;
    if (!x) {
        int s = real_sign_of(p.leading());
        return (infinity_side < 0 && p.degree() % 2 == 1) ? -s : s;
    }
    return real_sign_of(p.template eval<K>(K(*x)));
}

template <class K>
std::size_t variations(const std::vector<UPoly<K>>& chain, const std::optional<Rational>& x, int side) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& s : chain) {
        int sg = sign_at(s, x, side);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

// Distinct roots of a squarefree real polynomial strictly inside the range.
template <class K>
std::size_t sturm_squarefree(UPoly<K> f, const OpenRange& r) {
    // an endpoint that is itself a root is divided out so that Sturm's
    // theorem applies with non-root ends
    for (const auto& end : {r.lo, r.hi}) {
        if (end && f.degree() > 0 && real_sign_of(f.template eval<K>(K(*end))) == 0) {
            f = f.divmod(UPoly<K>::linear(K(*end))).first;
        }
    }
    if (f.degree() <= 0) return 0;
    std::vector<UPoly<K>> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    std::size_t vlo = variations(chain, r.lo, -1);
    std::size_t vhi = variations(chain, r.hi, 1);
    return vlo - vhi;
}

}  // namespace detail

// Real roots inside the open range: distinct and counted with multiplicity.
template <class K>
RootCount sturm_count(const UPoly<K>& p, const OpenRange& r = {}) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    RootCount rc;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        std::size_t k = detail::sturm_squarefree(f, r);
        rc.distinct += k;
        rc.weighted += k * mult;
    }
    return rc;
}

// Multiplicity of r as a root of p.
template <class K>
std::size_t root_multiplicity(UPoly<K> p, const K& r) {
    std::size_t m = 0;
    UPoly<K> lin = UPoly<K>::linear(r);
    while (p.degree() > 0) {
        auto [q, rem] = p.divmod(lin);
        if (!rem.is_zero()) break;
        p = std::move(q);
        ++m;
    }
    return m;
}

namespace detail {

// Splits a complex polynomial with real variable into real and imaginary parts.
inline std::pair<CPoly, CPoly> real_imag_parts(const CPoly& q) {
    std::vector<ExactComplex> re, im;
    for (const auto& c : q.coeffs()) {
        re.push_back(c.real_part());
        im.push_back(c.imag_part());
    }
    return {CPoly(re), CPoly(im)};
}

// Real roots of q (as a function of a real variable), counted with multiplicity.
inline std::size_t real_root_count(const CPoly& q, const OpenRange& r) {
    auto [re, im] = real_imag_parts(q);
    CPoly g = poly_gcd(re, im);
    if (g.degree() <= 0) return 0;
    return sturm_count(g, r).weighted;
}

}  // namespace detail

// Roots z with |z| = b, counted with multiplicity. The Cayley map
// t -> b (1 + it)/(1 - it) sends the real line onto the circle minus -b.
inline std::size_t circle_count(const CPoly& p, const Rational& b) {
    if (b <= 0) throw std::domain_error("circle radius must be positive");
    std::size_t n = static_cast<std::size_t>(p.degree());
    ExactComplex i = ExactComplex::imag_unit();
    CPoly plus(std::vector<ExactComplex>{ExactComplex(1), i});
    CPoly minus(std::vector<ExactComplex>{ExactComplex(1), -i});
    std::vector<CPoly> pp{CPoly::constant(1)}, mp{CPoly::constant(1)};
    for (std::size_t k = 0; k < n; ++k) {
        pp.push_back(pp.back() * plus);
        mp.push_back(mp.back() * minus);
    }
    CPoly q;
    Rational bk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        ExactComplex c = p.coeff(k);
        if (!c.is_zero()) q = q + (c * ExactComplex(bk)) * (pp[k] * mp[n - k]);
        bk *= b;
    }
    return detail::real_root_count(q, {}) + root_multiplicity(p, ExactComplex(Rational(-b)));
}

// Roots on the open ray {r exp(i pi angle) : r > 0}, counted with multiplicity.
inline std::size_t ray_count(const CPoly& p, const Rational& angle) {
    ExactComplex u = ExactComplex::unit(angle), uk(1);
    std::vector<ExactComplex> c;
    for (const auto& x : p.coeffs()) {
        c.push_back(x * uk);
        uk = uk * u;
    }
    OpenRange pos{Rational(0), std::nullopt};
    return detail::real_root_count(CPoly(c), pos);
}

inline CPoly to_cpoly(const QPoly& p) {
    std::vector<ExactComplex> c(p.coeffs().begin(), p.coeffs().end());
    return CPoly(c);
}

inline QPoly qpoly_from(const HPoly& p) {
    if (p.hyperfield() != HyperfieldId::FieldRational) throw std::domain_error("expected a rational polynomial");
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.value());
    return QPoly(c);
}

inline CPoly cpoly_from(const HPoly& p) {
    std::vector<ExactComplex> c;
    for (const auto& x : p.coeffs()) {
        if (p.hyperfield() == HyperfieldId::FieldRational) c.emplace_back(x.value());
        else if (p.hyperfield() == HyperfieldId::FieldComplex) c.push_back(x.complex_value());
        else throw std::domain_error("expected a field polynomial");
    }
    return CPoly(c);
}

// ---------------------------------------------------------------- Aberth

struct RootCluster {
    std::vector<std::complex<long double>> approx;
    std::size_t count = 0;  // with multiplicity
    Interval modulus;       // certified
    Interval phase;         // certified, in units of pi; [0, 2] when unresolved
};

namespace detail {

inline Rational exact_from(long double x) {
    if (x == 0) return 0;
    int e = 0;
    long double m = std::frexp(x, &e);
    auto mant = static_cast<long long>(std::ldexp(m, 63));
    Rational r(Integer(std::to_string(mant), 10));
    return r * two_pow(e - 63);
}

inline ExactComplex exact_from(std::complex<long double> z) {
    return ExactComplex::gaussian(QuadRational(exact_from(z.real())), QuadRational(exact_from(z.imag())));
}

inline std::vector<std::complex<long double>> aberth_iterate(const CPoly& f, long double tol, int max_iter) {
    using C = std::complex<long double>;
    std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<C> c;
    for (const auto& x : f.coeffs()) c.push_back(x.approx());
    auto eval = [&](C z, C& dp) {
        C v = 0;
        dp = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            dp = dp * z + v;
            v = v * z + c[i];
        }
        return v;
    };
    // Starting points on a circle of the Cauchy radius, slightly rotated.
    long double radius = 0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(c[i] / c[n]), 1.0L / (n - i)));
    radius = std::max(radius, 1e-3L);
    std::vector<C> z(n);
    const long double pi = std::acos(-1.0L);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius, 2 * pi * (k + 0.25L) / n + 0.4L);
    for (int it = 0; it < max_iter; ++it) {
        long double worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C dp;
            C v = eval(z[k], dp);
            if (v == C(0)) continue;
            C ratio = v / dp;
            C sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            }
            C step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < tol * 1e-6L) return z;
    }
    return z;
}

// Interval of angles (pi units) covering the disk, or nullopt when the disk
// meets the origin or certification fails.
inline std::optional<Interval> certify_phase(std::complex<long double> center, const Rational& radius) {
    Rational cx = exact_from(center.real()), cy = exact_from(center.imag());
    Rational mod2 = cx * cx + cy * cy;
    if (mod2 <= radius * radius) return std::nullopt;
    const long double pi = std::acos(-1.0L);
    long double ang = std::atan2(center.imag(), center.real()) / pi;
    long double half = std::asin(std::min(1.0L, static_cast<long double>(radius.get_d()) / std::abs(center))) / pi;
    for (long double slack = 1e-15L; slack < 1e-3L; slack *= 16) {
        Rational lo = exact_from(ang - half * (1 + 1e-6L) - slack);
        Rational hi = exact_from(ang + half * (1 + 1e-6L) + slack);
        if (hi - lo >= 1) return std::nullopt;
        const long bits = 90;
        Interval ux_lo = cospi(lo, bits), uy_lo = sinpi(lo, bits);
        Interval ux_hi = cospi(hi, bits), uy_hi = sinpi(hi, bits);
        Interval cross_lo = ux_lo * Interval(cy) - uy_lo * Interval(cx);
        Interval cross_hi = Interval(cx) * uy_hi - Interval(cy) * ux_hi;
        if (cross_lo.lo > radius && cross_hi.lo > radius) {
            Rational shift = 2 * Rational(floor_of(lo / 2));
            return Interval(lo - shift, hi - shift);
        }
    }
    return std::nullopt;
}

inline Rational sqrt_upper(const Rational& x) { return x <= 0 ? Rational(0) : sqrt_bounds(x, 80).second; }
inline Rational sqrt_lower(const Rational& x) { return x <= 0 ? Rational(0) : sqrt_bounds(x, 80).first; }

// Clusters of a monic squarefree f via Weierstrass inclusion disks.
inline std::vector<RootCluster> certified_clusters(const CPoly& f, std::size_t mult, long double tol) {
    std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<std::complex<long double>> z;
    if (n == 1) {
        z.push_back((-f.coeff(0)).approx());
    } else {
        z = aberth_iterate(f, tol, 2000);
    }
    std::vector<ExactComplex> ez;
    for (const auto& w : z) ez.push_back(exact_from(w));
    std::vector<Rational> radius(n);
    for (std::size_t k = 0; k < n; ++k) {
        ExactComplex v = f.eval<ExactComplex>(ez[k]);
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            ExactComplex d = ez[k] - ez[j];
            denom *= *d.abs_squared().as_rational();
        }
        if (denom == 0) throw std::runtime_error("root approximations collided");
        Interval v2 = v.abs_squared().enclosure(120).first;
        Rational w2 = v2.hi / denom;
        radius[k] = Rational(static_cast<long>(n)) * sqrt_upper(w2);
    }
    // connected components of the disks
    std::vector<std::size_t> comp(n);
    for (std::size_t k = 0; k < n; ++k) comp[k] = k;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            Rational d2 = *(ez[a] - ez[b]).abs_squared().as_rational();
            Rational rr = radius[a] + radius[b];
            if (d2 <= rr * rr) comp[find(a)] = find(b);
        }
    }
    std::vector<RootCluster> out;
    std::vector<long> index(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t root = find(k);
        Rational m2 = *ez[k].abs_squared().as_rational();
        Rational mlo = sqrt_lower(m2) - radius[k], mhi = sqrt_upper(m2) + radius[k];
        if (mlo < 0) mlo = 0;
        std::optional<Interval> ph = certify_phase(z[k], radius[k]);
        Interval phase = ph ? *ph : Interval(Rational(0), Rational(2));
        if (index[root] < 0) {
            index[root] = static_cast<long>(out.size());
            out.push_back({{z[k]}, mult, Interval(mlo, mhi), phase});
            continue;
        }
        RootCluster& cl = out[static_cast<std::size_t>(index[root])];
        cl.approx.push_back(z[k]);
        cl.count += mult;
        cl.modulus = hull(cl.modulus, Interval(mlo, mhi));
        if (cl.phase.width() >= 2 || phase.width() >= 2) {
            cl.phase = Interval(Rational(0), Rational(2));
        } else {
            // bring the new interval next to the running one before merging
            while (phase.lo > cl.phase.hi + 1) phase = Interval(phase.lo - 2, phase.hi - 2);
            while (phase.hi < cl.phase.lo - 1) phase = Interval(phase.lo + 2, phase.hi + 2);
            cl.phase = hull(cl.phase, phase);
            if (cl.phase.width() >= 2) cl.phase = Interval(Rational(0), Rational(2));
        }
    }
    return out;
}

}  // namespace detail

// Roots of p grouped into certified clusters. Repeated factors are split off
// exactly first, so the iteration only ever sees simple roots.
inline std::vector<RootCluster> aberth_roots(const CPoly& p, long double tol = std::ldexp(1.0L, -40)) {
    if (p.degree() < 1) throw std::domain_error("root finding needs degree at least 1");
    std::vector<RootCluster> out;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        auto part = detail::certified_clusters(f, mult, tol);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<RootCluster> aberth_roots(const QPoly& p, long double tol = std::ldexp(1.0L, -40)) {
    return aberth_roots(to_cpoly(p), tol);
}

// ---------------------------------------------------------------- Rouche

// m_k r^k > sum_{i != k} m_i r^i, decided exactly.
inline bool rouche_dominant(const std::vector<Rational>& moduli, std::size_t k, const Rational& r) {
    if (k >= moduli.size()) throw std::domain_error("dominant index beyond the degree");
    if (r <= 0) throw std::domain_error("Rouche radius must be positive");
    Rational rest = 0, rk = 0, pw = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i == k) rk = moduli[i] * pw;
        else rest += moduli[i] * pw;
        pw *= r;
    }
    return rk > rest;
}

// ---------------------------------------------------------------- Newton polygon

// Negated q-adic valuations of the roots with multiplicities, largest first;
// zero roots come last as the bottom element.
inline std::vector<TropicalRoot> padic_newton_polygon(const QPoly& p, unsigned long q) {
    if (p.is_zero()) throw std::domain_error("Newton polygon of zero");
    std::size_t zeros = 0;
    while (p.coeffs()[zeros] == 0) ++zeros;
    std::vector<std::pair<long, Rational>> pts;
    for (std::size_t i = zeros; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] != 0) pts.emplace_back(static_cast<long>(i), Rational(padic_order(p.coeffs()[i], q)));
    }
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& m = hull.back();
            Rational cross = (m.second - o.second) * (pt.first - o.first) - (pt.second - o.second) * (m.first - o.first);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<TropicalRoot> out;
    for (std::size_t e = hull.size() - 1; e >= 1; --e) {
        long w = hull[e].first - hull[e - 1].first;
        Rational slope = (hull[e].second - hull[e - 1].second) / w;
        out.push_back({Element::tropical(slope), static_cast<std::size_t>(w)});
    }
    if (zeros > 0) out.push_back({Element::tropical_bottom(), zeros});
    return out;
}

}  // namespace hyperroot
