#pragma once

// The concrete homomorphisms from fields onto hyperfields, pushforward of
// polynomials, law checking on samples, and the lifting constructions.

#include "classical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperroot {

enum class HomId { Sign, Modulus, Phase, ToKrasner, Padic };

struct Homomorphism {
    HomId id = HomId::Sign;
    unsigned long prime = 0;  // for Padic
    HyperfieldId source = HyperfieldId::FieldRational;

    [[nodiscard]] HyperfieldId target() const {
        switch (id) {
            case HomId::Sign: return HyperfieldId::Sign;
            case HomId::Modulus: return HyperfieldId::Viro;
            case HomId::Phase: return HyperfieldId::Phase;
            case HomId::ToKrasner: return HyperfieldId::Krasner;
            case HomId::Padic: return HyperfieldId::Tropical;
        }
        throw std::logic_error("bad homomorphism id");
    }

    [[nodiscard]] std::string token() const {
        switch (id) {
            case HomId::Sign: return "R->S";
            case HomId::Modulus: return "C->V";
            case HomId::Phase: return "C->P";
            case HomId::ToKrasner: return source == HyperfieldId::FieldRational ? "Q->K" : "C->K";
            case HomId::Padic: return "Q->T:p=" + std::to_string(prime);
        }
        throw std::logic_error("bad homomorphism id");
    }

    static Homomorphism sign() { return {HomId::Sign, 0, HyperfieldId::FieldRational}; }
    static Homomorphism modulus() { return {HomId::Modulus, 0, HyperfieldId::FieldComplex}; }
    static Homomorphism phase() { return {HomId::Phase, 0, HyperfieldId::FieldComplex}; }
    static Homomorphism to_krasner(HyperfieldId src = HyperfieldId::FieldComplex) {
        return {HomId::ToKrasner, 0, src};
    }
    static Homomorphism padic(unsigned long q) {
        if (mpz_probab_prime_p(Integer(q).get_mpz_t(), 30) == 0) {
            throw std::domain_error("p-adic valuation needs a prime, got " + std::to_string(q));
        }
        return {HomId::Padic, q, HyperfieldId::FieldRational};
    }
};

inline Homomorphism parse_homomorphism(const std::string& token) {
    if (token == "R->S" || token == "Q->S") return Homomorphism::sign();
    if (token == "C->V") return Homomorphism::modulus();
    if (token == "C->P") return Homomorphism::phase();
    if (token == "->K" || token == "C->K") return Homomorphism::to_krasner();
    if (token == "Q->K" || token == "R->K") return Homomorphism::to_krasner(HyperfieldId::FieldRational);
    const std::string prefix = "Q->T:p=";
    if (token.rfind(prefix, 0) == 0) {
        std::string digits = token.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9) {
            throw std::invalid_argument("bad prime in homomorphism '" + token + "'");
        }
        return Homomorphism::padic(std::stoul(digits));
    }
    throw std::invalid_argument("unknown homomorphism '" + token + "'");
}

namespace detail {

inline ExactComplex as_complex(const Element& x) {
    if (x.hyperfield() == HyperfieldId::FieldRational) return {x.value()};
    if (x.hyperfield() == HyperfieldId::FieldComplex) return x.complex_value();
    throw std::domain_error("homomorphisms start from Q or C, got " + hyperfield_name(x.hyperfield()));
}

// arg(x) = pi * theta exactly
inline bool angle_equals(const ExactComplex& x, const Rational& theta) {
    ExactComplex w = x * ExactComplex::unit(-theta);
    return w.is_real() && w.real_sign() > 0;
}

// arg(x) strictly inside the arc from l to h, for 0 < h - l < 1
inline bool angle_between(const ExactComplex& x, const Rational& l, const Rational& h) {
    ExactComplex a = x * ExactComplex::unit(-l);
    ExactComplex b = ExactComplex::unit(h) * x.conj();
    return a.im_sign() > 0 && b.im_sign() > 0;
}

// Simplest rational within 1e-12 of the floating angle, confirmed exactly.
inline std::optional<Rational> phase_of(const ExactComplex& x) {
    if (x.is_zero()) return std::nullopt;
    if (auto p = x.exact_phase()) return p;
    auto z = x.approx();
    long double ang = std::atan2(z.imag(), z.real()) / std::acos(-1.0L);
    if (ang < 0) ang += 2;
    Rational lo = exact_from(ang - 1e-12L), hi = exact_from(ang + 1e-12L);
    // Stern-Brocot descent for the fraction with the smallest denominator
    Rational a = lo, b = hi;
    Integer shift = floor_of(a);
    a -= Rational(shift);
    b -= Rational(shift);
    std::vector<Integer> cf;
    Rational cand;
    for (int guard = 0; guard < 64; ++guard) {
        Integer fl = floor_of(a);
        if (Rational(fl) == a) {
            cf.push_back(fl);
            break;
        }
        if (Rational(fl + 1) <= b) {
            cf.push_back(fl + 1);
            break;
        }
        cf.push_back(fl);
        Rational na = 1 / (b - Rational(fl));
        Rational nb = 1 / (a - Rational(fl));
        a = na;
        b = nb;
    }
    cand = Rational(cf.back());
    for (std::size_t i = cf.size() - 1; i-- > 0;) cand = Rational(cf[i]) + 1 / cand;
    cand += Rational(shift);
    cand = cand - 2 * Rational(floor_of(cand / 2));
    if (cand.get_den() > 100000) return std::nullopt;
    if (angle_equals(x, cand)) return cand;
    return std::nullopt;
}

}  // namespace detail

inline Element apply(const Homomorphism& f, const Element& x) {
    switch (f.id) {
        case HomId::Sign: {
            if (x.hyperfield() == HyperfieldId::FieldRational) return Element::sign(sgn(x.value()));
            ExactComplex z = detail::as_complex(x);
            if (!z.is_real()) throw std::domain_error("sign of a non-real number");
            return Element::sign(z.real_sign());
        }
        case HomId::Modulus: {
            if (x.hyperfield() == HyperfieldId::FieldRational) return Element::viro(abs_value(x.value()));
            auto m = detail::as_complex(x).exact_modulus();
            if (!m) throw std::domain_error("modulus of " + x.str() + " is not rational");
            return Element::viro(*m);
        }
        case HomId::Phase: {
            ExactComplex z = detail::as_complex(x);
            if (z.is_zero()) return Element::phase_zero();
            auto ph = detail::phase_of(z);
            if (!ph) throw std::domain_error("phase of " + x.str() + " is not a recognised rational multiple of pi");
            return Element::phase(*ph);
        }
        case HomId::ToKrasner: return Element::krasner(detail::as_complex(x).is_zero() ? 0 : 1);
        case HomId::Padic: {
            if (x.hyperfield() != HyperfieldId::FieldRational) {
                auto r = detail::as_complex(x).as_rational();
                if (!r) throw std::domain_error("p-adic valuation needs a rational input");
                return apply(f, Element::rational(*r));
            }
            if (x.value() == 0) return Element::tropical_bottom();
            return Element::tropical(-padic_order(x.value(), f.prime));
        }
    }
    throw std::logic_error("bad homomorphism id");
}

// Whether f(x) lies in S, decided exactly even when f(x) itself has no
// representation in the target (an irrational modulus or phase).
inline bool image_in(const Homomorphism& f, const Element& x, const ElementSet& s) {
    if (s.hyperfield() != f.target()) throw std::domain_error("set outside the homomorphism's target");
    ExactComplex z = f.id == HomId::Padic ? ExactComplex(0) : detail::as_complex(x);
    if (f.id == HomId::Modulus) {
        ExactComplex m2 = z.abs_squared();
        for (const auto& p : s.line().pieces()) {
            bool above = p.lo_inf;
            if (!above) {
                int c = (m2 - ExactComplex(p.lo * p.lo)).real_sign();
                above = c > 0 || (c == 0 && p.lo_closed);
            }
            bool below = p.hi_inf;
            if (!below) {
                int c = (m2 - ExactComplex(p.hi * p.hi)).real_sign();
                below = c < 0 || (c == 0 && p.hi_closed);
            }
            if (above && below) return true;
        }
        return false;
    }
    if (f.id == HomId::Phase) {
        if (z.is_zero()) return s.special();
        for (const auto& p : s.line().pieces()) {
            if (detail::angle_equals(z, p.lo)) {
                if (p.lo_closed) return true;
                continue;
            }
            if (detail::angle_equals(z, p.hi)) {
                if (p.hi_closed) return true;
                continue;
            }
            Rational width = p.hi - p.lo;
            if (width <= 0) continue;
            long parts = 1;
            while (width / parts > Rational(1, 2)) ++parts;
            for (long k = 0; k < parts; ++k) {
                Rational l = p.lo + width * k / parts, h = p.lo + width * (k + 1) / parts;
                if (k > 0 && detail::angle_equals(z, l)) return true;
                if (detail::angle_between(z, l, h)) return true;
            }
        }
        return false;
    }
    return s.contains(apply(f, x));
}

inline HPoly push(const Homomorphism& f, const HPoly& p) {
    std::vector<Element> c;
    for (const auto& x : p.coeffs()) c.push_back(apply(f, x));
    return {f.target(), c};
}

// ---------------------------------------------------------------- law checks

struct HomLawReport {
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::vector<std::string> messages;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++violations;
            if (messages.size() < 10) messages.push_back(what);
        }
    }
};

inline Element field_sum(const std::vector<Element>& xs) {
    Element acc = Element::zero(xs.front().hyperfield());
    for (const auto& x : xs) acc = hyperadd(acc, x).points().front();
    return acc;
}

// Unit laws and multiplicativity on the samples; the inclusion
// f(x_1 + ... + x_k) in f(x_1) + ... + f(x_k) for every k-tuple, 2 <= k <= max_arity.
inline HomLawReport hom_law_suite(const Homomorphism& f, const std::vector<Element>& samples, std::size_t max_arity = 4,
                                  std::size_t arity_four_limit = 6) {
    HomLawReport rep;
    HyperfieldId src = samples.front().hyperfield();
    rep.record(apply(f, Element::zero(src)).is_zero(), "f(0) = 0");
    rep.record(apply(f, Element::one(src)) == Element::one(f.target()), "f(1) = 1");
    for (const auto& x : samples) {
        rep.record(x.is_zero() == apply(f, x).is_zero(), "only zero maps to zero at " + x.str());
        for (const auto& y : samples) {
            Element prod = multiply(apply(f, x), apply(f, y));
            rep.record(image_in(f, multiply(x, y), ElementSet::singleton(prod)), "f(xy) = f(x)f(y) at " + x.str() + ", " + y.str());
        }
    }
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t depth, std::size_t arity) {
        if (depth == arity) {
            std::vector<Element> xs, ys;
            for (auto i : idx) {
                xs.push_back(samples[i]);
                ys.push_back(apply(f, samples[i]));
            }
            std::string at;
            for (const auto& x : xs) at += (at.empty() ? "" : ", ") + x.str();
            rep.record(image_in(f, field_sum(xs), hypersum(ys)), "sum inclusion at " + at);
            return;
        }
        std::size_t limit = arity >= 4 ? std::min(arity_four_limit, samples.size()) : samples.size();
        for (std::size_t i = 0; i < limit; ++i) {
            idx.push_back(i);
            walk(depth + 1, arity);
            idx.pop_back();
        }
    };
    for (std::size_t k = 2; k <= max_arity; ++k) walk(0, k);
    return rep;
}

// Sample source elements whose images are representable in the target.
inline std::vector<Element> hom_samples(const Homomorphism& f) {
    std::vector<Element> out;
    auto cx = [](const ExactComplex& z) { return Element::complex(z); };
    switch (f.id) {
        case HomId::Sign:
            for (const char* s : {"0", "1", "-1", "2", "-2", "1/2", "-3", "5/7", "-7/5", "3"}) {
                out.push_back(Element::rational(parse_rational(s)));
            }
            break;
        case HomId::Modulus:
            out.push_back(cx(ExactComplex(0)));
            out.push_back(cx(ExactComplex(1)));
            out.push_back(cx(ExactComplex(-1)));
            out.push_back(cx(ExactComplex::gaussian(3, 4)));
            out.push_back(cx(ExactComplex::gaussian(-3, -4)));
            out.push_back(cx(ExactComplex::imag_unit()));
            out.push_back(cx(ExactComplex::gaussian(QuadRational(Rational(3, 5)), QuadRational(Rational(-4, 5)))));
            out.push_back(cx(ExactComplex::gaussian(-12, 5)));
            out.push_back(cx(ExactComplex(2)));
            out.push_back(cx(ExactComplex::polar(Rational(1, 2), Rational(1, 3))));
            break;
        case HomId::Phase:
            out.push_back(cx(ExactComplex(0)));
            out.push_back(cx(ExactComplex(1)));
            for (auto [r, a] : std::vector<std::pair<Rational, Rational>>{{2, Rational(1, 2)},
                                                                          {Rational(1, 2), Rational(1, 3)},
                                                                          {1, Rational(5, 6)},
                                                                          {3, 1},
                                                                          {1, Rational(4, 3)},
                                                                          {2, Rational(3, 2)},
                                                                          {1, Rational(11, 6)}}) {
                out.push_back(cx(ExactComplex::polar(r, a)));
            }
            out.push_back(cx(ExactComplex::gaussian(1, 1)));
            break;
        case HomId::ToKrasner:
            if (f.source == HyperfieldId::FieldRational) {
                for (const char* s : {"0", "1", "-1", "2", "-1/2", "3"}) out.push_back(Element::rational(parse_rational(s)));
            } else {
                out.push_back(cx(ExactComplex(0)));
                out.push_back(cx(ExactComplex(1)));
                out.push_back(cx(ExactComplex(-1)));
                out.push_back(cx(ExactComplex::imag_unit()));
                out.push_back(cx(ExactComplex::gaussian(2, -1)));
                out.push_back(cx(ExactComplex::polar(1, Rational(1, 3))));
            }
            break;
        case HomId::Padic: {
            auto q = static_cast<long>(f.prime);
            for (Rational r : {Rational(0), Rational(1), Rational(-1), Rational(q), Rational(1, q), Rational(q * q),
                               Rational(2 * q), Rational(-q), Rational(q + 1), Rational(q - 1), Rational(3, q * q)}) {
                r.canonicalize();
                out.push_back(Element::rational(r));
            }
            break;
        }
    }
    return out;
}

struct ValuationReport {
    std::size_t checks = 0;
    std::size_t violations = 0;
};

// Krull valuation axioms for x -> -v_q(x) into the tropical hyperfield.
inline ValuationReport valuation_axioms(unsigned long q, const std::vector<Rational>& samples) {
    Homomorphism f = Homomorphism::padic(q);
    ValuationReport rep;
    auto nu = [&](const Rational& x) { return apply(f, Element::rational(x)); };
    auto check = [&](bool ok) {
        ++rep.checks;
        if (!ok) ++rep.violations;
    };
    for (const auto& a : samples) {
        check(nu(a).is_zero() == (a == 0));
        for (const auto& b : samples) {
            check(nu(a * b) == multiply(nu(a), nu(b)));
            Element s = nu(a + b), x = nu(a), y = nu(b);
            Element big = x < y ? y : x;
            check(!(big < s));
        }
    }
    return rep;
}

// log|x| is not ultrametric: log|1 + 1| exceeds max(log|1|, log|1|).
inline bool log_modulus_breaks_ultrametric() {
    return std::log(std::abs(1.0 + 1.0)) > std::max(std::log(1.0), std::log(1.0));
}

// ---------------------------------------------------------------- lifts

struct LiftResult {
    std::optional<HPoly> poly;
    std::string reason;  // set when infeasible
    std::string method;

    [[nodiscard]] bool feasible() const { return poly.has_value(); }
    static LiftResult infeasible(std::string why) { return {std::nullopt, std::move(why), ""}; }
};

namespace detail {

inline HPoly complex_poly(const std::vector<ExactComplex>& c) {
    std::vector<Element> e;
    for (const auto& z : c) e.push_back(Element::complex(z));
    return {HyperfieldId::FieldComplex, e};
}

inline std::vector<ExactComplex> mul_coeffs(const std::vector<ExactComplex>& a, const std::vector<ExactComplex>& b) {
    std::vector<ExactComplex> out(a.size() + b.size() - 1, ExactComplex(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline LiftResult checked(const Homomorphism& f, const HPoly& target, HPoly lift, std::string method) {
    if (push(f, lift) != target) throw std::logic_error("lift does not push forward to " + target.str());
    return {std::move(lift), "", std::move(method)};
}

}  // namespace detail

// sum_i s_i / (2n)^(i^2) T^i
inline HPoly lift_grabiner(const std::vector<int>& signs) {
    if (signs.size() < 2) throw std::domain_error("sign vector needs degree at least 1");
    std::size_t n = signs.size() - 1;
    if (signs.back() <= 0) throw std::domain_error("leading sign must be positive");
    if (signs.front() == 0) throw std::domain_error("constant sign must be nonzero");
    std::vector<Element> c;
    Integer base = 2 * static_cast<long>(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (signs[i] < -1 || signs[i] > 1) throw std::domain_error("signs must be -1, 0 or 1");
        Integer den;
        mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i * i));
        Rational v(Integer(signs[i]), den);
        v.canonicalize();
        c.push_back(Element::rational(v));
    }
    return {HyperfieldId::FieldRational, c};
}

inline LiftResult lift_grabiner(const HPoly& target) {
    if (target.hyperfield() != HyperfieldId::Sign) throw std::domain_error("Grabiner lift needs a sign polynomial");
    std::vector<int> s;
    for (const auto& c : target.coeffs()) s.push_back(c.small());
    if (s.back() < 0) {
        for (auto& v : s) v = -v;
    }
    if (s.front() == 0) return LiftResult::infeasible("zero-constant-term");
    HPoly p = lift_grabiner(s);
    if (target.leading().small() < 0) {
        std::vector<Element> c;
        for (const auto& x : p.coeffs()) c.push_back(negate(x));
        p = HPoly(HyperfieldId::FieldRational, c);
    }
    return detail::checked(Homomorphism::sign(), target, p, "grabiner");
}

// Degree-2 lift through the modulus map with the focus root b.
inline LiftResult lift_viro_deg2(const HPoly& target, const Element& b) {
    if (target.hyperfield() != HyperfieldId::Viro || target.degree() != 2) {
        throw std::domain_error("degree-2 Viro lift needs a degree-2 Viro polynomial");
    }
    if (!is_root(target, b)) return LiftResult::infeasible("no-root");
    HPoly t = target.monic();
    Rational lead = target.leading().value();
    Rational c1 = t.coeff(1).value(), c0 = t.coeff(0).value();
    Rational a = b.value();
    std::vector<ExactComplex> coeffs;
    std::string method;
    if (a == 0 || (c0 == a * a && c1 <= 2 * a)) {
        // the real polynomial itself: conjugate roots of modulus sqrt(c0),
        // or the roots 0 and -c1
        coeffs = {ExactComplex(c0), ExactComplex(c1), ExactComplex(1)};
        method = "viro-real";
    } else {
        Rational other = c0 / a;
        Rational kappa = (c1 * c1 - a * a - other * other) / (2 * a * other);
        QuadRational s = QuadRational::sqrt_of(1 - kappa * kappa);
        ExactComplex e = ExactComplex::gaussian(QuadRational(kappa), s);
        // (T - a)(T - other e^{i theta})
        ExactComplex second = ExactComplex(other) * e;
        coeffs = {ExactComplex(a) * second, -(ExactComplex(a) + second), ExactComplex(1)};
        method = "viro-polar";
    }
    for (auto& c : coeffs) c = c * ExactComplex(lead);
    return detail::checked(Homomorphism::modulus(), target, detail::complex_poly(coeffs), method);
}

struct ArcWeights {
    ExactComplex alpha;  // real, positive
    ExactComplex beta;   // real, positive
};

// Positive weights with alpha u + beta v a positive multiple of c, for c in
// the hypersum of u and v in the phase hyperfield.
inline ArcWeights arc_combination(const Element& c, const Element& u, const Element& v) {
    for (const auto* e : {&c, &u, &v}) {
        if (e->hyperfield() != HyperfieldId::Phase) throw std::domain_error("arc combination works in the phase hyperfield");
    }
    if (!hyperadd(u, v).contains(c)) {
        throw std::domain_error("phase " + c.str() + " is not in " + u.str() + " + " + v.str());
    }
    ExactComplex one(1), two(2);
    if (u.is_zero() || v.is_zero() || u == v) return {one, one};
    if (negate(u) == v) {
        if (c == u) return {two, one};
        if (c == v) return {one, two};
        return {one, one};
    }
    // sin(v - c) u + sin(c - u) v = sin(v - u) c, all angles in pi units
    auto sinpi_exact = [](const Rational& x) {
        ExactComplex z = ExactComplex::unit(x);
        return (z - z.conj()) * ExactComplex::gaussian(QuadRational(0), QuadRational(Rational(-1, 2)));
    };
    ExactComplex alpha = sinpi_exact(v.value() - c.value());
    ExactComplex beta = sinpi_exact(c.value() - u.value());
    if (alpha.real_sign() < 0) {
        alpha = -alpha;
        beta = -beta;
    }
    if (alpha.real_sign() <= 0 || beta.real_sign() <= 0) throw std::logic_error("arc weights lost positivity");
    return {alpha, beta};
}

// Degree-3 lift through the phase map achieving equality at a when
// mult_a(target) is 0, 1 or 3.
inline LiftResult lift_phase_deg3(const HPoly& target, const Element& a, std::optional<std::size_t> want = std::nullopt) {
    if (target.hyperfield() != HyperfieldId::Phase || target.degree() != 3) {
        throw std::domain_error("phase lift needs a degree-3 phase polynomial");
    }
    Homomorphism f = Homomorphism::phase();
    HPoly t = target.monic();
    MultiplicityCertificate cert = mult_phase(t, a);
    std::size_t m = cert.lower;
    if (want && *want != m) {
        return LiftResult::infeasible("multiplicity is " + std::to_string(m) + ", not " + std::to_string(*want));
    }
    ExactComplex lead = ExactComplex::unit(target.leading().value());
    auto unit_of = [](const Element& e) { return e.is_zero() ? ExactComplex(0) : ExactComplex::unit(e.value()); };
    std::vector<ExactComplex> coeffs;
    std::string method;
    if (m == 0) {
        for (const auto& c : t.coeffs()) coeffs.push_back(unit_of(c));
        method = "phase-units";
    } else if (m == 3) {
        ExactComplex r = unit_of(a);
        std::vector<ExactComplex> lin{-r, ExactComplex(1)};
        coeffs = detail::mul_coeffs(detail::mul_coeffs(lin, lin), lin);
        method = "phase-cube";
    } else if (m == 1) {
        if (t.coeff(0).is_zero()) return LiftResult::infeasible("zero-constant-term");
        const HPoly& q = cert.witness.front();
        const Element& d1 = q.coeff(1);
        const Element& d0 = q.coeff(0);
        Element neg = negate(a);
        ArcWeights wz = arc_combination(t.coeff(2), d1, neg);
        ArcWeights xy = arc_combination(t.coeff(1), d0, multiply(neg, d1));
        ExactComplex w = wz.alpha, z = wz.beta;
        ExactComplex scale = xy.alpha * z * w / xy.beta;
        ExactComplex ra = unit_of(a);
        std::vector<ExactComplex> lin{-(z * ra), ExactComplex(1)};
        std::vector<ExactComplex> quad{scale * unit_of(d0), w * unit_of(d1), ExactComplex(1)};
        coeffs = detail::mul_coeffs(lin, quad);
        method = "phase-arc-weights";
    } else {
        return LiftResult::infeasible("multiplicity-2-unsupported");
    }
    for (auto& c : coeffs) c = c * lead;
    return detail::checked(f, target, detail::complex_poly(coeffs), method);
}

// prod (T - q^(-a_i)) scaled by q^(-c_n), for targets lying on their own hull.
inline LiftResult lift_tropical_hull(const HPoly& target, unsigned long q) {
    if (target.hyperfield() != HyperfieldId::Tropical) throw std::domain_error("tropical lift needs a tropical polynomial");
    Homomorphism f = Homomorphism::padic(q);
    if (q <= target.degree()) return LiftResult::infeasible("prime-not-above-degree");
    const Element& lead = target.leading();
    if (lead.value().get_den() != 1) return LiftResult::infeasible("non-integral-leading-coefficient");
    auto roots = tropical_roots(target);
    std::vector<Element> all;
    for (const auto& r : roots) {
        if (!r.value.is_zero() && r.value.value().get_den() != 1) return LiftResult::infeasible("non-integral-root");
        for (std::size_t j = 0; j < r.multiplicity; ++j) all.push_back(r.value);
    }
    if (tropical_product(all) != target.monic()) return LiftResult::infeasible("tie-case-unsupported");
    auto qpow = [&](const Rational& e) {
        long k = e.get_num().get_si();
        return pow_int(Rational(static_cast<long>(q)), -k);
    };
    std::vector<Rational> c{qpow(lead.value())};
    for (const auto& r : all) {
        Rational root = r.is_zero() ? Rational(0) : qpow(r.value());
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= root * c[i];
        }
        c = std::move(next);
    }
    std::vector<Element> e;
    for (const auto& x : c) e.push_back(Element::rational(x));
    return detail::checked(f, target, HPoly(HyperfieldId::FieldRational, e), "tropical-hull");
}

inline LiftResult lift_krasner(const HPoly& target, HyperfieldId source = HyperfieldId::FieldComplex) {
    if (target.hyperfield() != HyperfieldId::Krasner) throw std::domain_error("Krasner lift needs a Krasner polynomial");
    std::vector<Element> c;
    for (const auto& x : target.coeffs()) {
        Rational v = x.is_zero() ? 0 : 1;
        c.push_back(source == HyperfieldId::FieldRational ? Element::rational(v) : Element::complex(ExactComplex(v)));
    }
    return detail::checked(Homomorphism::to_krasner(source), target, HPoly(source, c), "support-copy");
}

}  // namespace hyperroot
