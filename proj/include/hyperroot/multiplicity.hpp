#pragma once

// Root multiplicities over the supported hyperfields, with witness chains of
// quotients that can be re-verified link by link.

#include "lp.hpp"
#include "polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperroot {

struct MultiplicityCertificate {
    std::size_t lower = 0;
    std::size_t upper = 0;
    // witness[0] is a quotient of monic(p), witness[j+1] a quotient of witness[j].
    std::vector<HPoly> witness;
    std::string engine;
    // what bounds the value from above: exact, degree, forced-constant,
    // full-mult, chain-infeasible
    std::string upper_reason = "exact";

    [[nodiscard]] bool exact() const { return lower == upper; }
};

enum class ViroEngine { Auto, Closed, Lp };

// Re-checks every link of the witness chain against the definition.
inline bool verify_certificate(const HPoly& p, const Element& a, const MultiplicityCertificate& c) {
    if (c.witness.size() != c.lower || c.lower > c.upper || c.upper > p.degree()) return false;
    HPoly prev = p.monic();
    for (const auto& q : c.witness) {
        if (!divides_link(prev, a, q)) return false;
        prev = q;
    }
    return true;
}

namespace detail {

inline MultiplicityCertificate exact_cert(std::vector<HPoly> chain, const std::string& engine) {
    MultiplicityCertificate c;
    c.lower = c.upper = chain.size();
    c.witness = std::move(chain);
    c.engine = engine;
    return c;
}

// A concrete member of a nonempty set, preferring the smallest.
inline Element sample(const ElementSet& s) {
    HyperfieldId hf = s.hyperfield();
    if (!s.uses_line()) {
        if (s.points().empty()) throw std::logic_error("sample of an empty set");
        return s.points().front();
    }
    if (s.special()) return Element::zero(hf);
    if (s.line().empty()) throw std::logic_error("sample of an empty set");
    const Piece& p = s.line().pieces().front();
    Rational v;
    if (p.lo_inf) {
        v = p.hi_closed ? p.hi : p.hi - 1;
    } else if (p.lo_closed) {
        v = p.lo;
    } else if (p.hi_inf) {
        v = p.lo + 1;
    } else {
        v = (p.lo + p.hi) / 2;
    }
    switch (hf) {
        case HyperfieldId::Viro: return Element::viro(v);
        case HyperfieldId::Tropical: return Element::tropical(v);
        case HyperfieldId::Phase: return Element::phase(v);
        default: throw std::logic_error("sample: unexpected hyperfield");
    }
}

inline std::vector<HPoly> prepend(HPoly q, std::vector<HPoly> rest) {
    rest.insert(rest.begin(), std::move(q));
    return rest;
}

// Chain p, p/T, p/T^2, ... for the root zero.
inline std::vector<HPoly> zero_root_chain(const HPoly& p) {
    HPoly m = p.monic();
    std::size_t k = strip_zero_root(m).first;
    std::vector<HPoly> out;
    const auto& c = m.coeffs();
    for (std::size_t j = 1; j <= k; ++j) {
        out.emplace_back(p.hyperfield(), std::vector<Element>(c.begin() + static_cast<std::ptrdiff_t>(j), c.end()));
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------- finite

namespace detail {

class FiniteSearch {
public:
    explicit FiniteSearch(Element a) : a_(std::move(a)) {}

    std::vector<HPoly> best_chain(const HPoly& p) {
        std::string key = p.str();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<HPoly> best;
        if (is_root(p, a_)) {
            bool found = false;
            for (const auto& q : quotients(p)) {
                auto chain = best_chain(q);
                if (!found || chain.size() > best.size()) {
                    best = prepend(q, std::move(chain));
                    found = true;
                }
            }
        }
        memo_.emplace(key, best);
        return best;
    }

    // Every monic q with p in (T - a) q, in lexicographic order from the top.
    std::vector<HPoly> quotients(const HPoly& p) const {
        std::vector<HPoly> out;
        std::size_t n = p.degree();
        if (n == 0) return out;
        HyperfieldId hf = p.hyperfield();
        std::vector<Element> d(n, Element::one(hf));
        extend(p, n - 1, d, out);
        return out;
    }

private:
    void extend(const HPoly& p, std::size_t i, std::vector<Element>& d, std::vector<HPoly>& out) const {
        if (i == 0) {
            if (p.coeff(0) == negate(multiply(a_, d[0]))) out.emplace_back(p.hyperfield(), d);
            return;
        }
        ElementSet next = add(p.coeff(i), ElementSet::singleton(multiply(a_, d[i])));
        auto cands = next.enumerate();
        for (const auto& e : *cands) {
            d[i - 1] = e;
            extend(p, i - 1, d, out);
        }
    }

    Element a_;
    std::map<std::string, std::vector<HPoly>> memo_;
};

}  // namespace detail

inline MultiplicityCertificate mult_exact_finite(const HPoly& p, const Element& a) {
    if (!is_finite_hyperfield(p.hyperfield())) throw std::domain_error("finite engine needs K or S");
    if (p.degree() > 10) throw std::domain_error("finite engine refuses degree above 10");
    detail::FiniteSearch search(a);
    return detail::exact_cert(search.best_chain(p.monic()), "finite-search");
}

// Sign changes between consecutive nonzero coefficients.
inline std::size_t sign_changes(const HPoly& p) {
    if (p.hyperfield() != HyperfieldId::Sign) throw std::domain_error("sign changes need a sign polynomial");
    std::size_t count = 0;
    int last = 0;
    for (const auto& c : p.coeffs()) {
        if (c.small() == 0) continue;
        if (last != 0 && c.small() != last) ++count;
        last = c.small();
    }
    return count;
}

// p(-T)
inline HPoly reflect_argument(const HPoly& p) {
    std::vector<Element> c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = negate(c[i]);
    return {p.hyperfield(), c};
}

inline std::size_t trailing_zeros(const HPoly& p) { return strip_zero_root(p).first; }

inline std::size_t mult_sign_closed(const HPoly& p, int target) {
    if (p.hyperfield() != HyperfieldId::Sign) throw std::domain_error("sign closed form needs a sign polynomial");
    if (target == 0) return trailing_zeros(p);
    if (target == 1) return sign_changes(p);
    if (target == -1) return sign_changes(reflect_argument(p));
    throw std::domain_error("sign target must be 1, -1 or 0");
}

inline std::size_t mult_krasner(const HPoly& p, int target) {
    if (p.hyperfield() != HyperfieldId::Krasner) throw std::domain_error("Krasner closed form needs a Krasner polynomial");
    std::size_t k = trailing_zeros(p);
    if (target == 0) return k;
    if (target == 1) return p.degree() - k;
    throw std::domain_error("Krasner target must be 0 or 1");
}

// ---------------------------------------------------------------- tropical

struct TropicalRoot {
    Element value;
    std::size_t multiplicity;
};

// Roots from the upper hull of (i, c_i), largest first; the bottom element
// appears last when p has zero coefficients at the bottom.
inline std::vector<TropicalRoot> tropical_roots(const HPoly& p_in) {
    if (p_in.hyperfield() != HyperfieldId::Tropical) throw std::domain_error("tropical roots need a tropical polynomial");
    HPoly p = p_in.monic();
    auto [k, rest] = strip_zero_root(p);
    std::vector<std::pair<long, Rational>> pts;
    for (std::size_t i = 0; i <= rest.degree(); ++i) {
        if (!rest.coeff(i).is_zero()) pts.emplace_back(static_cast<long>(i), rest.coeff(i).value());
    }
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& m = hull.back();
            // drop m unless it lies strictly above the segment o -> pt
            Rational cross = (m.second - o.second) * (pt.first - o.first) - (pt.second - o.second) * (m.first - o.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<TropicalRoot> out;
    for (std::size_t e = hull.size() - 1; e >= 1; --e) {
        long w = hull[e].first - hull[e - 1].first;
        Rational slope = (hull[e].second - hull[e - 1].second) / w;
        out.push_back({Element::tropical(-slope), static_cast<std::size_t>(w)});
    }
    if (k > 0) out.push_back({Element::tropical_bottom(), k});
    return out;
}

// Monic product of T - r over the listed roots (with repetition).
inline HPoly tropical_product(const std::vector<Element>& roots) {
    std::vector<Element> c{Element::one(HyperfieldId::Tropical)};
    for (const auto& r : roots) {
        std::vector<Element> next(c.size() + 1, Element::zero(HyperfieldId::Tropical));
        for (std::size_t i = 0; i < c.size(); ++i) {
            // max-plus: next[i+1] = max(next[i+1], c[i]); next[i] = max(next[i], r + c[i])
            auto bigger = [](const Element& x, const Element& y) { return x < y ? y : x; };
            next[i + 1] = bigger(next[i + 1], c[i]);
            next[i] = bigger(next[i], multiply(r, c[i]));
        }
        c = std::move(next);
    }
    return {HyperfieldId::Tropical, c};
}

inline MultiplicityCertificate mult_tropical(const HPoly& p, const Element& a) {
    auto roots = tropical_roots(p);
    std::vector<Element> all;
    std::size_t m = 0;
    for (const auto& r : roots) {
        for (std::size_t j = 0; j < r.multiplicity; ++j) all.push_back(r.value);
        if (r.value == a) m = r.multiplicity;
    }
    if (m == 0) return detail::exact_cert({}, "tropical-hull");
    if (a.is_zero()) return detail::exact_cert(detail::zero_root_chain(p), "tropical-hull");
    // factor out T^k, build the chain on the rest, shift back
    auto [k, rest] = strip_zero_root(p.monic());
    std::erase_if(all, [](const Element& e) { return e.is_zero(); });
    auto shifted = [k = k](const HPoly& q) {
        std::vector<Element> c(k, Element::zero(HyperfieldId::Tropical));
        c.insert(c.end(), q.coeffs().begin(), q.coeffs().end());
        return HPoly(HyperfieldId::Tropical, c);
    };
    std::vector<HPoly> chain;
    HPoly prev = rest;
    for (std::size_t j = 0; j < m; ++j) {
        all.erase(std::find(all.begin(), all.end(), a));
        std::vector<Element> want = all;
        std::sort(want.begin(), want.end());
        auto good = [&](const HPoly& q) {
            if (!divides_link(prev, a, q)) return false;
            std::vector<Element> got;
            for (const auto& r : tropical_roots(q)) got.insert(got.end(), r.multiplicity, r.value);
            std::sort(got.begin(), got.end());
            return got == want;
        };
        std::optional<HPoly> found;
        if (HPoly q = tropical_product(all); good(q)) found = q;
        // Off-hull coefficients: divide from the top down to index s and from
        // the bottom up below it.
        std::size_t n = prev.degree();
        const auto& c = prev.coeffs();
        std::vector<Element> top(n, Element::tropical_bottom()), bot(n, Element::tropical_bottom());
        top[n - 1] = Element::tropical(0);
        for (std::size_t i = n - 1; i >= 1; --i) top[i - 1] = std::max(c[i], multiply(a, top[i]));
        bot[0] = multiply(c[0], inverse(a));
        for (std::size_t i = 1; i < n; ++i) bot[i] = multiply(std::max(bot[i - 1], c[i]), inverse(a));
        for (std::size_t s = 0; !found && s <= n; ++s) {
            std::vector<Element> d(n, Element::tropical_bottom());
            for (std::size_t i = 0; i < n; ++i) d[i] = i >= s ? top[i] : bot[i];
            if (d[n - 1] != Element::tropical(0)) continue;
            if (HPoly q(HyperfieldId::Tropical, d); good(q)) found = q;
        }
        if (!found) throw std::logic_error("tropical witness construction failed for " + p.str());
        chain.push_back(shifted(*found));
        prev = *found;
    }
    return detail::exact_cert(std::move(chain), "tropical-hull");
}

// ---------------------------------------------------------------- full multiplicity

// For S and P (where x + x = {x}) this decides mult_a(p) = deg p exactly:
// c_{n-k} = (-a)^k for all k. Elsewhere only the constant coefficient test
// c_0 = (-a)^n is applied, which is necessary but not sufficient.
inline bool full_mult_test(const HPoly& p_in, const Element& a) {
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    Element neg = negate(a);
    if (is_idempotent_sum(p.hyperfield())) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (p.coeff(n - k) != power(neg, static_cast<long>(k))) return false;
        }
        return true;
    }
    return p.coeff(0) == power(neg, static_cast<long>(n));
}

inline bool full_mult_test_is_iff(HyperfieldId hf) { return is_idempotent_sum(hf); }

// (T - a)^k with the coefficient pattern (-a)^j; a genuine member of the
// k-fold product when x + x contains x.
inline HPoly power_pattern(const Element& a, std::size_t k) {
    std::vector<Element> c(k + 1, Element::one(a.hyperfield()));
    Element neg = negate(a);
    for (std::size_t j = 1; j <= k; ++j) c[k - j] = power(neg, static_cast<long>(j));
    return {a.hyperfield(), c};
}

// ---------------------------------------------------------------- low degree (V and P)

namespace detail {

// Exact multiplicity for monic p of degree <= 3 over V or P at a != 0. The
// quotient of a degree-3 polynomial has one free coefficient d_1, ranging
// over the feasible set of the quotient chain.
inline MultiplicityCertificate mult_low_degree(const HPoly& p_in, const Element& a, const std::string& engine) {
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    HyperfieldId hf = p.hyperfield();
    Element one = Element::one(hf);
    Element neg = negate(a);
    Element a_inv = inverse(a);
    auto cert = [&](std::vector<HPoly> chain) { return exact_cert(std::move(chain), engine); };
    if (n == 0) return cert({});
    if (n == 1) {
        if (p.coeff(0) != neg) return cert({});
        return cert({HPoly(hf, {one})});
    }
    QuotientChain ch = quotient_chain(p, a);
    if (!ch.consistent()) return cert({});
    if (n == 2) {
        HPoly q(hf, {ch.forced_d0, one});
        if (ch.forced_d0 != neg) return cert({q});
        return cert({q, HPoly(hf, {one})});
    }
    if (n != 3) throw std::logic_error("low-degree engine called above degree 3");
    const Element& d0 = ch.forced_d0;
    const ElementSet& f = ch.feasible[1];
    // q = T^2 + d1 T + d0 has a as a root iff d1 in (-d0/a) + (-a)
    Element e = multiply(negate(d0), a_inv);
    ElementSet second = f.intersect(add(neg, ElementSet::singleton(e)));
    if (second.empty()) return cert({HPoly(hf, {d0, sample(f), one})});
    if (e == neg) {
        // then (T - a) is the quotient of q, and q needs d1 in (-a) + (-a)
        ElementSet third = second.intersect(hyperadd(neg, neg));
        if (!third.empty()) {
            return cert({HPoly(hf, {d0, sample(third), one}), HPoly(hf, {e, one}), HPoly(hf, {one})});
        }
    }
    return cert({HPoly(hf, {d0, sample(second), one}), HPoly(hf, {e, one})});
}

}  // namespace detail

// ---------------------------------------------------------------- Viro

namespace detail {

// Affine expression const + coef * x_var (var < 0 for constants).
struct Affine {
    Rational c = 0;
    Rational coef = 0;
    long var = -1;
};

// Linear constraints for a chain p = p_0, p_1, ..., p_m with
// p_{j-1} in (T - a) p_j over V. Returns nullopt when the forced constants
// already contradict each other.
struct ViroChainLp {
    std::vector<LinearRow> rows;
    std::size_t nvars = 0;
    std::vector<std::vector<Affine>> coeff;  // coeff[j][i] for p_j
};

inline std::optional<ViroChainLp> build_viro_lp(const HPoly& p, const Rational& a, std::size_t m) {
    std::size_t n = p.degree();
    ViroChainLp lp;
    lp.coeff.resize(m + 1);
    for (std::size_t i = 0; i <= n; ++i) lp.coeff[0].push_back({p.coeff(i).value(), 0, -1});
    Rational c0 = p.coeff(0).value();
    for (std::size_t j = 1; j <= m; ++j) {
        std::size_t deg = n - j;
        Rational forced = c0 / pow_int(a, static_cast<long>(j));
        for (std::size_t i = 0; i <= deg; ++i) {
            if (i == deg && i == 0) {
                if (forced != 1) return std::nullopt;
                lp.coeff[j].push_back({1, 0, -1});
            } else if (i == deg) {
                lp.coeff[j].push_back({1, 0, -1});
            } else if (i == 0) {
                lp.coeff[j].push_back({forced, 0, -1});
            } else {
                lp.coeff[j].push_back({0, 1, static_cast<long>(lp.nvars++)});
            }
        }
    }
    auto row = [&](std::initializer_list<std::pair<int, const Affine*>> terms) {
        // sum sign * expr <= 0
        LinearRow r{std::vector<Rational>(lp.nvars), 0};
        for (const auto& [sg, ex] : terms) {
            r.b -= sg * ex->c;
            if (ex->var >= 0) r.a[static_cast<std::size_t>(ex->var)] += sg * ex->coef;
        }
        lp.rows.push_back(std::move(r));
    };
    for (std::size_t v = 0; v < lp.nvars; ++v) {
        LinearRow r{std::vector<Rational>(lp.nvars), 0};
        r.a[v] = -1;
        lp.rows.push_back(std::move(r));
    }
    for (std::size_t j = 1; j <= m; ++j) {
        std::size_t deg = n - j;
        for (std::size_t i = 1; i <= deg; ++i) {
            const Affine& z = lp.coeff[j - 1][i];
            const Affine& x = lp.coeff[j][i - 1];
            Affine y = lp.coeff[j][i];
            y.c *= a;
            y.coef *= a;
            row({{1, &z}, {-1, &x}, {-1, &y}});
            row({{1, &x}, {-1, &y}, {-1, &z}});
            row({{1, &y}, {-1, &x}, {-1, &z}});
        }
    }
    return lp;
}

inline std::vector<HPoly> viro_chain_from(const ViroChainLp& lp, const std::vector<Rational>& x) {
    std::vector<HPoly> out;
    for (std::size_t j = 1; j < lp.coeff.size(); ++j) {
        std::vector<Element> c;
        for (const auto& ex : lp.coeff[j]) {
            Rational v = ex.c;
            if (ex.var >= 0) v += ex.coef * x[static_cast<std::size_t>(ex.var)];
            c.push_back(Element::viro(v));
        }
        out.emplace_back(HyperfieldId::Viro, c);
    }
    return out;
}

}  // namespace detail

inline MultiplicityCertificate mult_viro(const HPoly& p_in, const Element& a, ViroEngine engine = ViroEngine::Auto,
                                         std::size_t row_guard = 20000) {
    if (p_in.hyperfield() != HyperfieldId::Viro || a.hyperfield() != HyperfieldId::Viro) {
        throw std::domain_error("Viro engine needs Viro inputs");
    }
    if (a.is_zero()) throw std::domain_error("Viro engine needs a nonzero root; strip zero roots first");
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    if (engine == ViroEngine::Closed && n > 3) throw std::domain_error("closed interval calculus stops at degree 3");
    if (!is_root(p, a)) return detail::exact_cert({}, "viro-root-test");
    if (engine == ViroEngine::Closed || (engine == ViroEngine::Auto && n <= 3)) {
        return detail::mult_low_degree(p, a, "viro-interval");
    }
    std::vector<HPoly> best;
    for (std::size_t m = 1; m <= n; ++m) {
        auto lp = detail::build_viro_lp(p, a.value(), m);
        if (!lp) {
            MultiplicityCertificate c = detail::exact_cert(best, "viro-lp");
            c.upper_reason = "forced-constant";
            return c;
        }
        LpResult res = fm_solve(lp->rows, lp->nvars, row_guard);
        if (res.aborted) {
            MultiplicityCertificate c;
            c.lower = best.size();
            c.witness = best;
            c.upper = full_mult_test(p, a) ? n : n - 1;
            c.upper_reason = c.upper == n ? "degree" : "forced-constant";
            c.engine = "viro-lp";
            return c;
        }
        if (!res.feasible) {
            MultiplicityCertificate c = detail::exact_cert(best, "viro-lp");
            c.upper_reason = "chain-infeasible";
            return c;
        }
        best = detail::viro_chain_from(*lp, res.witness);
    }
    return detail::exact_cert(best, "viro-lp");
}

// ---------------------------------------------------------------- phase

inline MultiplicityCertificate mult_phase(const HPoly& p_in, const Element& a) {
    if (p_in.hyperfield() != HyperfieldId::Phase || a.hyperfield() != HyperfieldId::Phase) {
        throw std::domain_error("phase engine needs phase inputs");
    }
    if (a.is_zero()) throw std::domain_error("phase engine needs a nonzero root; strip zero roots first");
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    if (!is_root(p, a)) return detail::exact_cert({}, "phase-root-test");
    if (n <= 3) return detail::mult_low_degree(p, a, "phase-arc");
    if (full_mult_test(p, a)) {
        std::vector<HPoly> chain;
        for (std::size_t k = n; k-- > 0;) chain.push_back(power_pattern(a, k));
        return detail::exact_cert(std::move(chain), "phase-full-mult");
    }
    // Lower bound from one quotient followed greedily; the upper bound is
    // n - 1 since full multiplicity is excluded.
    MultiplicityCertificate c;
    c.engine = "phase-greedy";
    c.upper = n - 1;
    c.upper_reason = "full-mult";
    HPoly cur = p;
    while (cur.degree() > 3) {
        QuotientChain ch = quotient_chain(cur, a);
        if (!ch.consistent()) break;
        std::vector<Element> d(cur.degree(), Element::one(HyperfieldId::Phase));
        for (std::size_t i = cur.degree() - 1; i >= 1; --i) {
            ElementSet allowed = add(cur.coeff(i), ElementSet::singleton(multiply(a, d[i]))).intersect(ch.backward[i - 1]);
            d[i - 1] = detail::sample(allowed);
        }
        HPoly q(HyperfieldId::Phase, d);
        c.witness.push_back(q);
        cur = q;
        if (!is_root(cur, a)) break;
    }
    if (cur.degree() <= 3 && is_root(cur, a)) {
        auto tail = detail::mult_low_degree(cur, a, "phase-arc");
        c.witness.insert(c.witness.end(), tail.witness.begin(), tail.witness.end());
    }
    c.lower = c.witness.size();
    return c;
}

// ---------------------------------------------------------------- fields

inline MultiplicityCertificate mult_field(const HPoly& p, const Element& a) {
    HyperfieldId hf = p.hyperfield();
    if (hf != HyperfieldId::FieldRational && hf != HyperfieldId::FieldComplex) {
        throw std::domain_error("field engine needs Q or C");
    }
    std::vector<HPoly> chain;
    HPoly cur = p.monic();
    while (cur.degree() > 0) {
        std::size_t n = cur.degree();
        std::vector<Element> q(n, Element::zero(hf));
        q[n - 1] = cur.coeff(n);
        for (std::size_t i = n - 1; i >= 1; --i) {
            q[i - 1] = hyperadd(cur.coeff(i), multiply(a, q[i])).points().front();
        }
        Element rem = hyperadd(cur.coeff(0), multiply(a, q[0])).points().front();
        if (!rem.is_zero()) break;
        cur = HPoly(hf, q);
        chain.push_back(cur);
    }
    return detail::exact_cert(std::move(chain), "field-division");
}

// ---------------------------------------------------------------- dispatch

inline MultiplicityCertificate multiplicity(const HPoly& p, const Element& a) {
    if (a.hyperfield() != p.hyperfield()) throw std::domain_error("root from another hyperfield");
    if (a.is_zero()) return detail::exact_cert(detail::zero_root_chain(p), "zero-root");
    switch (p.hyperfield()) {
        case HyperfieldId::Krasner:
        case HyperfieldId::Sign: return mult_exact_finite(p, a);
        case HyperfieldId::Tropical: return mult_tropical(p, a);
        case HyperfieldId::Viro: {
            auto [k, rest] = strip_zero_root(p);
            return mult_viro(rest, a);
        }
        case HyperfieldId::Phase: {
            auto [k, rest] = strip_zero_root(p);
            return mult_phase(rest, a);
        }
        case HyperfieldId::FieldRational:
        case HyperfieldId::FieldComplex: return mult_field(p, a);
    }
    throw std::logic_error("bad hyperfield id");
}

// ---------------------------------------------------------------- dominance over V

struct DominanceReport {
    // indices i (coefficient of T^i, i < n) with c_i > 1 + sum of the others
    std::vector<std::size_t> dominant;
    bool one_not_root = false;         // some index dominates
    bool top_dominant = false;         // c_{n-1} dominates the lower ones
    bool no_full_mult_root = false;    // in {0} and [1, inf), needs n >= 2
    bool no_double_root_above_one = false;
};

inline DominanceReport dominance_predicates(const HPoly& p_in) {
    if (p_in.hyperfield() != HyperfieldId::Viro) throw std::domain_error("dominance needs a Viro polynomial");
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    DominanceReport r;
    Rational total = 0;
    for (const auto& c : p.coeffs()) total += c.value();
    for (std::size_t i = 0; i < n; ++i) {
        Rational ci = p.coeff(i).value();
        if (ci > total - ci) r.dominant.push_back(i);
    }
    r.one_not_root = !r.dominant.empty();
    if (n >= 1) {
        Rational top = p.coeff(n - 1).value();
        r.top_dominant = top > total - top;
    }
    r.no_full_mult_root = r.top_dominant && n >= 2;
    r.no_double_root_above_one = r.top_dominant;
    return r;
}

// ---------------------------------------------------------------- multiplicity over a set

namespace detail {

inline std::size_t mult_set_finite(const HPoly& p, const std::vector<Element>& s,
                                   std::map<std::string, std::size_t>& memo) {
    std::string key = p.str();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best = 0;
    for (const auto& a : s) {
        if (!is_root(p, a)) continue;
        FiniteSearch search(a);
        for (const auto& q : search.quotients(p)) best = std::max(best, 1 + mult_set_finite(q, s, memo));
    }
    memo.emplace(key, best);
    return best;
}

// min over I of |a - c0/a| and sup over I of a + c0/a, for I = [lo, hi]
// inside (0, inf); hi empty means unbounded.
inline bool viro_quadratic_root_in(const Rational& c1, const Rational& c0, const Rational& lo,
                                   const std::optional<Rational>& hi) {
    auto v = [&](const Rational& x) -> Rational { return abs_value(x - c0 / x); };
    auto u = [&](const Rational& x) -> Rational { return x + c0 / x; };
    Rational vmin;
    bool sqrt_inside = lo * lo <= c0 && (!hi || c0 <= *hi * *hi);
    if (sqrt_inside) vmin = 0;
    else vmin = hi && *hi * *hi < c0 ? v(*hi) : v(lo);
    if (c1 < vmin) return false;
    if (!hi) return true;
    return c1 <= std::max(u(lo), u(*hi));
}

}  // namespace detail

inline std::size_t mult_set(const HPoly& p_in, const ElementSet& s) {
    HyperfieldId hf = p_in.hyperfield();
    if (s.hyperfield() != hf) throw std::domain_error("set from another hyperfield");
    HPoly p = p_in.monic();
    if (is_finite_hyperfield(hf)) {
        if (p.degree() > 10) throw std::domain_error("set multiplicity refuses degree above 10");
        std::map<std::string, std::size_t> memo;
        return detail::mult_set_finite(p, *s.enumerate(), memo);
    }
    if (hf != HyperfieldId::Viro || p.degree() > 2) {
        throw std::domain_error("set multiplicity is supported for K, S, and V up to degree 2");
    }
    const auto& pieces = s.line().pieces();
    if (pieces.size() != 1 || pieces[0].lo_inf || !pieces[0].lo_closed || (!pieces[0].hi_inf && !pieces[0].hi_closed)) {
        throw std::domain_error("set multiplicity over V needs a closed interval");
    }
    Rational lo = pieces[0].lo;
    std::optional<Rational> hi;
    if (!pieces[0].hi_inf) hi = pieces[0].hi;
    bool has_zero = lo == 0;
    if (p.degree() == 0) return 0;
    Rational c0 = p.coeff(0).value();
    if (p.degree() == 1) return s.contains(Element::viro(c0)) ? 1 : 0;
    Rational c1 = p.coeff(1).value();
    if (c0 == 0) {
        std::size_t z = has_zero ? 1 : 0;
        if (c1 == 0) return 2 * z;
        return z + (s.contains(Element::viro(c1)) ? 1 : 0);
    }
    // zero is not a root from here on
    if (hi && *hi == 0) return 0;
    const Rational& plo = lo;
    auto root_in = [&](const Rational& l, const std::optional<Rational>& h) {
        if (l == 0) {
            // (0, h]: the infimum of v is approached, sup of u is infinite
            Rational vmin = (h && *h * *h < c0) ? abs_value(*h - c0 / *h) : Rational(0);
            return c1 >= vmin;
        }
        return detail::viro_quadratic_root_in(c1, c0, l, h);
    };
    if (!root_in(plo, hi)) return 0;
    // second root c0/a must also lie in S: a in S intersect c0/S
    Rational ilo = plo;
    std::optional<Rational> ihi = hi;
    if (hi) ilo = std::max(ilo, Rational(c0 / *hi));
    if (plo > 0) {
        Rational top(c0 / plo);
        ihi = ihi ? std::min(*ihi, top) : top;
    }
    if (ihi && ilo > *ihi) return 1;
    return root_in(ilo, ihi) ? 2 : 1;
}

}  // namespace hyperroot
