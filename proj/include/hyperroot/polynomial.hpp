#pragma once

// Polynomials over a hyperfield, their set-valued evaluation, the two
// hyperoperations on polynomials, and quotient-chain constraints.

#include "hyperfield.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperroot {

class HPoly {
public:
    // coeffs[i] is the coefficient of T^i.
    HPoly(HyperfieldId hf, std::vector<Element> coeffs) : hf_(hf), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::domain_error("polynomial without coefficients");
        for (const auto& c : c_) {
            if (c.hyperfield() != hf_) throw std::domain_error("coefficient from another hyperfield");
        }
        if (c_.back().is_zero()) throw std::domain_error("leading coefficient is zero");
    }

    [[nodiscard]] HyperfieldId hyperfield() const { return hf_; }
    [[nodiscard]] std::size_t degree() const { return c_.size() - 1; }
    [[nodiscard]] const Element& coeff(std::size_t i) const { return c_.at(i); }
    [[nodiscard]] const std::vector<Element>& coeffs() const { return c_; }
    [[nodiscard]] const Element& leading() const { return c_.back(); }
    [[nodiscard]] bool is_monic() const { return c_.back() == Element::one(hf_); }

    [[nodiscard]] HPoly monic() const {
        Element inv = inverse(c_.back());
        std::vector<Element> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(multiply(inv, c));
        return {hf_, std::move(out)};
    }

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.hf_ == b.hf_ && a.c_ == b.c_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    // Canonical text accepted back by the parser, e.g. T^3+1.6T^2+0.512.
    [[nodiscard]] std::string str() const {
        std::string out;
        Element one = Element::one(hf_);
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Element& c = c_[k];
            if (c.is_zero()) continue;
            std::string mono = k == 0 ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
            std::string coef = c.str();
            bool negative = !coef.empty() && coef[0] == '-' && coef != "-inf";
            if (negative) coef = coef.substr(1);
            bool compound = coef.find_first_of("/+-") != std::string::npos && coef != "-inf";
            if (compound && coef.front() != '(' && coef.find("exp(") == std::string::npos) {
                coef = "(" + coef + ")";
            }
            std::string term;
            if (c == one && !mono.empty()) {
                term = mono;
            } else if (negative && coef == "1" && !mono.empty() && hf_ != HyperfieldId::Tropical) {
                term = mono;
            } else if (mono.empty()) {
                term = coef;
            } else if (coef.find('*') != std::string::npos || coef.find("exp(") != std::string::npos) {
                term = coef + "*" + mono;
            } else {
                term = coef + mono;
            }
            if (out.empty()) out = (negative ? "-" : "") + term;
            else out += (negative ? "-" : "+") + term;
        }
        return out;
    }

private:
    HyperfieldId hf_;
    std::vector<Element> c_;
};

inline HPoly make_poly(HyperfieldId hf, const std::vector<Element>& coeffs) { return {hf, coeffs}; }

// T - a
inline HPoly linear_factor(const Element& a) {
    return {a.hyperfield(), {negate(a), Element::one(a.hyperfield())}};
}

// c_n a^n + ... + c_1 a + c_0, as a hypersum.
inline ElementSet eval(const HPoly& p, const Element& a) {
    if (a.hyperfield() != p.hyperfield()) throw std::domain_error("evaluation point from another hyperfield");
    std::vector<Element> terms;
    Element pw = Element::one(p.hyperfield());
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        terms.push_back(multiply(p.coeff(i), pw));
        pw = multiply(pw, a);
    }
    return hypersum(terms);
}

inline bool is_root(const HPoly& p, const Element& a) { return eval(p, a).contains_zero(); }

// A family of polynomials described coefficientwise.
struct SetPoly {
    HyperfieldId hf;
    std::vector<ElementSet> coeff_sets;  // index i is the set for T^i

    [[nodiscard]] std::size_t degree() const { return coeff_sets.size() - 1; }
};

inline SetPoly poly_mul(const HPoly& p, const HPoly& q) {
    if (p.hyperfield() != q.hyperfield()) throw std::domain_error("product across hyperfields");
    std::size_t n = p.degree() + q.degree();
    SetPoly r{p.hyperfield(), {}};
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Element> terms;
        for (std::size_t k = 0; k <= p.degree(); ++k) {
            if (i >= k && i - k <= q.degree()) terms.push_back(multiply(p.coeff(k), q.coeff(i - k)));
        }
        r.coeff_sets.push_back(hypersum(terms));
    }
    return r;
}

inline SetPoly poly_add(const HPoly& p, const HPoly& q) {
    if (p.hyperfield() != q.hyperfield()) throw std::domain_error("sum across hyperfields");
    std::size_t n = std::max(p.degree(), q.degree());
    Element zero = Element::zero(p.hyperfield());
    SetPoly r{p.hyperfield(), {}};
    for (std::size_t i = 0; i <= n; ++i) {
        const Element& a = i <= p.degree() ? p.coeff(i) : zero;
        const Element& b = i <= q.degree() ? q.coeff(i) : zero;
        r.coeff_sets.push_back(hyperadd(a, b));
    }
    return r;
}

inline bool member(const HPoly& p, const SetPoly& s) {
    if (p.hyperfield() != s.hf || p.degree() != s.degree()) return false;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        if (!s.coeff_sets[i].contains(p.coeff(i))) return false;
    }
    return true;
}

// p in (T - a) q
inline bool divides_link(const HPoly& p, const Element& a, const HPoly& q) {
    return member(p, poly_mul(linear_factor(a), q));
}

// Number of zero coefficients at the bottom, and p shifted down by that.
inline std::pair<std::size_t, HPoly> strip_zero_root(const HPoly& p) {
    std::size_t k = 0;
    while (p.coeff(k).is_zero()) ++k;
    std::vector<Element> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end());
    return {k, HPoly(p.hyperfield(), rest)};
}

// Constraints on the coefficients d_0..d_{n-1} of a quotient q with
// p in (T - a) q, for p monic and a nonzero:
//   d_{n-1} = 1,  d_{i-1} in c_i + a d_i,  c_0 = -a d_0.
// forward[i] is what the top-down recurrence allows for d_i, backward[i] what
// the forced d_0 allows, and feasible[i] their intersection. Because each
// constraint only links neighbouring indices, feasible[i] is exactly the set
// of values d_i takes over all valid quotients.
struct QuotientChain {
    Element root;
    Element forced_d0;
    std::vector<ElementSet> forward;
    std::vector<ElementSet> backward;
    std::vector<ElementSet> feasible;

    [[nodiscard]] bool consistent() const {
        return std::all_of(feasible.begin(), feasible.end(), [](const ElementSet& s) { return !s.empty(); });
    }
};

inline QuotientChain quotient_chain(const HPoly& p_in, const Element& a) {
    if (a.is_zero()) throw std::domain_error("quotient chain at the zero root; strip zero roots first");
    if (a.hyperfield() != p_in.hyperfield()) throw std::domain_error("root from another hyperfield");
    if (p_in.degree() == 0) throw std::domain_error("constant polynomial has no linear quotient");
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    HyperfieldId hf = p.hyperfield();
    Element d0 = multiply(negate(p.coeff(0)), inverse(a));
    QuotientChain ch{a, d0, std::vector<ElementSet>(n, ElementSet(hf)), std::vector<ElementSet>(n, ElementSet(hf)),
                     std::vector<ElementSet>(n, ElementSet(hf))};
    ch.forward[n - 1] = ElementSet::singleton(Element::one(hf));
    for (std::size_t i = n - 1; i >= 1; --i) ch.forward[i - 1] = add(p.coeff(i), scale(a, ch.forward[i]));
    Element a_inv = inverse(a);
    ch.backward[0] = ElementSet::singleton(d0);
    for (std::size_t i = 1; i < n; ++i) {
        ch.backward[i] = scale(a_inv, add(negate(p.coeff(i)), ch.backward[i - 1]));
    }
    for (std::size_t i = 0; i < n; ++i) ch.feasible[i] = ch.forward[i].intersect(ch.backward[i]);
    return ch;
}

// Whether q satisfies every chain constraint for (p, a); p need not be monic.
inline bool satisfies_chain(const HPoly& p_in, const Element& a, const HPoly& q) {
    HPoly p = p_in.monic();
    std::size_t n = p.degree();
    if (q.degree() + 1 != n || !q.is_monic()) return false;
    if (p.coeff(0) != multiply(negate(a), q.coeff(0))) return false;
    for (std::size_t i = 1; i < n; ++i) {
        if (!add(p.coeff(i), ElementSet::singleton(multiply(a, q.coeff(i)))).contains(q.coeff(i - 1))) return false;
    }
    return true;
}

}  // namespace hyperroot
