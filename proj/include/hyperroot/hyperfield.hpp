#pragma once

// The concrete hyperfields: Krasner K, signs S, tropical T, Viro (triangle) V,
// phase P, and the fields Q and C viewed as hyperfields with singleton sums.

#include "exact_complex.hpp"
#include "line_set.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperroot {

enum class HyperfieldId { Krasner, Sign, Tropical, Viro, Phase, FieldRational, FieldComplex };

inline std::string hyperfield_name(HyperfieldId id) {
    switch (id) {
        case HyperfieldId::Krasner: return "K";
        case HyperfieldId::Sign: return "S";
        case HyperfieldId::Tropical: return "T";
        case HyperfieldId::Viro: return "V";
        case HyperfieldId::Phase: return "P";
        case HyperfieldId::FieldRational: return "Q";
        case HyperfieldId::FieldComplex: return "C";
    }
    return "?";
}

inline HyperfieldId parse_hyperfield(const std::string& s) {
    if (s == "K") return HyperfieldId::Krasner;
    if (s == "S") return HyperfieldId::Sign;
    if (s == "T") return HyperfieldId::Tropical;
    if (s == "V") return HyperfieldId::Viro;
    if (s == "P") return HyperfieldId::Phase;
    if (s == "Q" || s == "R") return HyperfieldId::FieldRational;
    if (s == "C") return HyperfieldId::FieldComplex;
    throw std::invalid_argument("unknown hyperfield '" + s + "'");
}

inline bool is_finite_hyperfield(HyperfieldId id) {
    return id == HyperfieldId::Krasner || id == HyperfieldId::Sign;
}

// x + x = {x} holds in S and P, which makes full multiplicity decidable by
// coefficient comparison.
inline bool is_idempotent_sum(HyperfieldId id) { return id == HyperfieldId::Sign || id == HyperfieldId::Phase; }

class Element {
public:
    static Element krasner(int v) {
        if (v != 0 && v != 1) throw std::domain_error("Krasner elements are 0 and 1");
        Element e(HyperfieldId::Krasner);
        e.small_ = v;
        return e;
    }
    static Element sign(int v) {
        if (v < -1 || v > 1) throw std::domain_error("sign elements are -1, 0 and 1");
        Element e(HyperfieldId::Sign);
        e.small_ = v;
        return e;
    }
    static Element tropical(const Rational& v) {
        Element e(HyperfieldId::Tropical);
        e.q_ = v;
        e.q_.canonicalize();
        return e;
    }
    static Element tropical_bottom() {
        Element e(HyperfieldId::Tropical);
        e.null_ = true;
        return e;
    }
    static Element viro(const Rational& v) {
        if (v < 0) throw std::domain_error("Viro elements are nonnegative");
        Element e(HyperfieldId::Viro);
        e.q_ = v;
        e.q_.canonicalize();
        return e;
    }
    // exp(i*pi*angle)
    static Element phase(const Rational& angle) {
        Element e(HyperfieldId::Phase);
        Rational a = angle;
        a.canonicalize();
        e.q_ = a - 2 * Rational(floor_of(a / 2));
        return e;
    }
    static Element phase_zero() {
        Element e(HyperfieldId::Phase);
        e.null_ = true;
        return e;
    }
    static Element rational(const Rational& v) {
        Element e(HyperfieldId::FieldRational);
        e.q_ = v;
        e.q_.canonicalize();
        return e;
    }
    static Element complex(const ExactComplex& z) {
        Element e(HyperfieldId::FieldComplex);
        e.z_ = z;
        return e;
    }

    static Element zero(HyperfieldId id) {
        switch (id) {
            case HyperfieldId::Krasner: return krasner(0);
            case HyperfieldId::Sign: return sign(0);
            case HyperfieldId::Tropical: return tropical_bottom();
            case HyperfieldId::Viro: return viro(0);
            case HyperfieldId::Phase: return phase_zero();
            case HyperfieldId::FieldRational: return rational(0);
            case HyperfieldId::FieldComplex: return complex(ExactComplex(0));
        }
        throw std::logic_error("bad hyperfield id");
    }
    static Element one(HyperfieldId id) {
        switch (id) {
            case HyperfieldId::Krasner: return krasner(1);
            case HyperfieldId::Sign: return sign(1);
            case HyperfieldId::Tropical: return tropical(0);
            case HyperfieldId::Viro: return viro(1);
            case HyperfieldId::Phase: return phase(0);
            case HyperfieldId::FieldRational: return rational(1);
            case HyperfieldId::FieldComplex: return complex(ExactComplex(1));
        }
        throw std::logic_error("bad hyperfield id");
    }

    [[nodiscard]] HyperfieldId hyperfield() const { return hf_; }
    [[nodiscard]] int small() const { return small_; }
    // Tropical value, Viro value, phase angle (pi units) or rational value.
    [[nodiscard]] const Rational& value() const { return q_; }
    [[nodiscard]] const ExactComplex& complex_value() const { return z_; }

    [[nodiscard]] bool is_zero() const {
        switch (hf_) {
            case HyperfieldId::Krasner:
            case HyperfieldId::Sign: return small_ == 0;
            case HyperfieldId::Tropical:
            case HyperfieldId::Phase: return null_;
            case HyperfieldId::Viro:
            case HyperfieldId::FieldRational: return q_ == 0;
            case HyperfieldId::FieldComplex: return z_.is_zero();
        }
        return false;
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.hf_ != b.hf_) return false;
        switch (a.hf_) {
            case HyperfieldId::Krasner:
            case HyperfieldId::Sign: return a.small_ == b.small_;
            case HyperfieldId::Tropical:
            case HyperfieldId::Phase: return a.null_ == b.null_ && (a.null_ || a.q_ == b.q_);
            case HyperfieldId::Viro:
            case HyperfieldId::FieldRational: return a.q_ == b.q_;
            case HyperfieldId::FieldComplex: return a.z_ == b.z_;
        }
        return false;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Total order used for canonical listings (not meaningful for C).
    friend bool operator<(const Element& a, const Element& b) {
        if (a.hf_ != b.hf_) return a.hf_ < b.hf_;
        switch (a.hf_) {
            case HyperfieldId::Krasner:
            case HyperfieldId::Sign: return a.small_ < b.small_;
            case HyperfieldId::Tropical:
            case HyperfieldId::Phase:
                if (a.null_ != b.null_) return a.null_;
                return !a.null_ && a.q_ < b.q_;
            case HyperfieldId::Viro:
            case HyperfieldId::FieldRational: return a.q_ < b.q_;
            case HyperfieldId::FieldComplex: return false;
        }
        return false;
    }

    [[nodiscard]] std::string str() const {
        switch (hf_) {
            case HyperfieldId::Krasner:
            case HyperfieldId::Sign: return std::to_string(small_);
            case HyperfieldId::Tropical: return null_ ? "-inf" : to_display_string(q_);
            case HyperfieldId::Viro:
            case HyperfieldId::FieldRational: return to_display_string(q_);
            case HyperfieldId::Phase:
                if (null_) return "0";
                if (q_ == 0) return "1";
                if (q_ == 1) return "-1";
                return "exp(ipi*" + to_fraction_string(q_) + ")";
            case HyperfieldId::FieldComplex: return z_.str();
        }
        return "?";
    }

private:
    explicit Element(HyperfieldId hf) : hf_(hf) {}

    HyperfieldId hf_;
    int small_ = 0;
    bool null_ = false;
    Rational q_ = 0;
    ExactComplex z_;
};

inline void require_same(const Element& a, const Element& b) {
    if (a.hyperfield() != b.hyperfield()) {
        throw std::domain_error("elements of different hyperfields: " + hyperfield_name(a.hyperfield()) + " and " +
                                hyperfield_name(b.hyperfield()));
    }
}

inline Element multiply(const Element& a, const Element& b) {
    require_same(a, b);
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    switch (a.hyperfield()) {
        case HyperfieldId::Krasner: return Element::krasner(1);
        case HyperfieldId::Sign: return Element::sign(a.small() * b.small());
        case HyperfieldId::Tropical: return Element::tropical(a.value() + b.value());
        case HyperfieldId::Viro: return Element::viro(a.value() * b.value());
        case HyperfieldId::Phase: return Element::phase(a.value() + b.value());
        case HyperfieldId::FieldRational: return Element::rational(a.value() * b.value());
        case HyperfieldId::FieldComplex: return Element::complex(a.complex_value() * b.complex_value());
    }
    throw std::logic_error("bad hyperfield id");
}

inline Element negate(const Element& a) {
    switch (a.hyperfield()) {
        case HyperfieldId::Krasner:
        case HyperfieldId::Tropical:
        case HyperfieldId::Viro: return a;
        case HyperfieldId::Sign: return Element::sign(-a.small());
        case HyperfieldId::Phase: return a.is_zero() ? a : Element::phase(a.value() + 1);
        case HyperfieldId::FieldRational: return Element::rational(-a.value());
        case HyperfieldId::FieldComplex: return Element::complex(-a.complex_value());
    }
    throw std::logic_error("bad hyperfield id");
}

inline Element inverse(const Element& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    switch (a.hyperfield()) {
        case HyperfieldId::Krasner:
        case HyperfieldId::Sign: return a;
        case HyperfieldId::Tropical: return Element::tropical(-a.value());
        case HyperfieldId::Viro: return Element::viro(1 / a.value());
        case HyperfieldId::Phase: return Element::phase(-a.value());
        case HyperfieldId::FieldRational: return Element::rational(1 / a.value());
        case HyperfieldId::FieldComplex: return Element::complex(a.complex_value().inverse());
    }
    throw std::logic_error("bad hyperfield id");
}

inline Element power(const Element& a, long n) {
    Element r = Element::one(a.hyperfield());
    for (long i = 0; i < n; ++i) r = multiply(r, a);
    return r;
}

// The value of a hyperoperation. Finite hyperfields and fields keep explicit
// points; V keeps a union of intervals of values; T keeps intervals of values
// plus a flag for -inf; P keeps arcs of angles in [0, 2) plus a flag for 0.
class ElementSet {
public:
    explicit ElementSet(HyperfieldId hf) : hf_(hf) {}

    static ElementSet singleton(const Element& x) {
        ElementSet s(x.hyperfield());
        s.insert(x);
        return s;
    }
    static ElementSet from_line(HyperfieldId hf, LineSet line, bool special) {
        ElementSet s(hf);
        s.line_ = std::move(line);
        s.special_ = special;
        return s;
    }

    [[nodiscard]] HyperfieldId hyperfield() const { return hf_; }
    [[nodiscard]] const std::vector<Element>& points() const { return points_; }
    [[nodiscard]] const LineSet& line() const { return line_; }
    [[nodiscard]] bool special() const { return special_; }
    [[nodiscard]] bool uses_line() const {
        return hf_ == HyperfieldId::Viro || hf_ == HyperfieldId::Tropical || hf_ == HyperfieldId::Phase;
    }

    void insert(const Element& x) {
        if (x.hyperfield() != hf_) throw std::domain_error("element of another hyperfield");
        if (uses_line()) {
            if (hf_ != HyperfieldId::Viro && x.is_zero()) {
                special_ = true;
            } else {
                line_ = line_.unite(LineSet::point(x.value()));
            }
            return;
        }
        for (const auto& p : points_) {
            if (p == x) return;
        }
        points_.push_back(x);
        if (hf_ != HyperfieldId::FieldComplex) std::sort(points_.begin(), points_.end());
    }

    [[nodiscard]] bool empty() const { return points_.empty() && line_.empty() && !special_; }

    [[nodiscard]] bool contains(const Element& x) const {
        if (x.hyperfield() != hf_) throw std::domain_error("membership test across hyperfields");
        if (uses_line()) {
            if (hf_ != HyperfieldId::Viro && x.is_zero()) return special_;
            return line_.contains(x.value());
        }
        return std::any_of(points_.begin(), points_.end(), [&](const Element& p) { return p == x; });
    }

    [[nodiscard]] bool contains_zero() const { return contains(Element::zero(hf_)); }

    [[nodiscard]] ElementSet unite(const ElementSet& o) const {
        check(o);
        ElementSet r = *this;
        if (uses_line()) {
            r.line_ = line_.unite(o.line_);
            r.special_ = special_ || o.special_;
        } else {
            for (const auto& p : o.points_) r.insert(p);
        }
        return r;
    }

    [[nodiscard]] ElementSet intersect(const ElementSet& o) const {
        check(o);
        ElementSet r(hf_);
        if (uses_line()) {
            r.line_ = line_.intersect(o.line_);
            r.special_ = special_ && o.special_;
        } else {
            for (const auto& p : points_) {
                if (o.contains(p)) r.insert(p);
            }
        }
        return r;
    }

    // When the set is finite, its elements.
    [[nodiscard]] std::optional<std::vector<Element>> enumerate() const {
        if (!uses_line()) return points_;
        std::vector<Element> out;
        if (special_) out.push_back(Element::zero(hf_));
        for (const auto& p : line_.pieces()) {
            if (!p.is_point()) return std::nullopt;
            switch (hf_) {
                case HyperfieldId::Viro: out.push_back(Element::viro(p.lo)); break;
                case HyperfieldId::Tropical: out.push_back(Element::tropical(p.lo)); break;
                default: out.push_back(Element::phase(p.lo)); break;
            }
        }
        return out;
    }

    [[nodiscard]] bool subset_of(const ElementSet& o) const { return intersect(o) == *this; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        if (a.hf_ != b.hf_ || a.special_ != b.special_ || a.line_ != b.line_) return false;
        if (a.points_.size() != b.points_.size()) return false;
        return std::all_of(a.points_.begin(), a.points_.end(), [&](const Element& p) { return b.contains(p); });
    }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

private:
    void check(const ElementSet& o) const {
        if (o.hf_ != hf_) throw std::domain_error("set operation across hyperfields");
    }

    HyperfieldId hf_;
    std::vector<Element> points_;
    LineSet line_;
    bool special_ = false;
};

namespace detail {

inline ElementSet viro_add_set(const Rational& x, const ElementSet& s) {
    std::vector<Piece> out;
    for (const auto& p : s.line().pieces()) {
        Piece r;
        if (p.contains(x)) {
            r.lo = 0;
            r.lo_closed = true;
        } else if (x <= p.lo) {
            r.lo = p.lo - x;
            r.lo_closed = p.lo_closed;
        } else {
            r.lo = x - p.hi;
            r.lo_closed = p.hi_closed;
        }
        r.hi_inf = p.hi_inf;
        if (!p.hi_inf) {
            r.hi = x + p.hi;
            r.hi_closed = p.hi_closed;
        }
        out.push_back(r);
    }
    return ElementSet::from_line(HyperfieldId::Viro, LineSet(std::move(out)), false);
}

inline ElementSet tropical_add_set(const Element& x, const ElementSet& s) {
    if (x.is_zero()) return s;
    const Rational& v = x.value();
    LineSet pt = LineSet::point(v);
    LineSet result;
    bool bottom = false;
    LineSet below = s.line().intersect(LineSet::of(Piece::below(v, false)));
    if (s.special() || !below.empty()) result = result.unite(pt);
    if (s.line().contains(v)) {
        result = result.unite(LineSet::of(Piece::below(v, true)));
        bottom = true;
    }
    result = result.unite(s.line().intersect(LineSet::of(Piece::above(v, false))));
    return ElementSet::from_line(HyperfieldId::Tropical, result, bottom);
}

inline ElementSet phase_add_set(const Element& x, const ElementSet& s) {
    if (x.is_zero()) return s;
    const Rational& phi = x.value();
    LineSet rel = s.line().rotated(-phi);  // angles relative to x, in [0, 2)
    LineSet result;
    bool zero = false;
    if (s.special() || rel.contains(0)) result = result.unite(LineSet::point(0));
    LineSet first = rel.intersect(LineSet::of(Piece::open(0, 1)));
    if (!first.empty()) result = result.unite(LineSet::of(Piece::open(0, *first.supremum())));
    if (rel.contains(1)) {
        result = result.unite(LineSet::point(0)).unite(LineSet::point(1));
        zero = true;
    }
    LineSet second = rel.intersect(LineSet::of(Piece::open(1, 2)));
    if (!second.empty()) result = result.unite(LineSet::of(Piece::open(*second.infimum(), 2)));
    return ElementSet::from_line(HyperfieldId::Phase, result.rotated(phi), zero);
}

inline ElementSet finite_add(const Element& x, const Element& y) {
    ElementSet r(x.hyperfield());
    if (x.is_zero()) {
        r.insert(y);
        return r;
    }
    if (y.is_zero()) {
        r.insert(x);
        return r;
    }
    if (x.hyperfield() == HyperfieldId::Krasner) {
        r.insert(Element::krasner(0));
        r.insert(Element::krasner(1));
        return r;
    }
    if (x == y) {
        r.insert(x);
        return r;
    }
    for (int v = -1; v <= 1; ++v) r.insert(Element::sign(v));
    return r;
}

}  // namespace detail

// x + S, the union of x + s over s in S.
inline ElementSet add(const Element& x, const ElementSet& s) {
    if (x.hyperfield() != s.hyperfield()) throw std::domain_error("hyperaddition across hyperfields");
    switch (x.hyperfield()) {
        case HyperfieldId::Viro: return detail::viro_add_set(x.value(), s);
        case HyperfieldId::Tropical: return detail::tropical_add_set(x, s);
        case HyperfieldId::Phase: return detail::phase_add_set(x, s);
        default: break;
    }
    ElementSet r(x.hyperfield());
    for (const auto& p : s.points()) {
        switch (x.hyperfield()) {
            case HyperfieldId::FieldRational: r.insert(Element::rational(x.value() + p.value())); break;
            case HyperfieldId::FieldComplex: r.insert(Element::complex(x.complex_value() + p.complex_value())); break;
            default: r = r.unite(detail::finite_add(x, p)); break;
        }
    }
    return r;
}

inline ElementSet hyperadd(const Element& x, const Element& y) {
    require_same(x, y);
    return add(x, ElementSet::singleton(y));
}

// x1 + (x2 + (... + xn)), which equals every other bracketing by associativity.
inline ElementSet hypersum(const std::vector<Element>& xs) {
    if (xs.empty()) throw std::domain_error("hypersum of an empty list");
    ElementSet s = ElementSet::singleton(xs.back());
    for (std::size_t i = xs.size() - 1; i-- > 0;) s = add(xs[i], s);
    return s;
}

// S + T, the union of s + T over s in S; needs S finite or T finite.
inline ElementSet add_sets(const ElementSet& s, const ElementSet& t) {
    if (auto pts = s.enumerate()) {
        ElementSet r(s.hyperfield());
        for (const auto& p : *pts) r = r.unite(add(p, t));
        return r;
    }
    if (auto pts = t.enumerate()) return add_sets(t, s);
    throw std::domain_error("sum of two infinite sets is not supported");
}

// {x * s : s in S}
inline ElementSet scale(const Element& x, const ElementSet& s) {
    if (x.hyperfield() != s.hyperfield()) throw std::domain_error("scaling across hyperfields");
    HyperfieldId hf = x.hyperfield();
    if (s.empty()) return s;
    if (x.is_zero()) return ElementSet::singleton(x);
    switch (hf) {
        case HyperfieldId::Viro: return ElementSet::from_line(hf, s.line().affine(x.value(), 0), false);
        case HyperfieldId::Tropical: return ElementSet::from_line(hf, s.line().affine(1, x.value()), s.special());
        case HyperfieldId::Phase: return ElementSet::from_line(hf, s.line().rotated(x.value()), s.special());
        default: break;
    }
    ElementSet r(hf);
    for (const auto& p : s.points()) r.insert(multiply(x, p));
    return r;
}

inline ElementSet negate_set(const ElementSet& s) {
    switch (s.hyperfield()) {
        case HyperfieldId::Viro:
        case HyperfieldId::Tropical:
        case HyperfieldId::Krasner: return s;
        case HyperfieldId::Phase: return ElementSet::from_line(s.hyperfield(), s.line().rotated(1), s.special());
        default: break;
    }
    ElementSet r(s.hyperfield());
    for (const auto& p : s.points()) r.insert(negate(p));
    return r;
}

// Shape names of a hyperoperation value.
enum class SetShape { Empty, Singleton, Finite, ClosedInterval, DownSet, OpenArc, AntipodalTriple, Union };

inline std::string shape_name(SetShape s) {
    switch (s) {
        case SetShape::Empty: return "Empty";
        case SetShape::Singleton: return "Singleton";
        case SetShape::Finite: return "Finite";
        case SetShape::ClosedInterval: return "ClosedInterval";
        case SetShape::DownSet: return "DownSet";
        case SetShape::OpenArc: return "OpenArc";
        case SetShape::AntipodalTriple: return "AntipodalTriple";
        case SetShape::Union: return "Union";
    }
    return "?";
}

// Open arc of P given as (from, to) counterclockwise, when the set is one.
inline std::optional<std::pair<Rational, Rational>> as_open_arc(const ElementSet& s) {
    if (s.hyperfield() != HyperfieldId::Phase || s.special()) return std::nullopt;
    const auto& ps = s.line().pieces();
    auto open_piece = [](const Piece& p) { return !p.lo_closed && !p.hi_closed && p.lo < p.hi; };
    if (ps.size() == 1 && open_piece(ps[0]) && ps[0].hi - ps[0].lo < 1) return std::make_pair(ps[0].lo, ps[0].hi);
    // an arc through angle 0 is stored as [0, h) together with (l, 2)
    if (ps.size() == 2 && ps[0].lo == 0 && ps[0].lo_closed && !ps[0].hi_closed && ps[1].hi == 2 && !ps[1].lo_closed &&
        ps[0].hi + 2 - ps[1].lo < 1) {
        return std::make_pair(ps[1].lo, ps[0].hi);
    }
    return std::nullopt;
}

inline SetShape classify(const ElementSet& s) {
    if (s.empty()) return SetShape::Empty;
    if (auto pts = s.enumerate()) {
        if (pts->size() == 1) return SetShape::Singleton;
        if (s.hyperfield() == HyperfieldId::Phase && pts->size() == 3 && s.special()) {
            Rational a = (*pts)[1].value(), b = (*pts)[2].value();
            if (b - a == 1) return SetShape::AntipodalTriple;
        }
        return SetShape::Finite;
    }
    const auto& ps = s.line().pieces();
    switch (s.hyperfield()) {
        case HyperfieldId::Viro:
            if (ps.size() == 1 && ps[0].lo_closed && ps[0].hi_closed && !ps[0].hi_inf) return SetShape::ClosedInterval;
            break;
        case HyperfieldId::Tropical:
            if (ps.size() == 1 && s.special() && ps[0].lo_inf && ps[0].hi_closed && !ps[0].hi_inf) {
                return SetShape::DownSet;
            }
            break;
        case HyperfieldId::Phase:
            if (as_open_arc(s)) return SetShape::OpenArc;
            break;
        default: break;
    }
    return SetShape::Union;
}

namespace detail {

inline std::string end_str(HyperfieldId hf, const Rational& v) {
    if (hf == HyperfieldId::Phase) return Element::phase(v).str();
    return to_display_string(v);
}

}  // namespace detail

// Human-readable rendering: [0, 19], {0, 1}, [-inf, 3], arc(1, exp(ipi*1/16)).
inline std::string set_str(const ElementSet& s) {
    HyperfieldId hf = s.hyperfield();
    if (s.empty()) return "{}";
    if (auto pts = s.enumerate()) {
        std::string out = "{";
        for (std::size_t i = 0; i < pts->size(); ++i) out += (i ? ", " : "") + (*pts)[i].str();
        return out + "}";
    }
    if (auto arc = as_open_arc(s)) {
        return "arc(" + detail::end_str(hf, arc->first) + ", " + detail::end_str(hf, arc->second) + ")";
    }
    std::string out;
    auto join = [&](const std::string& part) { out += (out.empty() ? "" : " U ") + part; };
    if (s.special() && !(hf == HyperfieldId::Tropical && !s.line().empty() && s.line().pieces()[0].lo_inf)) {
        join("{" + Element::zero(hf).str() + "}");
    }
    for (const auto& p : s.line().pieces()) {
        if (p.is_point()) {
            join("{" + detail::end_str(hf, p.lo) + "}");
            continue;
        }
        std::string part;
        if (p.lo_inf) part = (hf == HyperfieldId::Tropical && s.special()) ? "[-inf" : "(-inf";
        else part = (p.lo_closed ? "[" : "(") + detail::end_str(hf, p.lo);
        part += ", ";
        if (p.hi_inf) part += "inf)";
        else part += detail::end_str(hf, p.hi) + (p.hi_closed ? "]" : ")");
        join(part);
    }
    return out;
}

struct AxiomReport {
    bool pass = true;
    std::size_t checks = 0;
    std::string first_violation;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_violation = what;
        }
    }
};

// Checks the hyperfield axioms on every pair and triple drawn from samples.
inline AxiomReport axiom_suite(HyperfieldId hf, const std::vector<Element>& samples) {
    AxiomReport rep;
    Element zero = Element::zero(hf);
    Element one = Element::one(hf);
    for (const auto& x : samples) {
        rep.record(hyperadd(zero, x) == ElementSet::singleton(x), "identity at " + x.str());
        rep.record(hyperadd(x, negate(x)).contains_zero(), "inverse at " + x.str());
        rep.record(negate(negate(x)) == x, "negation involution at " + x.str());
        rep.record(multiply(one, x) == x, "multiplicative identity at " + x.str());
        if (!x.is_zero()) rep.record(multiply(x, inverse(x)) == one, "multiplicative inverse at " + x.str());
        for (const auto& y : samples) {
            ElementSet xy = hyperadd(x, y);
            rep.record(xy == hyperadd(y, x), "commutativity at " + x.str() + ", " + y.str());
            if (y != negate(x)) {
                rep.record(!xy.contains_zero(), "unique inverse at " + x.str() + ", " + y.str());
            }
            for (const auto& z : samples) {
                std::string at = " at " + x.str() + ", " + y.str() + ", " + z.str();
                // (x + y) + z equals z + (x + y) by commutativity of the elementwise sum
                rep.record(add(z, xy) == add(x, hyperadd(y, z)), "associativity" + at);
                rep.record(hyperadd(y, z).contains(x) == hyperadd(x, negate(y)).contains(z), "reversibility" + at);
                rep.record(scale(x, hyperadd(y, z)) == hyperadd(multiply(x, y), multiply(x, z)), "distributivity" + at);
            }
        }
    }
    return rep;
}

// Deterministic sample elements: exhaustive for K and S, grids elsewhere.
inline std::vector<Element> default_samples(HyperfieldId hf) {
    std::vector<Element> out;
    switch (hf) {
        case HyperfieldId::Krasner:
            for (int v : {0, 1}) out.push_back(Element::krasner(v));
            break;
        case HyperfieldId::Sign:
            for (int v : {-1, 0, 1}) out.push_back(Element::sign(v));
            break;
        case HyperfieldId::Viro:
            for (auto v : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) out.push_back(Element::viro(v));
            break;
        case HyperfieldId::Tropical:
            out.push_back(Element::tropical_bottom());
            for (long v = -2; v <= 2; ++v) out.push_back(Element::tropical(v));
            out.push_back(Element::tropical(Rational(1, 2)));
            break;
        case HyperfieldId::Phase:
            out.push_back(Element::phase_zero());
            for (long k = 0; k < 8; ++k) out.push_back(Element::phase(make_rational(k, 4)));
            out.push_back(Element::phase(Rational(1, 3)));
            out.push_back(Element::phase(Rational(4, 3)));
            break;
        case HyperfieldId::FieldRational:
            for (long v = -2; v <= 2; ++v) out.push_back(Element::rational(v));
            out.push_back(Element::rational(Rational(1, 3)));
            break;
        case HyperfieldId::FieldComplex:
            out.push_back(Element::complex(ExactComplex(0)));
            out.push_back(Element::complex(ExactComplex(1)));
            out.push_back(Element::complex(ExactComplex::gaussian(3, 4)));
            out.push_back(Element::complex(ExactComplex::gaussian(-1, 2)));
            out.push_back(Element::complex(ExactComplex::unit(Rational(1, 3))));
            break;
    }
    return out;
}

}  // namespace hyperroot
