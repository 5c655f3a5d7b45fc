#pragma once

// Text grammar for elements, polynomials and sets, and the JSON forms of
// everything the command line prints.

#include "homomorphism.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

namespace hyperroot {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error("syntax error at column " + std::to_string(column + 1) + ": " + what), column_(column) {}
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

inline std::optional<HyperfieldId> hyperfield_from_token(std::string_view t) {
    if (t == "K") return HyperfieldId::Krasner;
    if (t == "S") return HyperfieldId::Sign;
    if (t == "T") return HyperfieldId::Tropical;
    if (t == "V") return HyperfieldId::Viro;
    if (t == "P") return HyperfieldId::Phase;
    if (t == "Q" || t == "R") return HyperfieldId::FieldRational;
    if (t == "C") return HyperfieldId::FieldComplex;
    return std::nullopt;
}

inline std::string hyperfield_token(HyperfieldId hf) {
    switch (hf) {
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

namespace detail {

// A parsed numeric literal before it is placed in a hyperfield.
struct Literal {
    bool bottom = false;
    ExactComplex z;
};

class ExprParser {
public:
    ExprParser(std::string_view text, HyperfieldId hf) : s_(text), hf_(hf) {}

    HPoly polynomial() {
        std::map<std::size_t, Element> terms;
        skip();
        if (done()) fail("empty polynomial");
        bool first = true;
        while (!done()) {
            bool minus = false;
            if (peek() == '+' || peek() == '-') {
                minus = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected + or -");
            }
            std::size_t at = pos_;
            auto [coef, power] = term(minus);
            if (terms.count(power) != 0) fail("power T^" + std::to_string(power) + " appears twice", at);
            terms.emplace(power, coef);
            first = false;
            skip();
        }
        std::size_t deg = terms.rbegin()->first;
        std::vector<Element> c(deg + 1, Element::zero(hf_));
        for (auto& [k, v] : terms) c[k] = v;
        if (c.back().is_zero()) throw std::domain_error("leading coefficient is zero");
        return {hf_, c};
    }

    Element element() {
        skip();
        // complex values may be written without parentheses, e.g. 3+4i
        if (hf_ == HyperfieldId::FieldComplex && s_.find('T') == std::string_view::npos) {
            std::size_t start = pos_;
            Literal lit = sum();
            skip();
            if (!done()) fail("trailing input");
            return place(lit, false, start);
        }
        bool minus = false;
        if (peek() == '+' || peek() == '-') {
            minus = peek() == '-';
            ++pos_;
        }
        std::size_t at = pos_;
        auto [coef, power] = term(minus);
        if (power != 0) fail("an element cannot contain T", at);
        skip();
        if (!done()) fail("trailing input");
        return coef;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    }
    [[nodiscard]] bool done() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return done() ? '\0' : s_[pos_]; }
    bool eat(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view word) {
        if (!eat(word)) fail("expected '" + std::string(word) + "'");
    }

    Rational number() {
        skip();
        std::size_t start = pos_;
        auto digits = [&] {
            std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
            return pos_ > d;
        };
        if (!digits()) fail("expected a number");
        if (peek() == '.') {
            ++pos_;
            if (!digits()) fail("digits must follow the decimal point");
        }
        if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) != 0) {
            ++pos_;
            digits();
        }
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const std::exception& e) {
            fail(e.what(), start);
        }
    }

    Rational signed_number() {
        skip();
        bool minus = false;
        if (peek() == '-' || peek() == '+') {
            minus = peek() == '-';
            ++pos_;
        }
        Rational r = number();
        return minus ? Rational(-r) : r;
    }

    // factor := number | i | sqrt(n) | exp(ipi*r) | ( sum )
    std::optional<Literal> factor() {
        skip();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) return Literal{false, ExactComplex(number())};
        if (eat("sqrt(")) {
            Rational r = number();
            expect(")");
            if (r < 0) fail("square root of a negative number");
            return Literal{false, ExactComplex(QuadRational::sqrt_of(r))};
        }
        if (eat("exp(")) {
            expect("ipi*");
            Rational angle = signed_number();
            skip();
            if (peek() == '/') fail("write the angle as a single fraction");
            expect(")");
            return Literal{false, ExactComplex::unit(angle)};
        }
        if (c == 'i' && s_.substr(pos_, 3) != "inf") {
            ++pos_;
            return Literal{false, ExactComplex::imag_unit()};
        }
        if (c == '(') {
            ++pos_;
            Literal inner = sum();
            expect(")");
            return inner;
        }
        return std::nullopt;
    }

    // sum := [+-] product {(+|-) product}, inside parentheses
    Literal sum() {
        skip();
        ExactComplex acc(0);
        bool first = true;
        while (true) {
            skip();
            bool minus = false;
            if (peek() == '+' || peek() == '-') {
                minus = peek() == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            skip();
            if (eat("inf")) {
                if (!minus || !first) fail("only -inf is allowed");
                skip();
                if (peek() != ')') fail("-inf stands alone");
                return Literal{true, ExactComplex(0)};
            }
            ExactComplex prod(1);
            bool any = false;
            while (auto f = factor()) {
                if (f->bottom) fail("-inf cannot be multiplied");
                prod = prod * f->z;
                any = true;
                eat("*");
            }
            if (!any) fail("expected a number");
            acc = minus ? acc - prod : acc + prod;
            first = false;
        }
        return Literal{false, acc};
    }

    Element place(const Literal& lit, bool minus, std::size_t at) {
        auto bad = [&](const std::string& why) -> Element {
            throw std::domain_error("coefficient not in " + hyperfield_name(hf_) + ": '" +
                                    std::string(s_.substr(at, pos_ - at)) + "' (" + why + ")");
        };
        if (lit.bottom) {
            if (hf_ != HyperfieldId::Tropical) return bad("-inf only exists in the tropical hyperfield");
            return Element::tropical_bottom();
        }
        if (hf_ == HyperfieldId::Tropical) {
            auto r = lit.z.as_rational();
            if (!r) return bad("tropical values are rational");
            return Element::tropical(minus ? Rational(-*r) : *r);
        }
        Element e = Element::zero(hf_);
        if (hf_ == HyperfieldId::FieldComplex) {
            e = Element::complex(lit.z);
        } else if (hf_ == HyperfieldId::Phase) {
            if (lit.z.is_zero()) {
                e = Element::phase_zero();
            } else {
                if (!(lit.z.abs_squared() == ExactComplex(1))) return bad("phase coefficients have modulus 1");
                auto ph = detail::phase_of(lit.z);
                if (!ph) return bad("angle is not a rational multiple of pi");
                e = Element::phase(*ph);
            }
        } else {
            auto r = lit.z.as_rational();
            if (!r) return bad("expected a rational value");
            switch (hf_) {
                case HyperfieldId::Krasner:
                    if (*r != 0 && *r != 1) return bad("expected 0 or 1");
                    e = Element::krasner(r->get_num().get_si());
                    break;
                case HyperfieldId::Sign:
                    if (*r != 0 && *r != 1 && *r != -1) return bad("expected -1, 0 or 1");
                    e = Element::sign(static_cast<int>(r->get_num().get_si()));
                    break;
                case HyperfieldId::Viro:
                    if (*r < 0) return bad("negative");
                    e = Element::viro(*r);
                    break;
                default: e = Element::rational(*r); break;
            }
        }
        return minus ? negate(e) : e;
    }

    // term := [-inf] | {factor [*]} [T [^ n]]
    std::pair<Element, std::size_t> term(bool minus) {
        skip();
        std::size_t at = pos_;
        if (minus && eat("inf")) {
            std::size_t end = pos_;
            skip();
            if (!done() && peek() != '+' && peek() != '-') fail("-inf stands alone", end);
            return {place(Literal{true, ExactComplex(0)}, false, at), 0};
        }
        std::optional<Literal> coef;
        std::size_t coef_end = pos_;
        while (auto f = factor()) {
            if (coef && (coef->bottom || f->bottom)) fail("-inf cannot be multiplied");
            coef = coef ? Literal{false, coef->z * f->z} : *f;
            coef_end = pos_;
            eat("*");
        }
        std::size_t power = 0;
        skip();
        if (peek() == 'T') {
            ++pos_;
            power = 1;
            if (eat("^")) {
                skip();
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
                if (pos_ == start || pos_ - start > 3) fail("expected a small exponent", start);
                power = std::stoul(std::string(s_.substr(start, pos_ - start)));
            }
        } else if (!coef) {
            fail("expected a coefficient or T");
        }
        std::size_t saved = pos_;
        pos_ = coef_end;
        Element value = coef ? place(*coef, minus, at) : (minus ? negate(Element::one(hf_)) : Element::one(hf_));
        pos_ = saved;
        return {value, power};
    }

    std::string_view s_;
    HyperfieldId hf_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline HPoly parse_poly(std::string_view text, HyperfieldId hf) { return detail::ExprParser(text, hf).polynomial(); }

inline Element parse_element(std::string_view text, HyperfieldId hf) { return detail::ExprParser(text, hf).element(); }

// Sets: {a, b, ...}, or intervals/arcs such as [1, inf), (0, 2], [-inf, 3].
inline ElementSet parse_set(std::string_view text, HyperfieldId hf) {
    std::string t(text);
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    t = trim(t);
    if (t.size() < 2) throw ParseError("expected a set", 0);
    char open = t.front(), close = t.back();
    std::string body = t.substr(1, t.size() - 2);
    if (open == '{' && close == '}') {
        ElementSet s(hf);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!trim(item).empty()) s.insert(parse_element(trim(item), hf));
        }
        return s;
    }
    if ((open != '[' && open != '(') || (close != ']' && close != ')')) throw ParseError("expected {..}, [..] or (..)", 0);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("interval needs two ends", 1);
    std::string lo = trim(body.substr(0, comma)), hi = trim(body.substr(comma + 1));
    if (hf != HyperfieldId::Viro && hf != HyperfieldId::Tropical && hf != HyperfieldId::Phase) {
        throw std::domain_error("intervals are only meaningful in V, T and P");
    }
    auto value_of = [&](const std::string& s) -> Rational {
        Element e = parse_element(s, hf);
        if (e.is_zero() && hf != HyperfieldId::Viro) throw std::domain_error("use -inf or 0 only as an open end");
        return e.value();
    };
    bool special = false;
    Piece p;
    if (lo == "-inf") {
        if (hf != HyperfieldId::Tropical) throw std::domain_error("-inf bound outside the tropical hyperfield");
        p.lo_inf = true;
        special = open == '[';
    } else {
        p.lo = value_of(lo);
        p.lo_closed = open == '[';
    }
    if (hi == "inf") {
        if (hf == HyperfieldId::Phase) throw std::domain_error("arcs end at an angle");
        p.hi_inf = true;
    } else {
        p.hi = value_of(hi);
        p.hi_closed = close == ']';
    }
    if (hf == HyperfieldId::Phase) {
        // counterclockwise arc from lo to hi, split at angle 0 when it wraps
        std::vector<Piece> ps;
        if (p.hi > p.lo || (p.hi == p.lo && p.lo_closed && p.hi_closed)) {
            ps.push_back(p);
        } else {
            ps.push_back({0, p.hi, true, p.hi_closed, false, false});
            ps.push_back({p.lo, 2, p.lo_closed, false, false, false});
        }
        return ElementSet::from_line(hf, LineSet(ps), false);
    }
    return ElementSet::from_line(hf, LineSet::of(p), special);
}

// ---------------------------------------------------------------- JSON

inline std::string rational_json(const Rational& r) { return to_fraction_string(r); }

inline std::string angle_json(const Rational& r) {
    return r.get_num().get_str() + "π/" + r.get_den().get_str();
}

inline Json element_json(const Element& e) {
    switch (e.hyperfield()) {
        case HyperfieldId::Krasner:
        case HyperfieldId::Sign: return e.small();
        case HyperfieldId::Tropical: return e.is_zero() ? std::string("-inf") : rational_json(e.value());
        case HyperfieldId::Viro:
        case HyperfieldId::FieldRational: return rational_json(e.value());
        case HyperfieldId::Phase: return e.is_zero() ? std::string("0") : angle_json(e.value());
        case HyperfieldId::FieldComplex: {
            const ExactComplex& z = e.complex_value();
            auto re = z.real_part().as_rational(), im = z.imag_part().as_rational();
            if (re && im) return Json{{"re", rational_json(*re)}, {"im", rational_json(*im)}};
            return Json{{"exact", z.str()}};
        }
    }
    return nullptr;
}

inline Json set_json(const ElementSet& s) {
    Json j;
    j["shape"] = shape_name(classify(s));
    j["text"] = set_str(s);
    if (auto pts = s.enumerate()) {
        Json arr = Json::array();
        for (const auto& x : *pts) arr.push_back(element_json(x));
        j["elements"] = arr;
    } else {
        Json arr = Json::array();
        bool phase = s.hyperfield() == HyperfieldId::Phase;
        auto end = [&](const Rational& v) { return phase ? angle_json(v) : rational_json(v); };
        for (const auto& p : s.line().pieces()) {
            arr.push_back(Json{{"lo", p.lo_inf ? std::string("-inf") : end(p.lo)},
                               {"lo_closed", p.lo_closed},
                               {"hi", p.hi_inf ? std::string("inf") : end(p.hi)},
                               {"hi_closed", p.hi_closed}});
        }
        j["pieces"] = arr;
        j["contains_zero"] = s.contains_zero();
    }
    return j;
}

inline Json poly_json(const HPoly& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(element_json(x));
    return Json{{"canonical", p.str()}, {"coefficients", c}};
}

inline Json certificate_json(const MultiplicityCertificate& c) {
    Json w = Json::array();
    for (const auto& q : c.witness) w.push_back(q.str());
    return Json{{"lower", c.lower},   {"upper", c.upper},   {"exact", c.exact()},
                {"engine", c.engine}, {"upper_reason", c.upper_reason}, {"witness", w}};
}

}  // namespace hyperroot
