#pragma once

// Both sides of the multiplicity inequality for a homomorphism from a field,
// fiber by fiber, and the scripted sharp and non-sharp case studies.

#include "io.hpp"

#include <fstream>
#include <random>
#include <set>

namespace hyperroot {

enum class Verdict { EqualityAchieved, GapProved, Undecided };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::EqualityAchieved: return "EQUALITY_ACHIEVED";
        case Verdict::GapProved: return "GAP_PROVED";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

struct FiberRow {
    HPoly target;
    Element b;
    MultiplicityCertificate rhs;
    std::optional<HPoly> lift;
    std::string lift_method;  // or the infeasibility reason
    std::optional<std::size_t> lhs;
    std::string lhs_method;
    // An upper bound on the fiber sum valid for every lift, with its argument.
    std::optional<std::size_t> universal_bound;
    std::string proof_tag;

    [[nodiscard]] Verdict verdict() const {
        if (lhs && rhs.exact() && *lhs == rhs.lower) return Verdict::EqualityAchieved;
        if (universal_bound && *universal_bound < rhs.lower) return Verdict::GapProved;
        return Verdict::Undecided;
    }
    [[nodiscard]] std::optional<long> gap() const {
        if (!lhs) return std::nullopt;
        return static_cast<long>(rhs.lower) - static_cast<long>(*lhs);
    }
};

struct SharpnessReport {
    std::string name;
    Homomorphism hom;
    std::vector<FiberRow> rows;
    std::vector<std::pair<std::string, std::string>> provenance;
    std::vector<std::string> notes;

    [[nodiscard]] Verdict verdict() const {
        bool all_equal = !rows.empty();
        bool gap = false;
        for (const auto& r : rows) {
            Verdict v = r.verdict();
            all_equal = all_equal && v == Verdict::EqualityAchieved;
            gap = gap || v == Verdict::GapProved;
        }
        if (all_equal) return Verdict::EqualityAchieved;
        if (gap) return Verdict::GapProved;
        return Verdict::Undecided;
    }
};

namespace detail {

inline std::size_t zero_root_count(const HPoly& p) { return trailing_zeros(p); }

inline HyperfieldId field_source(const Homomorphism& f) {
    switch (f.id) {
        case HomId::Sign:
        case HomId::Padic: return HyperfieldId::FieldRational;
        case HomId::ToKrasner: return f.source;
        default: return HyperfieldId::FieldComplex;
    }
}

}  // namespace detail

// sum over a in f^{-1}(b) of mult_a(p), with the method used.
inline std::pair<std::size_t, std::string> fiber_sum(const Homomorphism& f, const HPoly& p, const Element& b) {
    if (p.hyperfield() != HyperfieldId::FieldRational && p.hyperfield() != HyperfieldId::FieldComplex) {
        throw std::domain_error("fiber sums need a polynomial over Q or C");
    }
    if (b.hyperfield() != f.target()) throw std::domain_error("fiber element outside the target hyperfield");
    if (b.is_zero()) return {detail::zero_root_count(p), "exact-algebra"};
    switch (f.id) {
        case HomId::Sign: {
            QPoly q = qpoly_from(p);
            OpenRange r = b.small() > 0 ? OpenRange{Rational(0), std::nullopt} : OpenRange{std::nullopt, Rational(0)};
            return {sturm_count(q, r).weighted, "sturm"};
        }
        case HomId::Modulus: return {circle_count(cpoly_from(p), b.value()), "cayley-sturm"};
        case HomId::Phase: return {ray_count(cpoly_from(p), b.value()), "ray-sturm"};
        case HomId::ToKrasner: return {p.degree() - detail::zero_root_count(p), "exact-algebra"};
        case HomId::Padic: {
            std::size_t n = 0;
            for (const auto& r : padic_newton_polygon(qpoly_from(p), f.prime)) {
                if (r.value == b) n += r.multiplicity;
            }
            return {n, "newton-polygon"};
        }
    }
    throw std::logic_error("bad homomorphism id");
}

// One fiber row for a chosen lift p; aborts when the inequality fails.
inline FiberRow check_inequality(const Homomorphism& f, const HPoly& p, const Element& b) {
    HPoly target = push(f, p);
    FiberRow row{target, b, multiplicity(target, b), p, "given", std::nullopt, "", std::nullopt, ""};
    auto [lhs, method] = fiber_sum(f, p, b);
    row.lhs = lhs;
    row.lhs_method = method;
    if (lhs > row.rhs.upper) {
        throw std::logic_error("internal inconsistency: fiber sum " + std::to_string(lhs) + " exceeds mult " +
                               std::to_string(row.rhs.upper) + " for " + p.str() + " at " + b.str());
    }
    return row;
}

inline FiberRow row_for_lift(const Homomorphism& f, const HPoly& target, const Element& b, const LiftResult& lift) {
    if (!lift.feasible()) {
        return {target, b, multiplicity(target, b), std::nullopt, lift.reason, std::nullopt, "", std::nullopt, ""};
    }
    FiberRow row = check_inequality(f, *lift.poly, b);
    row.lift_method = lift.method;
    return row;
}

// Second clause of the inequality theorem: when p splits and the target
// multiplicities over the given fibers add up to at most deg p, every fiber
// is an equality. Returns nullopt when the hypothesis does not apply.
inline std::optional<bool> equality_clause(const Homomorphism& f, const HPoly& p, const std::vector<Element>& fibers) {
    if (f.id == HomId::Sign) {
        QPoly q = qpoly_from(p);
        std::size_t real = sturm_count(q).weighted;
        if (real != p.degree()) return std::nullopt;
    }
    HPoly target = push(f, p);
    std::size_t total = 0;
    bool equal = true;
    for (const auto& b : fibers) {
        auto cert = multiplicity(target, b);
        if (!cert.exact()) return std::nullopt;
        total += cert.lower;
        equal = equal && fiber_sum(f, p, b).first == cert.lower;
    }
    if (total > p.degree()) return std::nullopt;
    return equal;
}

// ---------------------------------------------------------------- example with phase constraints

struct PhaseInfeasibility {
    bool factorization_verified = false;
    bool printed_membership_holds = false;    // the membership as the example prints it
    bool corrected_membership_holds = false;  // with 1 in place of exp(ipi/2)
    bool elimination_consistent = false;      // both forms of xy agree
    bool discriminant_matches = false;        // bound on n/m^2 from (x+y)^2 >= 4xy
    bool ratio_matches = false;               // n/m^2 forced by Im z = 0
    bool reduction_matches = false;           // reduced inequality equivalent to the unreduced one
    bool exact_infeasible = false;            // forced n/m^2 exceeds the bound, decided exactly
    Interval lhs;                             // sin(22pi/24) / sin(23pi/24)
    Interval rhs;                             // (4/3) cos(pi/24)
    long bits = 0;
    bool separated = false;

    [[nodiscard]] bool inequality_false() const { return separated && exact_infeasible; }
};

inline HPoly phase_example_target() {
    return {HyperfieldId::Phase,
            {Element::phase(Rational(23, 24)), Element::phase(Rational(1, 2)), Element::phase(Rational(1, 24)),
             Element::phase(0)}};
}

inline PhaseInfeasibility phase_infeasibility_2_3_4() {
    PhaseInfeasibility out;
    HPoly p = phase_example_target();
    Element minus_one = Element::phase(1);
    Element e16 = Element::phase(Rational(1, 16)), e23 = Element::phase(Rational(23, 24));
    HPoly q(HyperfieldId::Phase, {e23, e16, Element::phase(0)});
    HPoly r(HyperfieldId::Phase, {e23, Element::phase(0)});
    out.factorization_verified = divides_link(p, minus_one, q) && divides_link(q, minus_one, r);
    out.printed_membership_holds = hyperadd(Element::phase(Rational(1, 2)), e16).contains(Element::phase(Rational(1, 24)));
    out.corrected_membership_holds = hyperadd(Element::phase(0), e16).contains(Element::phase(Rational(1, 24)));

    auto sinpi_x = [](const Rational& x) {
        ExactComplex z = ExactComplex::unit(x);
        return (z - z.conj()) * ExactComplex::gaussian(QuadRational(0), QuadRational(Rational(-1, 2)));
    };
    auto cospi_x = [](const Rational& x) {
        ExactComplex z = ExactComplex::unit(x);
        return (z + z.conj()) * ExactComplex(Rational(1, 2));
    };
    ExactComplex s1 = sinpi_x(Rational(1, 24)), c1 = cospi_x(Rational(1, 24));
    ExactComplex s12 = sinpi_x(Rational(1, 2)), c12 = cospi_x(Rational(1, 2));
    ExactComplex s22 = sinpi_x(Rational(22, 24)), s23 = sinpi_x(Rational(23, 24));
    ExactComplex cot1 = c1 / s1;
    ExactComplex three(3), four(4);

    // With m = 1 (n/m^2 is scale invariant): x + y = k n, xy = k^2 n^2 + l n.
    ExactComplex k = s12 / s1;
    ExactComplex l_from_real_part = c12 - k * c1;  // m (x+y) cos(pi/24) + xy - n cos(pi/2) = (x+y)^2
    ExactComplex l_printed = c12 - s12 * cot1;
    out.elimination_consistent = l_from_real_part == l_printed;

    // (x+y)^2 - 4xy = -3 k^2 n^2 - 4 l n >= 0 gives n <= -4 l / (3 k^2).
    ExactComplex bound = -(four * l_printed) / (three * k * k);
    ExactComplex printed_bound = (four / three) * (s1 / s12) * (s1 / s12) * (s12 / s1 * c1 - c12);
    out.discriminant_matches = bound == printed_bound;

    // Im z = -sin(22pi/24) + (x+y) sin(23pi/24) = 0.
    ExactComplex forced = s22 / (k * s23);
    out.ratio_matches = forced == (s22 * s1) / (s23 * s12);

    ExactComplex reduced_lhs = s22 / s23;
    ExactComplex reduced_rhs = (four / three) * c1;
    out.reduction_matches = forced * reduced_rhs == bound * reduced_lhs;
    out.exact_infeasible = (forced - bound).real_sign() > 0;

    for (long bits = 20; bits <= 200; bits += 20) {
        out.bits = bits;
        out.lhs = sinpi(Rational(22, 24), bits) / sinpi(Rational(23, 24), bits);
        out.rhs = Interval(Rational(4, 3)) * cospi(Rational(1, 24), bits);
        if (out.lhs.lo > out.rhs.hi) {
            out.separated = true;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- case generators

struct ViroTriple {
    Rational a, b, c1;
};

// (a, b, c1) with c1 in [|a - b|, a + b]: the target T^2 + c1 T + ab has root a.
inline std::vector<ViroTriple> viro_deg2_grid() {
    std::vector<Rational> vals{Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2),
                               Rational(3)};
    std::vector<ViroTriple> out;
    for (const auto& a : vals) {
        for (const auto& b : vals) {
            Rational lo = abs_value(a - b), hi = a + b;
            for (int k = 0; k <= 4; ++k) out.push_back({a, b, lo + (hi - lo) * k / 4});
        }
    }
    return out;
}

inline HPoly viro_quadratic(const Rational& c1, const Rational& c0) {
    return {HyperfieldId::Viro, {Element::viro(c0), Element::viro(c1), Element::viro(1)}};
}

// Degree-3 phase targets whose multiplicity at the chosen root is 0, 1 or 3.
inline std::vector<std::pair<HPoly, Element>> phase_deg3_targets(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    auto angle = [&](int den) { return Rational(static_cast<long>(rng() % (2 * den)), den); };
    std::vector<std::pair<HPoly, Element>> out;
    std::size_t want[4] = {count * 3 / 10, count - count * 3 / 10 - count / 4, 0, count / 4};
    std::size_t have[4] = {0, 0, 0, 0};
    for (int guard = 0; out.size() < count && guard < 100000; ++guard) {
        Element lead = Element::phase(angle(12));
        Element a = Element::phase(angle(12));
        HPoly t(HyperfieldId::Phase, {Element::phase(0)});
        if (have[3] < want[3] && guard % 5 == 0) {
            t = power_pattern(a, 3);
        } else {
            std::vector<Element> c;
            for (int i = 0; i < 3; ++i) c.push_back(Element::phase(angle(12)));
            c.push_back(Element::phase(0));
            t = HPoly(HyperfieldId::Phase, c);
        }
        std::vector<Element> scaled;
        for (const auto& x : t.coeffs()) scaled.push_back(multiply(lead, x));
        t = HPoly(HyperfieldId::Phase, scaled);
        auto m = mult_phase(t, a);
        if (!m.exact() || m.lower == 2 || have[m.lower] >= want[m.lower]) continue;
        ++have[m.lower];
        out.emplace_back(t, a);
    }
    return out;
}

// Supports of degree 1..6 with a nonzero leading coefficient.
inline std::vector<HPoly> krasner_supports(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<HPoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t deg = 1 + rng() % 6;
        std::vector<Element> c;
        for (std::size_t k = 0; k < deg; ++k) c.push_back(Element::krasner(static_cast<int>(rng() % 2)));
        c.push_back(Element::krasner(1));
        out.emplace_back(HyperfieldId::Krasner, c);
    }
    return out;
}

// A Gaussian-integer polynomial with exactly the given support.
inline HPoly random_support_lift(const HPoly& support, std::mt19937& rng) {
    std::vector<Element> c;
    for (const auto& x : support.coeffs()) {
        if (x.is_zero()) {
            c.push_back(Element::complex(ExactComplex(0)));
            continue;
        }
        long re = 0, im = 0;
        while (re == 0 && im == 0) {
            re = static_cast<long>(rng() % 11) - 5;
            im = static_cast<long>(rng() % 11) - 5;
        }
        c.push_back(Element::complex(ExactComplex::gaussian(QuadRational(Rational(re)), QuadRational(Rational(im)))));
    }
    return {HyperfieldId::FieldComplex, c};
}

// All sign vectors (s_0..s_n) with s_n = 1, s_0 != 0, 1 <= n <= max_degree.
inline std::vector<std::vector<int>> grabiner_sign_vectors(std::size_t max_degree) {
    std::vector<std::vector<int>> out;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        std::size_t free = n - 1;
        std::size_t combos = 1;
        for (std::size_t i = 0; i < free; ++i) combos *= 3;
        for (int s0 : {-1, 1}) {
            for (std::size_t code = 0; code < combos; ++code) {
                std::vector<int> s{s0};
                std::size_t c = code;
                for (std::size_t i = 0; i < free; ++i) {
                    s.push_back(static_cast<int>(c % 3) - 1);
                    c /= 3;
                }
                s.push_back(1);
                out.push_back(s);
            }
        }
    }
    return out;
}

inline HPoly sign_poly(const std::vector<int>& s) {
    std::vector<Element> c;
    for (int v : s) c.push_back(Element::sign(v));
    return {HyperfieldId::Sign, c};
}

// Monic tropical targets prod (T + a_i) over integer multisets.
inline std::vector<std::vector<long>> integer_multisets(long bound, std::size_t max_degree) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, std::size_t)> walk = [&](long start, std::size_t left) {
        if (!cur.empty()) out.push_back(cur);
        if (left == 0) return;
        for (long v = start; v <= bound; ++v) {
            cur.push_back(v);
            walk(v, left - 1);
            cur.pop_back();
        }
    };
    walk(-bound, max_degree);
    return out;
}

inline HPoly tropical_target(const std::vector<long>& roots) {
    std::vector<Element> e;
    for (long r : roots) e.push_back(Element::tropical(Rational(r)));
    return tropical_product(e);
}

// ---------------------------------------------------------------- cases

inline const std::vector<std::string>& case_names() {
    static const std::vector<std::string> names{"viro-deg2", "viro-2.2.4",    "viro-2.2.9",     "phase-deg3",
                                                "phase-2.3.4", "krasner", "signs-grabiner", "tropical-hull"};
    return names;
}

inline SharpnessReport run_case(const std::string& name) {
    if (name == "viro-deg2") {
        SharpnessReport rep{name, Homomorphism::modulus(), {}, {{"engine", "viro-closed+cayley-sturm"}}, {}};
        for (const auto& t : viro_deg2_grid()) {
            HPoly target = viro_quadratic(t.c1, t.a * t.b);
            Element b = Element::viro(t.a);
            rep.rows.push_back(row_for_lift(rep.hom, target, b, lift_viro_deg2(target, b)));
        }
        return rep;
    }
    if (name == "viro-2.2.4" || name == "viro-2.2.9") {
        bool first = name == "viro-2.2.4";
        HPoly target = first ? parse_poly("T^3+1.6T^2+0.512", HyperfieldId::Viro)
                             : parse_poly("T^3+5.1T+4.096", HyperfieldId::Viro);
        Element b = Element::viro(first ? Rational(4, 5) : Rational(8, 5));
        std::size_t k = first ? 2 : 1;
        SharpnessReport rep{name, Homomorphism::modulus(), {}, {{"engine", "viro-exact+rouche"}}, {}};
        HPoly real_lift = parse_poly(target.str(), HyperfieldId::FieldComplex);
        FiberRow row = check_inequality(rep.hom, real_lift, b);
        row.lift_method = "same-coefficients";
        std::vector<Rational> moduli;
        for (const auto& c : target.coeffs()) moduli.push_back(c.value());
        if (rouche_dominant(moduli, k, 1)) {
            // every lift has exactly k roots with |z| < 1 and n - k with |z| > 1
            std::size_t n = target.degree();
            std::size_t bound = b.value() < 1 ? k : n - k;
            row.universal_bound = bound;
            row.proof_tag = "rouche-coefficient-moduli(k=" + std::to_string(k) + ",r=1)";
            if (*row.lhs > bound) throw std::logic_error("chosen lift beats the universal bound");
        }
        rep.rows.push_back(row);
        if (!first) {
            rep.notes.push_back(
                "the example is stated for its multiplicity; the Rouche bound on the same coefficients shows the "
                "inequality is strict for every lift");
        }
        return rep;
    }
    if (name == "phase-deg3") {
        SharpnessReport rep{name, Homomorphism::phase(), {}, {{"engine", "phase-exact+ray-sturm"}}, {}};
        for (const auto& [t, a] : phase_deg3_targets(50, 2024)) {
            rep.rows.push_back(row_for_lift(rep.hom, t, a, lift_phase_deg3(t, a)));
        }
        return rep;
    }
    if (name == "phase-2.3.4") {
        SharpnessReport rep{name, Homomorphism::phase(), {}, {{"engine", "phase-exact+interval"}}, {}};
        HPoly target = phase_example_target();
        Element b = Element::phase(1);
        std::vector<Element> unit;
        for (const auto& c : target.coeffs()) unit.push_back(Element::complex(ExactComplex::unit(c.value())));
        FiberRow row = check_inequality(rep.hom, HPoly(HyperfieldId::FieldComplex, unit), b);
        row.lift_method = "unit-coefficients";
        PhaseInfeasibility inf = phase_infeasibility_2_3_4();
        if (inf.inequality_false() && inf.factorization_verified && row.rhs.exact() && row.rhs.lower == 2) {
            row.universal_bound = 1;
            row.proof_tag = "constraint-system-infeasible";
        }
        rep.rows.push_back(row);
        rep.provenance.emplace_back("precision", "2^-" + std::to_string(inf.bits));
        if (!inf.printed_membership_holds && inf.corrected_membership_holds) {
            rep.notes.push_back("the first coefficient membership holds with 1 in place of exp(ipi*1/2)");
        }
        return rep;
    }
    if (name == "krasner") {
        SharpnessReport rep{name, Homomorphism::to_krasner(), {}, {{"engine", "krasner-closed+exact-algebra"}}, {}};
        std::mt19937 rng(7);
        for (const auto& s : krasner_supports(100, 11)) {
            HPoly lift = random_support_lift(s, rng);
            for (int b : {0, 1}) {
                FiberRow row = check_inequality(rep.hom, lift, Element::krasner(b));
                row.lift_method = "random-support";
                rep.rows.push_back(row);
            }
        }
        return rep;
    }
    if (name == "signs-grabiner") {
        SharpnessReport rep{name, Homomorphism::sign(), {}, {{"engine", "sign-closed+sturm"}}, {}};
        for (const auto& s : grabiner_sign_vectors(6)) {
            HPoly target = sign_poly(s);
            LiftResult lift = lift_grabiner(target);
            for (int b : {1, -1, 0}) rep.rows.push_back(row_for_lift(rep.hom, target, Element::sign(b), lift));
        }
        return rep;
    }
    if (name == "tropical-hull") {
        SharpnessReport rep{name, Homomorphism::padic(5), {}, {{"engine", "tropical-hull+newton-polygon"}}, {}};
        for (const auto& roots : integer_multisets(2, 3)) {
            HPoly target = tropical_target(roots);
            LiftResult lift = lift_tropical_hull(target, 5);
            for (const auto& r : tropical_roots(target)) rep.rows.push_back(row_for_lift(rep.hom, target, r.value, lift));
        }
        return rep;
    }
    throw std::invalid_argument("unknown case '" + name + "'");
}

// ---------------------------------------------------------------- batch

struct BatchEntry {
    std::size_t line = 0;
    std::string text;
    std::optional<SharpnessReport> report;
    std::string diagnostic;
};

inline std::vector<Element> default_fibers(const Homomorphism& f, const HPoly& target) {
    switch (f.id) {
        case HomId::Sign: return {Element::sign(1), Element::sign(-1), Element::sign(0)};
        case HomId::ToKrasner: return {Element::krasner(0), Element::krasner(1)};
        case HomId::Padic: {
            std::vector<Element> out;
            for (const auto& r : tropical_roots(target)) out.push_back(r.value);
            return out;
        }
        default: throw std::domain_error("this homomorphism needs an explicit @at fiber");
    }
}

// One polynomial per line, '#' comments, optional "@at <element>" suffix.
inline std::vector<BatchEntry> batch_run(std::istream& in, const Homomorphism& f) {
    std::vector<BatchEntry> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::size_t a = line.find_first_not_of(" \t\r"), z = line.find_last_not_of(" \t\r");
        if (a == std::string::npos) continue;
        line = line.substr(a, z - a + 1);
        BatchEntry e{lineno, line, std::nullopt, ""};
        try {
            std::string expr = line, at;
            std::size_t tag = line.find("@at");
            if (tag != std::string::npos) {
                expr = line.substr(0, tag);
                at = line.substr(tag + 3);
            }
            HPoly p = parse_poly(expr, detail::field_source(f));
            HPoly target = push(f, p);
            std::vector<Element> fibers = at.empty() ? default_fibers(f, target)
                                                     : std::vector<Element>{parse_element(at, f.target())};
            SharpnessReport rep{"line " + std::to_string(lineno), f, {}, {{"engine", "check-inequality"}}, {}};
            for (const auto& b : fibers) rep.rows.push_back(check_inequality(f, p, b));
            e.report = std::move(rep);
        } catch (const ParseError& err) {
            e.diagnostic = "line " + std::to_string(lineno) + ": " + err.what();
        } catch (const std::logic_error& err) {
            if (dynamic_cast<const std::domain_error*>(&err) == nullptr &&
                dynamic_cast<const std::invalid_argument*>(&err) == nullptr) {
                throw;
            }
            e.diagnostic = "line " + std::to_string(lineno) + ": " + err.what();
        } catch (const std::exception& err) {
            e.diagnostic = "line " + std::to_string(lineno) + ": " + err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------- JSON

inline Json row_json(const FiberRow& r) {
    Json j;
    j["target"] = r.target.str();
    j["fiber"] = element_json(r.b);
    j["rhs"] = certificate_json(r.rhs);
    j["lift"] = r.lift ? Json(r.lift->str()) : Json(nullptr);
    j["lift_method"] = r.lift_method;
    j["lhs"] = r.lhs ? Json(*r.lhs) : Json(nullptr);
    j["lhs_method"] = r.lhs_method;
    auto g = r.gap();
    j["gap"] = g ? Json(*g) : Json(nullptr);
    j["universal_bound"] = r.universal_bound ? Json(*r.universal_bound) : Json(nullptr);
    j["proof_tag"] = r.proof_tag;
    j["verdict"] = verdict_name(r.verdict());
    return j;
}

inline Json report_json(const SharpnessReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) rows.push_back(row_json(r));
    Json notes = Json::array();
    for (const auto& n : rep.notes) notes.push_back(n);
    return Json{{"name", rep.name},
                {"homomorphism", rep.hom.token()},
                {"verdict", verdict_name(rep.verdict())},
                {"rows", rows},
                {"notes", notes}};
}

}  // namespace hyperroot
