#include <hyperroot/io.hpp>
#include <hyperroot/multiplicity.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hyperroot;

namespace {

const auto K = HyperfieldId::Krasner;
const auto S = HyperfieldId::Sign;
const auto TT = HyperfieldId::Tropical;
const auto V = HyperfieldId::Viro;
const auto P = HyperfieldId::Phase;

Element v(const char* s) { return Element::viro(parse_rational(s)); }
Element t(long x) { return Element::tropical(x); }
Element ph(long num, long den) { return Element::phase(make_rational(num, den)); }

ElementSet closed(const char* lo, const char* hi) { return parse_set(std::string("[") + lo + ", " + hi + "]", V); }

}  // namespace

// ---------------------------------------------------------------- hyperaddition

TEST(Hyperadd, KrasnerOnePlusOneIsEverything) {
    ElementSet s = hyperadd(Element::krasner(1), Element::krasner(1));
    EXPECT_TRUE(s.contains(Element::krasner(0)));
    EXPECT_TRUE(s.contains(Element::krasner(1)));
}

TEST(Hyperadd, ViroIsTheTriangleInterval) {
    EXPECT_EQ(hyperadd(v("9"), v("9")), closed("0", "18"));
    EXPECT_EQ(hyperadd(v("1.6"), v("0.8")), closed("0.8", "2.4"));
    EXPECT_EQ(hyperadd(v("0"), v("5")), ElementSet::singleton(v("5")));
}

TEST(Hyperadd, TropicalTieIsADownSet) {
    ElementSet s = hyperadd(t(3), t(3));
    EXPECT_TRUE(s.contains(Element::tropical_bottom()));
    EXPECT_TRUE(s.contains(t(-100)));
    EXPECT_TRUE(s.contains(t(3)));
    EXPECT_FALSE(s.contains(Element::tropical(Rational(301, 100))));
    EXPECT_EQ(hyperadd(t(2), t(5)), ElementSet::singleton(t(5)));
    EXPECT_EQ(shape_name(classify(s)), shape_name(SetShape::DownSet));
}

TEST(Hyperadd, PhaseAntipodesGiveThreePoints) {
    ElementSet s = hyperadd(ph(1, 2), ph(3, 2));
    EXPECT_TRUE(s.contains(Element::phase_zero()));
    EXPECT_TRUE(s.contains(ph(1, 2)));
    EXPECT_TRUE(s.contains(ph(3, 2)));
    EXPECT_FALSE(s.contains(ph(0, 1)));
    EXPECT_FALSE(s.contains(ph(1, 1)));
}

TEST(Hyperadd, PhaseArcIsOpen) {
    ElementSet arc = hyperadd(ph(0, 1), ph(1, 16));
    EXPECT_TRUE(arc.contains(ph(1, 24)));
    EXPECT_FALSE(arc.contains(ph(0, 1)));
    EXPECT_FALSE(arc.contains(ph(1, 16)));
    EXPECT_FALSE(arc.contains(Element::phase_zero()));
    // the arc through angle 0 wraps around
    ElementSet wrap = hyperadd(ph(15, 8), ph(1, 8));
    EXPECT_TRUE(wrap.contains(ph(0, 1)));
    EXPECT_TRUE(wrap.contains(ph(31, 16)));
    EXPECT_FALSE(wrap.contains(ph(1, 1)));
}

TEST(Hyperadd, SignTable) {
    for (int x : {-1, 0, 1}) {
        for (int y : {-1, 0, 1}) {
            ElementSet s = hyperadd(Element::sign(x), Element::sign(y));
            // ordinary sign of a sum of reals with those signs
            std::set<int> want;
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b) {
                    if ((a > 0) - (a < 0) == x && (b > 0) - (b < 0) == y) want.insert((a + b > 0) - (a + b < 0));
                }
            }
            for (int z : {-1, 0, 1}) EXPECT_EQ(s.contains(Element::sign(z)), want.count(z) == 1) << x << " " << y << " " << z;
        }
    }
}

TEST(Hypersum, ExamplesFromTheDefinitions) {
    EXPECT_EQ(hypersum({v("9"), v("9"), v("1")}), closed("0", "19"));
    ElementSet s = hypersum({Element::sign(1), Element::sign(-1), Element::sign(1)});
    for (int z : {-1, 0, 1}) EXPECT_TRUE(s.contains(Element::sign(z)));
    EXPECT_EQ(hypersum({Element::krasner(1)}), ElementSet::singleton(Element::krasner(1)));
}

TEST(Hypersum, ViroMatchesTheClosedForm) {
    // [max(0, 2 max - sum), sum] for any list of moduli
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(0, 20);
    for (int k = 0; k < 200; ++k) {
        std::vector<Element> xs;
        Rational sum = 0, big = 0;
        for (int i = 0; i < 1 + k % 5; ++i) {
            Rational x = make_rational(d(rng), 4);
            xs.push_back(Element::viro(x));
            sum += x;
            big = std::max(big, x);
        }
        Rational lo = std::max(Rational(0), Rational(2 * big - sum));
        ElementSet got = hypersum(xs);
        EXPECT_TRUE(got.contains(Element::viro(lo)));
        EXPECT_TRUE(got.contains(Element::viro(sum)));
        EXPECT_FALSE(got.contains(Element::viro(Rational(sum + Rational(1, 1000)))));
        if (lo > 0) EXPECT_FALSE(got.contains(Element::viro(Rational(lo - Rational(1, 1000)))));
    }
}

TEST(Multiply, TropicalAndPhase) {
    EXPECT_EQ(multiply(t(2), t(3)), t(5));
    EXPECT_EQ(multiply(Element::tropical_bottom(), t(3)), Element::tropical_bottom());
    EXPECT_EQ(multiply(ph(3, 2), ph(3, 4)), ph(1, 4));
    EXPECT_EQ(negate(ph(1, 24)), ph(25, 24));
    EXPECT_EQ(negate(v("3")), v("3"));
    EXPECT_EQ(negate(t(3)), t(3));
    EXPECT_EQ(negate(Element::sign(1)), Element::sign(-1));
    EXPECT_EQ(inverse(v("0.8")), v("1.25"));
    EXPECT_THROW(inverse(Element::viro(0)), std::domain_error);
}

TEST(Elements, CrossHyperfieldOperationsAreRejected) {
    EXPECT_THROW(multiply(v("1"), t(1)), std::domain_error);
    EXPECT_THROW(hyperadd(Element::sign(1), Element::krasner(1)), std::domain_error);
    EXPECT_THROW(Element::viro(-1), std::domain_error);
    EXPECT_THROW(Element::krasner(2), std::domain_error);
}

TEST(Axioms, AllFiveHyperfieldsPass) {
    for (HyperfieldId hf : {K, S, TT, V, P}) {
        AxiomReport r = axiom_suite(hf, default_samples(hf));
        EXPECT_TRUE(r.pass) << hyperfield_name(hf) << ": " << r.first_violation;
        EXPECT_GT(r.checks, 0u);
    }
}

// ---------------------------------------------------------------- polynomials

TEST(Eval, ViroAndTropical) {
    HPoly p = parse_poly("T^2+3T+1", V);
    EXPECT_EQ(eval(p, v("3")), closed("0", "19"));
    EXPECT_TRUE(is_root(p, v("3")));
    EXPECT_FALSE(is_root(p, v("5")));
    EXPECT_EQ(eval(p, v("5")), closed("9", "41"));
    HPoly q = parse_poly("1T^3-2", TT);
    EXPECT_EQ(set_str(eval(q, t(-1))), "[-inf, -2]");
    EXPECT_EQ(eval(q, t(0)), ElementSet::singleton(t(1)));
    EXPECT_EQ(eval(q, t(-2)), ElementSet::singleton(t(-2)));
}

TEST(PolyMul, CoefficientSets) {
    HPoly a = parse_poly("T+3", V);
    SetPoly sq = poly_mul(a, a);
    EXPECT_EQ(sq.coeff_sets[2], ElementSet::singleton(v("1")));
    EXPECT_EQ(sq.coeff_sets[1], closed("0", "6"));
    EXPECT_EQ(sq.coeff_sets[0], ElementSet::singleton(v("9")));
    SetPoly s = poly_mul(parse_poly("T-1", S), parse_poly("T-1", S));
    EXPECT_EQ(s.coeff_sets[1], ElementSet::singleton(Element::sign(-1)));
    EXPECT_EQ(s.coeff_sets[0], ElementSet::singleton(Element::sign(1)));
    SetPoly k = poly_mul(parse_poly("T+1", K), parse_poly("T+1", K));
    EXPECT_TRUE(k.coeff_sets[1].contains(Element::krasner(0)) && k.coeff_sets[1].contains(Element::krasner(1)));
    SetPoly sum = poly_add(parse_poly("T^2+1", V), parse_poly("T+2", V));
    EXPECT_EQ(sum.coeff_sets[0], closed("1", "3"));
}

TEST(Member, FactorizationsFromTheExamples) {
    EXPECT_FALSE(member(parse_poly("T^2+3T+1", V), poly_mul(parse_poly("T+3", V), parse_poly("T+3", V))));
    EXPECT_TRUE(member(parse_poly("T^3+4T+5", V), poly_mul(parse_poly("T+2", V), parse_poly("T^2+2T+2.5", V))));
    HPoly quad = parse_poly("T^2+exp(ipi*1/16)*T+exp(ipi*23/24)", P);
    EXPECT_TRUE(member(quad, poly_mul(parse_poly("T+1", P), parse_poly("T+exp(ipi*23/24)", P))));
}

TEST(QuotientChain, ForcedConstantAndFirstRange) {
    QuotientChain ch = quotient_chain(parse_poly("T^3+1.6T^2+0.512", V), v("0.8"));
    EXPECT_EQ(ch.forced_d0, v("0.64"));
    EXPECT_EQ(ch.forward[1], closed("0.8", "2.4"));
    EXPECT_TRUE(ch.consistent());

    QuotientChain kc = quotient_chain(parse_poly("T^2+T+1", K), Element::krasner(1));
    EXPECT_EQ(kc.forced_d0, Element::krasner(1));
    EXPECT_TRUE(kc.forward[0].contains(Element::krasner(0)) && kc.forward[0].contains(Element::krasner(1)));

    QuotientChain sc = quotient_chain(parse_poly("T^2-T+1", S), Element::sign(1));
    EXPECT_EQ(sc.forced_d0, Element::sign(-1));
    EXPECT_TRUE(sc.feasible[0].contains(Element::sign(-1)));
    EXPECT_TRUE(satisfies_chain(parse_poly("T^2-T+1", S), Element::sign(1), parse_poly("T-1", S)));
    EXPECT_THROW(quotient_chain(parse_poly("T^2+1", V), v("0")), std::domain_error);
}

TEST(QuotientChain, AgreesWithMemberOnEveryKrasnerAndSignQuotient) {
    // satisfies_chain is a rewrite of member((T - a) q); compare them on all small cases
    for (HyperfieldId hf : {K, S}) {
        auto elems = default_samples(hf);
        std::vector<Element> nonzero;
        for (const auto& e : elems) {
            if (!e.is_zero()) nonzero.push_back(e);
        }
        for (const auto& a : nonzero) {
            for (const auto& c1 : elems) {
                for (const auto& c0 : elems) {
                    for (const auto& d0 : elems) {
                        HPoly p(hf, {c0, c1, Element::one(hf)});
                        HPoly q(hf, {d0, Element::one(hf)});
                        EXPECT_EQ(satisfies_chain(p, a, q), divides_link(p, a, q)) << p.str() << " / " << q.str();
                    }
                }
            }
        }
    }
}

TEST(StripZeroRoot, CountsTrailingZeros) {
    auto [k, q] = strip_zero_root(parse_poly("T^3+2T^2", V));
    EXPECT_EQ(k, 2u);
    EXPECT_EQ(q, parse_poly("T+2", V));
    auto [k0, q0] = strip_zero_root(parse_poly("T^2+3T+1", V));
    EXPECT_EQ(k0, 0u);
    EXPECT_EQ(q0, parse_poly("T^2+3T+1", V));
}

TEST(HPoly, LeadingZeroAndMixedCoefficientsAreRejected) {
    EXPECT_THROW(HPoly(V, {v("1"), Element::viro(0)}), std::domain_error);
    EXPECT_THROW(HPoly(V, {t(1), v("1")}), std::domain_error);
}

// ---------------------------------------------------------------- multiplicity

TEST(MultFinite, SmallExamples) {
    EXPECT_EQ(mult_exact_finite(parse_poly("T^2-T+1", S), Element::sign(1)).lower, 2u);
    EXPECT_EQ(mult_exact_finite(parse_poly("T^2+T+1", K), Element::krasner(1)).lower, 2u);
    EXPECT_EQ(mult_exact_finite(parse_poly("T+1", S), Element::sign(1)).lower, 0u);
    EXPECT_EQ(sign_changes(parse_poly("T^2-T+1", S)), 2u);
    EXPECT_EQ(sign_changes(parse_poly("T+1", S)), 0u);
    EXPECT_EQ(sign_changes(parse_poly("T^7-T^5-T^4+T^2-1", S)), 3u);
    EXPECT_EQ(mult_exact_finite(parse_poly("T^7-T^5-T^4+T^2-1", S), Element::sign(1)).lower, 3u);
}

TEST(MultClosedForms, SignAndKrasner) {
    EXPECT_EQ(mult_sign_closed(parse_poly("T^2-T+1", S), 1), 2u);
    EXPECT_EQ(mult_sign_closed(parse_poly("T^2-T+1", S), -1), 0u);
    EXPECT_EQ(mult_sign_closed(parse_poly("T^3+T^2", S), 0), 2u);
    EXPECT_EQ(mult_krasner(parse_poly("T^3+T^2+1", K), 1), 3u);
    EXPECT_EQ(mult_krasner(parse_poly("T^3+T^2", K), 1), 1u);
    EXPECT_EQ(mult_krasner(parse_poly("T^3+T^2", K), 0), 2u);
    EXPECT_EQ(mult_krasner(parse_poly("T", K), 1), 0u);
}

TEST(MultFinite, NegativeRootsMatchReflectedSignChanges) {
    for (std::size_t code = 0; code < 243; ++code) {
        std::vector<Element> c;
        std::size_t x = code;
        for (int i = 0; i < 5; ++i, x /= 3) c.push_back(Element::sign(static_cast<int>(x % 3) - 1));
        c.push_back(Element::sign(1));
        HPoly p(S, c);
        EXPECT_EQ(mult_exact_finite(p, Element::sign(-1)).lower, sign_changes(reflect_argument(p))) << p.str();
        EXPECT_EQ(mult_exact_finite(p, Element::sign(0)).lower, trailing_zeros(p)) << p.str();
    }
}

TEST(TropicalRoots, NewtonPolygon) {
    auto r = tropical_roots(parse_poly("T^2+3T+4", TT));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].value, t(3));
    EXPECT_EQ(r[1].value, t(1));
    auto dbl = tropical_roots(parse_poly("T^2-1T-2", TT));
    ASSERT_EQ(dbl.size(), 1u);
    EXPECT_EQ(dbl[0].value, t(-1));
    EXPECT_EQ(dbl[0].multiplicity, 2u);
    auto cube = tropical_roots(parse_poly("1T^3-2", TT));
    ASSERT_EQ(cube.size(), 1u);
    EXPECT_EQ(cube[0].value, t(-1));
    EXPECT_EQ(cube[0].multiplicity, 3u);
}

TEST(TropicalRoots, WitnessChainsVerifyWithZeroRootsAndGaps) {
    for (const char* s : {"T^3-3T", "T^3-1T-3", "T^4+2T^2", "T^3+3T^2-5", "T^5+1T^2"}) {
        HPoly p = parse_poly(s, TT);
        std::size_t total = 0;
        for (const auto& r : tropical_roots(p)) {
            MultiplicityCertificate c = mult_tropical(p, r.value);
            EXPECT_EQ(c.lower, r.multiplicity) << s;
            EXPECT_TRUE(verify_certificate(p, r.value, c)) << s << " at " << r.value.str();
            total += r.multiplicity;
        }
        EXPECT_EQ(total, p.degree()) << s;
    }
}

TEST(MultViro, ExamplesAndEngines) {
    auto check = [](const char* poly, const char* at, std::size_t want) {
        HPoly p = parse_poly(poly, V);
        for (ViroEngine e : {ViroEngine::Auto, ViroEngine::Closed, ViroEngine::Lp}) {
            if (e == ViroEngine::Closed && p.degree() > 3) continue;
            MultiplicityCertificate c = mult_viro(p, v(at), e);
            EXPECT_TRUE(c.exact()) << poly;
            EXPECT_EQ(c.lower, want) << poly << " at " << at;
            EXPECT_TRUE(verify_certificate(p, v(at), c)) << poly;
        }
    };
    check("T^2+3T+1", "3", 1);
    check("T^3+1.6T^2+0.512", "0.8", 3);
    check("T^3+5.1T+4.096", "1.6", 3);
    check("T^3+4T+5", "2", 2);
    check("T^2+T+1", "1", 2);
    check("T^2+3T+1", "5", 0);
}

TEST(MultViro, LpAgreesWithClosedFormOnAGrid) {
    std::vector<const char*> vals{"0", "0.5", "1", "2", "3"};
    std::size_t compared = 0;
    for (const char* c2 : vals) {
        for (const char* c1 : vals) {
            for (const char* c0 : {"0.5", "1", "2", "8"}) {
                HPoly p(V, {v(c0), v(c1), v(c2), v("1")});
                for (const char* a : {"0.5", "1", "2"}) {
                    if (!is_root(p, v(a))) continue;
                    MultiplicityCertificate lp = mult_viro(p, v(a), ViroEngine::Lp);
                    MultiplicityCertificate cl = mult_viro(p, v(a), ViroEngine::Closed);
                    EXPECT_EQ(lp.lower, cl.lower) << p.str() << " at " << a;
                    EXPECT_EQ(lp.upper, cl.upper) << p.str() << " at " << a;
                    ++compared;
                }
            }
        }
    }
    EXPECT_GT(compared, 20u);
}

TEST(MultPhase, Examples) {
    HPoly ex = parse_poly("T^3+exp(ipi*1/24)*T^2+exp(ipi*1/2)*T+exp(ipi*23/24)", P);
    MultiplicityCertificate c = mult_phase(ex, ph(1, 1));
    EXPECT_TRUE(c.exact());
    EXPECT_EQ(c.lower, 2u);
    EXPECT_TRUE(verify_certificate(ex, ph(1, 1), c));
    // (T - a)^3 pattern
    Element a = ph(1, 3);
    HPoly cube(P, {negate(power(a, 3)), power(a, 2), negate(a), Element::one(P)});
    EXPECT_EQ(mult_phase(cube, a).lower, 3u);
    EXPECT_EQ(mult_phase(parse_poly("T+1", P), ph(1, 2)).lower, 0u);
}

TEST(FullMult, NecessaryAndExactCases) {
    EXPECT_TRUE(full_mult_test(parse_poly("T^2-T+1", S), Element::sign(1)));
    EXPECT_FALSE(full_mult_test(parse_poly("T^3+exp(ipi*1/24)*T^2+exp(ipi*1/2)*T+exp(ipi*23/24)", P), ph(1, 1)));
    EXPECT_FALSE(full_mult_test(parse_poly("T^3+4T+5", V), v("2")));
    EXPECT_TRUE(full_mult_test_is_iff(S));
    EXPECT_FALSE(full_mult_test_is_iff(V));
}

TEST(Dominance, Predicates) {
    DominanceReport r = dominance_predicates(parse_poly("T^2+5T+1", V));
    EXPECT_TRUE(r.top_dominant && r.no_full_mult_root && r.no_double_root_above_one);
    for (const char* a : {"1", "1.5", "2", "4", "5"}) EXPECT_LT(mult_viro(parse_poly("T^2+5T+1", V), v(a)).upper, 2u);
    DominanceReport ex = dominance_predicates(parse_poly("T^3+5.1T+4.096", V));
    EXPECT_TRUE(ex.one_not_root);
    EXPECT_EQ(mult_viro(parse_poly("T^3+5.1T+4.096", V), v("1.6")).lower, 3u);
    DominanceReport none = dominance_predicates(parse_poly("T^2+T+1", V));
    EXPECT_TRUE(none.dominant.empty());
    EXPECT_FALSE(none.one_not_root || none.top_dominant);
}

TEST(MultSet, ExamplesAndEmptyCase) {
    EXPECT_EQ(mult_set(parse_poly("T^2+3T+1", V), parse_set("[1, inf)", V)), 1u);
    EXPECT_EQ(mult_set(parse_poly("T^2-T+1", S), parse_set("{1, -1}", S)), 2u);
    EXPECT_EQ(mult_set(parse_poly("T^2+T+1", S), parse_set("{1}", S)), 0u);
    EXPECT_EQ(mult_set(parse_poly("T^2+3T+1", V), parse_set("[10, 20]", V)), 0u);
}

TEST(Certificates, TamperedWitnessFailsVerification) {
    HPoly p = parse_poly("T^3+1.6T^2+0.512", V);
    MultiplicityCertificate c = multiplicity(p, v("0.8"));
    ASSERT_TRUE(verify_certificate(p, v("0.8"), c));
    c.witness[0] = parse_poly("T^2+5T+0.64", V);
    EXPECT_FALSE(verify_certificate(p, v("0.8"), c));
}

// ---------------------------------------------------------------- parsing

TEST(Parse, CoefficientsAndErrors) {
    HPoly p = parse_poly("T^2+3T+1", V);
    EXPECT_EQ(p.coeff(2), v("1"));
    EXPECT_EQ(p.coeff(1), v("3"));
    EXPECT_EQ(p.coeff(0), v("1"));
    EXPECT_EQ(parse_poly("T^3+5.1T+4.096", V).coeff(1).value(), Rational(51, 10));
    EXPECT_THROW(parse_poly("T^2+(-3)T+1", V), std::domain_error);
    try {
        parse_poly("T^2+3T+", V);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column() + 1, 8u);  // reported 1-based
    }
    EXPECT_THROW(parse_poly("T^2+T^2", V), ParseError);
    EXPECT_THROW(parse_poly("T^2+2T+1", S), std::domain_error);
    EXPECT_EQ(parse_poly("1T^3-2", TT).coeff(0), t(-2));
    EXPECT_EQ(parse_element("-inf", TT), Element::tropical_bottom());
    EXPECT_THROW(parse_poly("T^2-inf*T+1", TT), ParseError);
}

TEST(Parse, PrintParseRoundTrip) {
    std::vector<std::pair<const char*, HyperfieldId>> cases{
        {"T^2+3T+1", V},
        {"T^3+1.6T^2+0.512", V},
        {"T^3+exp(ipi*1/24)*T^2+exp(ipi*1/2)*T+exp(ipi*23/24)", P},
        {"T^7-T^5-T^4+T^2-1", S},
        {"T^4+T^3+T", K},
        {"1T^3-2", TT},
        {"T^2-26/125T+1/625", HyperfieldId::FieldRational},
        {"T^2+(1+i)T-2", HyperfieldId::FieldComplex},
        {"T^2+(1/2+sqrt(3)*i)T+1", HyperfieldId::FieldComplex},
    };
    for (const auto& [text, hf] : cases) {
        HPoly p = parse_poly(text, hf);
        EXPECT_EQ(parse_poly(p.str(), hf), p) << text << " printed as " << p.str();
    }
}

TEST(Parse, Sets) {
    EXPECT_EQ(set_str(parse_set("[1, inf)", V)), "[1, inf)");
    EXPECT_EQ(set_str(parse_set("[-inf, 3]", TT)), "[-inf, 3]");
    EXPECT_EQ(set_str(parse_set("{-1, 1}", S)), "{-1, 1}");
    ElementSet arc = parse_set("(exp(ipi*15/8), exp(ipi*1/8))", P);
    EXPECT_TRUE(arc.contains(ph(0, 1)));
    EXPECT_FALSE(arc.contains(ph(1, 1)));
    EXPECT_THROW(parse_set("[-inf, 3]", V), std::exception);
}

TEST(Json, ElementsAndCertificates) {
    EXPECT_EQ(element_json(Element::tropical_bottom()), "-inf");
    EXPECT_EQ(element_json(Element::sign(-1)), -1);
    Json c = certificate_json(multiplicity(parse_poly("T^2+3T+1", V), v("3")));
    EXPECT_EQ(c["lower"], 1);
    EXPECT_EQ(c["exact"], true);
    EXPECT_EQ(c["witness"].size(), 1u);
    EXPECT_EQ(poly_json(parse_poly("T^2+3T+1", V))["canonical"], "T^2+3T+1");
}
