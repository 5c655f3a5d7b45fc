#include <hyperroot/cli.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace hyperroot;

namespace {

const auto Q = HyperfieldId::FieldRational;
const auto C = HyperfieldId::FieldComplex;
const auto S = HyperfieldId::Sign;
const auto TT = HyperfieldId::Tropical;
const auto V = HyperfieldId::Viro;
const auto P = HyperfieldId::Phase;
const auto K = HyperfieldId::Krasner;

Rational r(const char* s) { return parse_rational(s); }
Element ph(long num, long den) { return Element::phase(make_rational(num, den)); }

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kCorpus = HYPERROOT_CORPUS_DIR;

}  // namespace

// ---------------------------------------------------------------- homomorphisms

TEST(Apply, ExamplesPerMap) {
    EXPECT_EQ(apply(Homomorphism::sign(), Element::rational(r("-3.5"))), Element::sign(-1));
    EXPECT_EQ(apply(Homomorphism::modulus(), parse_element("3+4i", C)), Element::viro(5));
    Homomorphism nu = Homomorphism::padic(5);
    EXPECT_EQ(apply(nu, Element::rational(50)), Element::tropical(-2));
    EXPECT_EQ(apply(nu, Element::rational(Rational(1, 5))), Element::tropical(1));
    EXPECT_EQ(apply(nu, Element::rational(0)), Element::tropical_bottom());
    EXPECT_EQ(apply(Homomorphism::phase(), parse_element("1+i", C)), ph(1, 4));
    EXPECT_EQ(apply(Homomorphism::to_krasner(), parse_element("2-i", C)), Element::krasner(1));
    EXPECT_THROW(Homomorphism::padic(6), std::domain_error);
}

TEST(Apply, PadicAgreesWithDirectFactorCounting) {
    for (long num = -60; num <= 60; ++num) {
        for (long den : {1L, 3L, 25L, 40L}) {
            if (num == 0) continue;
            Rational x(num, den);
            x.canonicalize();
            // count factors of 5 by repeated division
            long e = 0;
            mpz_class n = x.get_num(), d = x.get_den();
            while (n % 5 == 0) n /= 5, ++e;
            while (d % 5 == 0) d /= 5, --e;
            EXPECT_EQ(apply(Homomorphism::padic(5), Element::rational(x)), Element::tropical(-e)) << x;
        }
    }
}

TEST(Push, ExamplesPerMap) {
    EXPECT_EQ(push(Homomorphism::sign(), parse_poly("T^2-3T+2", Q)), parse_poly("T^2-T+1", S));
    EXPECT_EQ(push(Homomorphism::modulus(), parse_poly("T^3+4T-5", C)), parse_poly("T^3+4T+5", V));
    EXPECT_EQ(push(Homomorphism::padic(5), parse_poly("T^2-26/125T+1/625", Q)), parse_poly("T^2+3T+4", TT));
    EXPECT_EQ(push(Homomorphism::modulus(), parse_poly("T^3+2T-3", C)), parse_poly("T^3+2T+3", V));
}

TEST(HomLaws, AllFiveMapsHaveNoViolations) {
    for (const Homomorphism& f : {Homomorphism::sign(), Homomorphism::modulus(), Homomorphism::phase(),
                                  Homomorphism::to_krasner(), Homomorphism::padic(5), Homomorphism::padic(7)}) {
        HomLawReport rep = hom_law_suite(f, hom_samples(f), 4);
        EXPECT_EQ(rep.violations, 0u) << f.token() << ": " << (rep.messages.empty() ? "" : rep.messages.front());
        EXPECT_GT(rep.checks, 500u) << f.token();
    }
}

TEST(HomLaws, SpotChecks) {
    // f(1 - 2 + 3) = f(2) = 1 lies in 1 + (-1) + 1
    ElementSet s = hypersum({Element::sign(1), Element::sign(-1), Element::sign(1)});
    EXPECT_TRUE(image_in(Homomorphism::sign(), Element::rational(2), s));
    // |(3+4i) + (-3-4i)| = 0 lies in [0, 10]
    EXPECT_TRUE(image_in(Homomorphism::modulus(), Element::complex(ExactComplex(0)),
                         hyperadd(Element::viro(5), Element::viro(5))));
    // nu(25) = -2 lies in the down-set of -1
    EXPECT_TRUE(image_in(Homomorphism::padic(5), Element::rational(25),
                         hyperadd(Element::tropical(-1), Element::tropical(-1))));
}

TEST(Valuation, AxiomsAndTheLogModulusCounterexample) {
    std::vector<Rational> samples{0, 1, -1, 7, 49, Rational(1, 7), Rational(14, 3), -21};
    ValuationReport rep = valuation_axioms(7, samples);
    EXPECT_EQ(rep.violations, 0u);
    EXPECT_EQ(rep.checks, samples.size() + 2 * samples.size() * samples.size());
    EXPECT_TRUE(log_modulus_breaks_ultrametric());
}

TEST(Parse, HomomorphismTokens) {
    EXPECT_EQ(parse_homomorphism("R->S").id, HomId::Sign);
    EXPECT_EQ(parse_homomorphism("Q->T:p=7").prime, 7u);
    EXPECT_EQ(parse_homomorphism("->K").token(), "C->K");
    EXPECT_EQ(parse_homomorphism("Q->K").token(), "Q->K");
    EXPECT_THROW(parse_homomorphism("C->Z"), std::exception);
}

// ---------------------------------------------------------------- lifts

TEST(Lifts, GrabinerDegreeTwo) {
    HPoly p = lift_grabiner(std::vector<int>{1, -1, 1});
    EXPECT_EQ(p, parse_poly("1/256T^2-1/4T+1", Q));
    // discriminant 1/16 - 4/256 = 3/64 > 0 and both roots positive by Vieta
    EXPECT_EQ(sturm_count(qpoly_from(p), OpenRange{Rational(0), std::nullopt}).weighted, 2u);
    HPoly q = lift_grabiner(std::vector<int>{1, 1});
    EXPECT_EQ(sturm_count(qpoly_from(q), OpenRange{Rational(0), std::nullopt}).weighted, 0u);
}

TEST(Lifts, ViroDegreeTwo) {
    Homomorphism f = Homomorphism::modulus();
    LiftResult a = lift_viro_deg2(parse_poly("T^2+3T+1", V), Element::viro(3));
    ASSERT_TRUE(a.feasible());
    EXPECT_EQ(push(f, *a.poly), parse_poly("T^2+3T+1", V));
    EXPECT_EQ(fiber_sum(f, *a.poly, Element::viro(3)).first, 1u);
    LiftResult b = lift_viro_deg2(parse_poly("T^2+T+1", V), Element::viro(1));
    ASSERT_TRUE(b.feasible());
    EXPECT_EQ(fiber_sum(f, *b.poly, Element::viro(1)).first, 2u);
    EXPECT_FALSE(lift_viro_deg2(parse_poly("T^2+3T+1", V), Element::viro(5)).feasible());
}

TEST(Lifts, ArcCombination) {
    Element c = ph(1, 24), u = ph(0, 1), w = ph(1, 16);
    ArcWeights aw = arc_combination(c, u, w);
    EXPECT_GT(aw.alpha.real_sign(), 0);
    EXPECT_GT(aw.beta.real_sign(), 0);
    ExactComplex z = aw.alpha * ExactComplex::unit(u.value()) + aw.beta * ExactComplex::unit(w.value());
    EXPECT_EQ(apply(Homomorphism::phase(), Element::complex(z)), c);
    EXPECT_THROW(arc_combination(u, u, w), std::domain_error);
}

TEST(Lifts, PhaseDegreeThree) {
    Homomorphism f = Homomorphism::phase();
    Element a = ph(1, 3);
    HPoly cube(P, {negate(power(a, 3)), power(a, 2), negate(a), Element::one(P)});
    LiftResult l3 = lift_phase_deg3(cube, a);
    ASSERT_TRUE(l3.feasible());
    EXPECT_EQ(push(f, *l3.poly), cube);
    EXPECT_EQ(fiber_sum(f, *l3.poly, a).first, 3u);
    HPoly units = parse_poly("T^3+T^2+T+1", P);
    LiftResult l0 = lift_phase_deg3(units, ph(1, 2));
    ASSERT_TRUE(l0.feasible());
    EXPECT_EQ(push(f, *l0.poly), units);
    for (const auto& [target, root] : phase_deg3_targets(20, 99)) {
        LiftResult l = lift_phase_deg3(target, root);
        ASSERT_TRUE(l.feasible()) << target.str() << ": " << l.reason;
        EXPECT_EQ(push(f, *l.poly), target);
        EXPECT_EQ(fiber_sum(f, *l.poly, root).first, multiplicity(target, root).lower) << target.str();
    }
}

TEST(Lifts, TropicalHull) {
    Homomorphism nu = Homomorphism::padic(5);
    LiftResult a = lift_tropical_hull(parse_poly("T^2+3T+4", TT), 5);
    ASSERT_TRUE(a.feasible());
    EXPECT_EQ(push(nu, *a.poly), parse_poly("T^2+3T+4", TT));
    LiftResult b = lift_tropical_hull(parse_poly("T^2-1T-2", TT), 5);
    ASSERT_TRUE(b.feasible());
    EXPECT_EQ(push(nu, *b.poly), parse_poly("T^2-1T-2", TT));
    LiftResult off = lift_tropical_hull(parse_poly("T^2-5T+0", TT), 5);
    EXPECT_FALSE(off.feasible());
    EXPECT_EQ(off.reason, "tie-case-unsupported");
    EXPECT_FALSE(lift_tropical_hull(parse_poly("T^2+3T+4", TT), 2).feasible());
}

TEST(Lifts, Krasner) {
    for (const char* s : {"T^3+T^2", "T^2+T+1", "T^2+1"}) {
        LiftResult l = lift_krasner(parse_poly(s, K));
        ASSERT_TRUE(l.feasible());
        EXPECT_EQ(*l.poly, parse_poly(s, C));
    }
    HPoly p = parse_poly("T^2+1", C);
    EXPECT_EQ(fiber_sum(Homomorphism::to_krasner(), p, Element::krasner(1)).first, 2u);
}

// ---------------------------------------------------------------- classical

TEST(Sturm, Counts) {
    EXPECT_EQ(sturm_count(qpoly_from(parse_poly("T^2-3T+2", Q)), OpenRange{Rational(0), std::nullopt}).weighted, 2u);
    EXPECT_EQ(sturm_count(qpoly_from(parse_poly("T^2+1", Q))).weighted, 0u);
    // (T - 1)^2 (T + 2): weighted vs distinct
    RootCount rc = sturm_count(qpoly_from(parse_poly("T^3-3T+2", Q)));
    EXPECT_EQ(rc.distinct, 2u);
    EXPECT_EQ(rc.weighted, 3u);
}

TEST(Sturm, AgreesWithRootsOfRandomProducts) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int k = 0; k < 100; ++k) {
        QPoly p = QPoly::constant(Rational(1));
        std::size_t positive = 0;
        for (int i = 0; i < 1 + k % 5; ++i) {
            Rational root = make_rational(d(rng), 2);
            if (root > 0) ++positive;
            p = p * QPoly::linear(root);
        }
        EXPECT_EQ(sturm_count(p, OpenRange{Rational(0), std::nullopt}).weighted, positive) << p.str();
    }
}

TEST(Aberth, ModuliOfKnownFactorizations) {
    auto moduli = [](const char* s) {
        std::vector<double> out;
        for (const auto& cl : aberth_roots(cpoly_from(parse_poly(s, C)))) {
            EXPECT_LE(cl.modulus.width(), Rational(1, 1000000000));
            for (std::size_t i = 0; i < cl.count; ++i) out.push_back(cl.modulus.mid().get_d());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto m1 = moduli("T^3+4T-5");
    ASSERT_EQ(m1.size(), 3u);
    EXPECT_NEAR(m1[0], 1.0, 1e-9);
    EXPECT_NEAR(m1[1], std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(m1[2], std::sqrt(5.0), 1e-9);
    auto m2 = moduli("T^3+2T-3");
    ASSERT_EQ(m2.size(), 3u);
    EXPECT_NEAR(m2[1], std::sqrt(3.0), 1e-9);
    auto m3 = moduli("T^2+1");
    ASSERT_EQ(m3.size(), 2u);
    EXPECT_NEAR(m3[0], 1.0, 1e-9);
}

TEST(Aberth, ClusterCountsMatchExactCircleCounts) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int k = 0; k < 40; ++k) {
        std::vector<Rational> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(d(rng));
        c.emplace_back(1);
        HPoly p(Q, [&] {
            std::vector<Element> e;
            for (const auto& x : c) e.push_back(Element::rational(x));
            return e;
        }());
        for (const auto& radius : {Rational(1, 2), Rational(1), Rational(3)}) {
            std::size_t inside = 0;
            bool clear = true;
            for (const auto& cl : aberth_roots(qpoly_from(p))) {
                if (cl.modulus.hi < radius) inside += cl.count;
                if (cl.modulus.contains(radius)) clear = false;
            }
            if (!clear) continue;
            // roots strictly inside = all roots minus those on or outside; the circle itself is empty here
            std::size_t total = p.degree();
            std::size_t outside = 0;
            for (const auto& cl : aberth_roots(qpoly_from(p))) {
                if (cl.modulus.lo > radius) outside += cl.count;
            }
            EXPECT_EQ(inside + outside, total);
            EXPECT_EQ(circle_count(cpoly_from(p), radius), 0u);
        }
    }
}

TEST(Rouche, Examples) {
    EXPECT_TRUE(rouche_dominant({r("0.512"), 0, r("1.6"), 1}, 2, 1));
    EXPECT_FALSE(rouche_dominant({1, 1, 1}, 2, 1));
    EXPECT_TRUE(rouche_dominant({r("4.096"), r("5.1"), 0, 1}, 1, 1));
    EXPECT_THROW(rouche_dominant({1, 1}, 1, 0), std::domain_error);
}

TEST(NewtonPolygon, Examples) {
    auto nv = [](const char* s, unsigned long q) {
        std::vector<std::pair<Rational, std::size_t>> out;
        for (const auto& e : padic_newton_polygon(qpoly_from(parse_poly(s, Q)), q)) {
            out.emplace_back(e.value.value(), e.multiplicity);
        }
        return out;
    };
    auto a = nv("T^2-26/125T+1/625", 5);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].first, 3);
    EXPECT_EQ(a[1].first, 1);
    auto b = nv("T^2-10T+25", 5);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].first, -1);
    EXPECT_EQ(b[0].second, 2u);
    auto c = nv("T-1", 7);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].first, 0);
}

// ---------------------------------------------------------------- sharpness

TEST(Inequality, RowsFromTheExamples) {
    FiberRow s = check_inequality(Homomorphism::sign(), parse_poly("T^2-3T+2", Q), Element::sign(1));
    EXPECT_EQ(*s.lhs, 2u);
    EXPECT_EQ(s.rhs.lower, 2u);
    EXPECT_EQ(s.verdict(), Verdict::EqualityAchieved);
    FiberRow m = check_inequality(Homomorphism::modulus(), parse_poly("T^3+4T-5", C), Element::viro(2));
    EXPECT_EQ(*m.lhs, 0u);
    EXPECT_EQ(m.rhs.lower, 2u);
    EXPECT_EQ(*m.gap(), 2);
    FiberRow k = check_inequality(Homomorphism::to_krasner(), parse_poly("T^2+1", C), Element::krasner(1));
    EXPECT_EQ(*k.lhs, 2u);
    EXPECT_EQ(k.rhs.lower, 2u);
}

TEST(Inequality, EqualityClauseOnSplitRealPolynomials) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Element> fibers{Element::sign(1), Element::sign(-1), Element::sign(0)};
    for (int k = 0; k < 60; ++k) {
        QPoly p = QPoly::constant(Rational(1));
        for (int i = 0; i < 1 + k % 5; ++i) p = p * QPoly::linear(Rational(d(rng)));
        std::vector<Element> c;
        for (const auto& x : p.coeffs()) c.push_back(Element::rational(x));
        auto eq = equality_clause(Homomorphism::sign(), HPoly(Q, c), fibers);
        ASSERT_TRUE(eq.has_value());
        EXPECT_TRUE(*eq) << p.str();
    }
}

TEST(Inequality, NeverViolatedOnRandomComplexPolynomials) {
    std::mt19937 rng(23);
    // gaussian integers with integer modulus
    const std::vector<std::pair<int, int>> pool{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -2}, {3, 0},
                                                {3, 4}, {-3, 4}, {4, -3}, {0, 5}, {-5, 0}};
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    Homomorphism f = Homomorphism::modulus();
    for (int k = 0; k < 40; ++k) {
        std::vector<Element> c;
        for (int i = 0; i < 3; ++i) {
            auto [re, im] = pool[d(rng)];
            c.push_back(Element::complex(ExactComplex::gaussian(re, im)));
        }
        c.push_back(Element::complex(ExactComplex(1)));
        HPoly p(C, c);
        for (long b = 1; b <= 3; ++b) EXPECT_NO_THROW(check_inequality(f, p, Element::viro(b))) << p.str();
    }
}

TEST(Cases, VerdictsMatchTheClaims) {
    std::map<std::string, Verdict> want{{"viro-deg2", Verdict::EqualityAchieved},
                                        {"viro-2.2.4", Verdict::GapProved},
                                        {"viro-2.2.9", Verdict::GapProved},
                                        {"phase-deg3", Verdict::EqualityAchieved},
                                        {"phase-2.3.4", Verdict::GapProved},
                                        {"krasner", Verdict::EqualityAchieved},
                                        {"signs-grabiner", Verdict::EqualityAchieved},
                                        {"tropical-hull", Verdict::EqualityAchieved}};
    for (const auto& name : case_names()) {
        SharpnessReport rep = run_case(name);
        EXPECT_EQ(verdict_name(rep.verdict()), verdict_name(want.at(name))) << name;
        for (const auto& row : rep.rows) {
            if (row.verdict() == Verdict::GapProved) EXPECT_FALSE(row.proof_tag.empty()) << name;
        }
    }
    EXPECT_THROW(run_case("no-such-case"), std::exception);
}

TEST(PhaseCounterexample, ReductionChain) {
    PhaseInfeasibility inf = phase_infeasibility_2_3_4();
    EXPECT_TRUE(inf.factorization_verified);
    EXPECT_FALSE(inf.printed_membership_holds);
    EXPECT_TRUE(inf.corrected_membership_holds);
    EXPECT_TRUE(inf.elimination_consistent);
    EXPECT_TRUE(inf.discriminant_matches);
    EXPECT_TRUE(inf.ratio_matches);
    EXPECT_TRUE(inf.reduction_matches);
    EXPECT_TRUE(inf.exact_infeasible);
    EXPECT_TRUE(inf.inequality_false());
    EXPECT_LE(inf.bits, 20);
    EXPECT_NEAR(inf.lhs.mid().get_d(), 1.9829, 1e-4);
    EXPECT_NEAR(inf.rhs.mid().get_d(), 1.3219, 1e-4);
}

TEST(Batch, ThreeEntriesMalformedAndEmpty) {
    std::istringstream three("T^2-3T+2\nT^3-T\n# comment\nT^2+1 @at 1\n");
    auto a = batch_run(three, Homomorphism::sign());
    ASSERT_EQ(a.size(), 3u);
    for (const auto& e : a) EXPECT_TRUE(e.report.has_value()) << e.diagnostic;
    EXPECT_EQ(a[2].report->rows.size(), 1u);

    std::istringstream bad("T^2-3T+2\nT^2+3T+\nT^3-T\n");
    auto b = batch_run(bad, Homomorphism::sign());
    ASSERT_EQ(b.size(), 3u);
    EXPECT_FALSE(b[1].report.has_value());
    EXPECT_NE(b[1].diagnostic.find("column 8"), std::string::npos);
    EXPECT_TRUE(b[0].report && b[2].report);

    std::istringstream empty("# nothing\n\n");
    EXPECT_TRUE(batch_run(empty, Homomorphism::sign()).empty());
}

// ---------------------------------------------------------------- CLI

TEST(Cli, EvalAndMultHumanOutput) {
    CliRun e = cli({"eval", "--hf", "V", "--poly", "T^2+3T+1", "--at", "3"});
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.out, "[0, 19]\n");
    CliRun m = cli({"mult", "--hf", "S", "--poly", "T^7-T^5-T^4+T^2-1", "--at", "1"});
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(m.out.substr(0, 2), "3\n");
    EXPECT_NE(m.out.find("agrees"), std::string::npos);
}

TEST(Cli, JsonEnvelope) {
    CliRun m = cli({"mult", "--hf", "V", "--poly", "T^3+1.6T^2+0.512", "--at", "0.8", "--json"});
    ASSERT_EQ(m.code, 0);
    Json doc = Json::parse(m.out);
    EXPECT_EQ(doc["tool_version"], kToolVersion);
    EXPECT_EQ(doc["schema_version"], kSchemaVersion);
    EXPECT_EQ(doc["command"], "mult");
    EXPECT_EQ(doc["hyperfield"], "V");
    EXPECT_EQ(doc["result"]["lower"], 3);
    EXPECT_EQ(doc["provenance"]["tolerance"], "0");
    CliRun again = cli({"--json", "mult", "--hf", "V", "--poly", "T^3+1.6T^2+0.512", "--at", "0.8"});
    EXPECT_EQ(again.out, m.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({"verify", "--case", "viro-2.2.4"}).code, 0);
    EXPECT_EQ(cli({"eval", "--hf", "V", "--poly", "T^2+(-3)T+1", "--at", "1"}).code, 1);
    EXPECT_EQ(cli({"frobnicate"}).code, 1);
    EXPECT_EQ(cli({}).code, 1);
    EXPECT_EQ(cli({"--help"}).code, 0);
    EXPECT_EQ(cli({"verify", "--case", "nope"}).code, 1);
    CliRun syntax = cli({"eval", "--hf", "V", "--poly", "T^2+3T+", "--at", "1"});
    EXPECT_EQ(syntax.code, 1);
    EXPECT_NE(syntax.err.find("column 8"), std::string::npos);
}

TEST(Cli, BatchFiles) {
    CliRun ok = cli({"batch", "--hom", "R->S", "--in", kCorpus + "/batch_signs.txt"});
    EXPECT_EQ(ok.code, 0);
    CliRun bad = cli({"batch", "--hom", "R->S", "--in", kCorpus + "/batch_malformed.txt"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("line 3"), std::string::npos);
    CliRun empty = cli({"batch", "--hom", "R->S", "--in", kCorpus + "/batch_empty.txt", "--json"});
    EXPECT_EQ(empty.code, 0);
    EXPECT_TRUE(Json::parse(empty.out)["result"]["reports"].empty());
    EXPECT_EQ(cli({"batch", "--hom", "R->S", "--in", kCorpus + "/missing.txt"}).code, 1);
}
