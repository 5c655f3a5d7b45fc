#pragma once

// The hyperroot command line as a function, so tests can call it in-process.

#include "sharpness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace hyperroot {

namespace detail {

struct CliOptions {
    bool json = false;
    std::string hf, poly, at, set, hom, target, case_name, in, out;
    int mult = -1;
};

inline HyperfieldId require_hf(const std::string& token) {
    auto hf = hyperfield_from_token(token);
    if (!hf) throw std::invalid_argument("unknown hyperfield '" + token + "' (use K, S, T, V, P, Q or C)");
    return *hf;
}

inline Json envelope(const std::string& command, const std::optional<HyperfieldId>& hf, const std::optional<Homomorphism>& f,
                     const std::optional<HPoly>& p, Json result, const std::string& engine,
                     const std::string& precision = "exact") {
    return Json{{"tool_version", kToolVersion},
                {"schema_version", kSchemaVersion},
                {"command", command},
                {"hyperfield", hf ? Json(hyperfield_token(*hf)) : Json(nullptr)},
                {"homomorphism", f ? Json(f->token()) : Json(nullptr)},
                {"polynomial", p ? poly_json(*p) : Json(nullptr)},
                {"result", std::move(result)},
                {"provenance", Json{{"engine", engine}, {"tolerance", "0"}, {"precision", precision}}}};
}

// Independent recount used as a cross-check note for mult.
inline std::optional<std::pair<std::string, std::size_t>> mult_cross_check(const HPoly& p, const Element& a) {
    switch (p.hyperfield()) {
        case HyperfieldId::Sign: return std::make_pair(std::string("sign-changes"), mult_sign_closed(p, a.small()));
        case HyperfieldId::Krasner: return std::make_pair(std::string("krasner-closed"), mult_krasner(p, a.small()));
        case HyperfieldId::Viro:
            if (!a.is_zero() && p.degree() <= 3 && strip_zero_root(p).first == 0) {
                auto lp = mult_viro(p, a, ViroEngine::Lp);
                if (lp.exact()) return std::make_pair(std::string("viro-lp"), lp.lower);
            }
            break;
        default: break;
    }
    return std::nullopt;
}

inline int cmd_eval(const CliOptions& o, std::ostream& out) {
    HyperfieldId hf = require_hf(o.hf);
    HPoly p = parse_poly(o.poly, hf);
    Element a = parse_element(o.at, hf);
    ElementSet v = eval(p, a);
    if (o.json) {
        Json r = Json{{"at", element_json(a)}, {"value", set_json(v)}, {"is_root", v.contains_zero()}};
        out << envelope("eval", hf, std::nullopt, p, r, "hypersum").dump(2) << "\n";
    } else {
        out << set_str(v) << "\n";
    }
    return 0;
}

inline int cmd_mult(const CliOptions& o, std::ostream& out) {
    HyperfieldId hf = require_hf(o.hf);
    HPoly p = parse_poly(o.poly, hf);
    if (!o.set.empty()) {
        ElementSet s = parse_set(o.set, hf);
        std::size_t m = mult_set(p, s);
        if (o.json) {
            Json r = Json{{"set", set_json(s)}, {"multiplicity", m}};
            out << envelope("mult", hf, std::nullopt, p, r, "mult-set").dump(2) << "\n";
        } else {
            out << m << "\n";
        }
        return 0;
    }
    Element a = parse_element(o.at, hf);
    MultiplicityCertificate c = multiplicity(p, a);
    auto cross = mult_cross_check(p, a);
    if (cross && c.exact() && cross->second != c.lower) {
        throw std::logic_error("engines disagree: " + c.engine + " gives " + std::to_string(c.lower) + ", " +
                               cross->first + " gives " + std::to_string(cross->second));
    }
    if (o.json) {
        Json r = certificate_json(c);
        r["at"] = element_json(a);
        r["cross_check"] = cross ? Json{{"engine", cross->first}, {"value", cross->second}} : Json(nullptr);
        out << envelope("mult", hf, std::nullopt, p, r, c.engine).dump(2) << "\n";
    } else {
        if (c.exact()) out << c.lower << "\n";
        else out << "between " << c.lower << " and " << c.upper << " (" << c.upper_reason << ")\n";
        out << "engine: " << c.engine << "\n";
        if (cross) out << "cross-check: " << cross->first << " gives " << cross->second << " (agrees)\n";
        for (const auto& q : c.witness) out << "quotient: " << q.str() << "\n";
    }
    return 0;
}

inline int cmd_push(const CliOptions& o, std::ostream& out) {
    Homomorphism f = parse_homomorphism(o.hom);
    HPoly p = parse_poly(o.poly, field_source(f));
    HPoly q = push(f, p);
    if (o.json) {
        out << envelope("push", f.target(), f, p, Json{{"image", poly_json(q)}}, "coefficientwise").dump(2) << "\n";
    } else {
        out << q.str() << "\n";
    }
    return 0;
}

inline int cmd_lift(const CliOptions& o, std::ostream& out) {
    Homomorphism f = parse_homomorphism(o.hom);
    HPoly target = parse_poly(o.target, f.target());
    auto at = [&]() {
        if (o.at.empty()) throw std::invalid_argument("this lift needs --at");
        return parse_element(o.at, f.target());
    };
    LiftResult r;
    switch (f.id) {
        case HomId::Sign: r = lift_grabiner(target); break;
        case HomId::Modulus: r = lift_viro_deg2(target, at()); break;
        case HomId::Phase:
            r = lift_phase_deg3(target, at(), o.mult >= 0 ? std::optional<std::size_t>(o.mult) : std::nullopt);
            break;
        case HomId::Padic: r = lift_tropical_hull(target, f.prime); break;
        case HomId::ToKrasner: r = lift_krasner(target, f.source); break;
    }
    if (o.json) {
        Json res = Json{{"feasible", r.feasible()},
                        {"lift", r.poly ? poly_json(*r.poly) : Json(nullptr)},
                        {"method", r.method},
                        {"reason", r.reason},
                        {"push_verified", r.feasible()}};
        out << envelope("lift", f.target(), f, target, res, r.feasible() ? r.method : "none").dump(2) << "\n";
    } else if (r.feasible()) {
        out << r.poly->str() << "\n";
    } else {
        out << "INFEASIBLE: " << r.reason << "\n";
    }
    return 0;
}

inline std::string precision_of(const SharpnessReport& rep) {
    for (const auto& [k, v] : rep.provenance) {
        if (k == "precision") return v;
    }
    return "exact";
}

inline std::string engine_of(const SharpnessReport& rep) {
    for (const auto& [k, v] : rep.provenance) {
        if (k == "engine") return v;
    }
    return "";
}

inline int cmd_verify(const CliOptions& o, std::ostream& out) {
    SharpnessReport rep = run_case(o.case_name);
    Verdict v = rep.verdict();
    if (o.json) {
        std::optional<HPoly> p;
        if (rep.rows.size() == 1) p = rep.rows.front().target;
        out << envelope("verify", rep.hom.target(), rep.hom, p, report_json(rep), engine_of(rep), precision_of(rep)).dump(2)
            << "\n";
    } else {
        out << "case " << rep.name << ": " << verdict_name(v) << "\n";
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& r : rep.rows) ++counts[static_cast<int>(r.verdict())];
        out << "rows: " << rep.rows.size() << " (equality " << counts[0] << ", gap proved " << counts[1] << ", undecided "
            << counts[2] << ")\n";
        std::size_t shown = 0;
        for (const auto& r : rep.rows) {
            if (shown == 5) {
                out << "...\n";
                break;
            }
            ++shown;
            out << "  " << r.target.str() << " at " << r.b.str() << ": mult " << r.rhs.lower;
            if (r.lhs) out << ", fiber sum " << *r.lhs << " (" << r.lhs_method << ")";
            else out << ", no lift (" << r.lift_method << ")";
            if (!r.proof_tag.empty()) out << ", every lift <= " << *r.universal_bound << " by " << r.proof_tag;
            out << "\n";
        }
        for (const auto& n : rep.notes) out << "note: " << n << "\n";
    }
    return v == Verdict::Undecided ? 2 : 0;
}

inline int cmd_batch(const CliOptions& o, std::ostream& out, std::ostream& err) {
    Homomorphism f = parse_homomorphism(o.hom);
    std::ifstream in(o.in);
    if (!in) throw std::invalid_argument("cannot read '" + o.in + "'");
    auto entries = batch_run(in, f);
    Json reports = Json::array(), diags = Json::array();
    std::size_t failures = 0;
    std::string text;
    for (const auto& e : entries) {
        if (e.report) {
            reports.push_back(Json{{"line", e.line}, {"input", e.text}, {"report", report_json(*e.report)}});
            text += "line " + std::to_string(e.line) + ": " + verdict_name(e.report->verdict()) + "\n";
        } else {
            ++failures;
            diags.push_back(e.diagnostic);
            err << e.diagnostic << "\n";
        }
    }
    std::string body = o.json ? envelope("batch", f.target(), f, std::nullopt,
                                         Json{{"reports", reports}, {"diagnostics", diags}}, "check-inequality")
                                        .dump(2) +
                                    "\n"
                              : text;
    if (o.out.empty() || o.out == "-") {
        out << body;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot write '" + o.out + "'");
        file << body;
        out << reports.size() << " reports, " << failures << " diagnostics\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace detail

// args excludes the program name. Exit codes: 0 ok, 1 error, 2 undecided.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::CliOptions o;
    CLI::App app{"Exact multiplicities and sharpness checks for polynomials over hyperfields", "hyperroot"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "print the versioned JSON report");

    auto* eval = app.add_subcommand("eval", "evaluate a polynomial at an element (a set)");
    eval->add_option("--hf", o.hf, "K, S, T, V, P, Q or C")->required();
    eval->add_option("--poly", o.poly, "polynomial, e.g. \"T^2+3T+1\"")->required();
    eval->add_option("--at", o.at, "element")->required();

    auto* mult = app.add_subcommand("mult", "multiplicity of a root, with its certificate");
    mult->add_option("--hf", o.hf, "K, S, T, V, P, Q or C")->required();
    mult->add_option("--poly", o.poly, "polynomial")->required();
    auto* at_opt = mult->add_option("--at", o.at, "element");
    auto* set_opt = mult->add_option("--set", o.set, "set such as [1, inf) or {1, -1}");
    at_opt->excludes(set_opt);

    auto* pushc = app.add_subcommand("push", "coefficientwise image under a homomorphism");
    pushc->add_option("--hom", o.hom, "R->S, C->V, C->P, C->K, Q->K or Q->T:p=<prime>")->required();
    pushc->add_option("--poly", o.poly, "polynomial over the source field")->required();

    auto* lift = app.add_subcommand("lift", "construct a field polynomial over a target polynomial");
    lift->add_option("--hom", o.hom, "homomorphism")->required();
    lift->add_option("--target", o.target, "target polynomial")->required();
    lift->add_option("--at", o.at, "focus root (V and P)");
    lift->add_option("--mult", o.mult, "required multiplicity at the focus root (P)");

    auto* verify = app.add_subcommand("verify", "run a scripted sharpness case");
    verify->add_option("--case", o.case_name, "case name")->required()->check(CLI::IsMember(case_names()));

    auto* batch = app.add_subcommand("batch", "check the inequality for every line of a corpus file");
    batch->add_option("--hom", o.hom, "homomorphism")->required();
    batch->add_option("--in", o.in, "corpus file")->required();
    batch->add_option("--out", o.out, "report file, - for stdout");

    for (auto* sub : {eval, mult, pushc, lift, verify, batch}) sub->add_flag("--json", o.json, "print JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }
    try {
        if (eval->parsed()) return detail::cmd_eval(o, out);
        if (mult->parsed()) {
            if (o.at.empty() && o.set.empty()) throw std::invalid_argument("mult needs --at or --set");
            return detail::cmd_mult(o, out);
        }
        if (pushc->parsed()) return detail::cmd_push(o, out);
        if (lift->parsed()) return detail::cmd_lift(o, out);
        if (verify->parsed()) return detail::cmd_verify(o, out);
        if (batch->parsed()) return detail::cmd_batch(o, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace hyperroot
