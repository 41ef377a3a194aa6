/*
   Copyright 2026 The polarctl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cli.hpp
 * @brief polarctl command dispatch.
 *
 * Exit codes: 0 success, 1 a report check failed, 2 parse, domain or usage
 * error, 3 the input does not split over Q(i).
 */

#ifndef POLAR_CLI_HPP
#define POLAR_CLI_HPP

#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace polar {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitUnsplittable = 3 };

namespace detail {

struct CliState {
    std::string ring = "line";
    bool json = false;
    std::vector<std::string> exprs;
    std::string kind;
    std::string to;
    std::string section = "all";
};

class Output {
   public:
    Output(std::ostream& out, bool json, std::string command) : out_(out), json_(json) {
        doc_["schema"] = kJsonSchema;
        doc_["command"] = std::move(command);
    }
    void field(const std::string& label, const std::string& key, const Json& value, const std::string& text) {
        doc_[key] = value;
        lines_.push_back(label + ": " + text);
    }
    void field(const std::string& label, const std::string& key, const std::string& text) {
        field(label, key, Json(text), text);
    }
    void field(const std::string& label, const std::string& key, bool value) {
        field(label, key, Json(value), value ? "true" : "false");
    }
    void text_only(const std::string& line) { lines_.push_back(line); }
    void flush() {
        if (json_) {
            out_ << doc_.dump(2) << "\n";
        } else {
            for (const auto& l : lines_) out_ << l << "\n";
        }
    }

   private:
    std::ostream& out_;
    bool json_;
    Json doc_;
    std::vector<std::string> lines_;
};

inline std::string resolve_input(const std::string& arg, std::istream& in) {
    if (arg != "-") return arg;
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return trim(all);
}

inline void class_fields(Output& o, const std::string& label, const std::string& key, const PolarClass& c) {
    o.field(label, key, to_json(c), format_class(c));
}

inline int cmd_class(const CliState& s, std::ostream& out, std::istream& in, bool order_only) {
    RingContext c = parse_ring(s.ring);
    std::string src = resolve_input(s.exprs.at(0), in);
    RatFuncQi f = parse_value(src, c);
    PolarClass cls = class_of(f, c);
    Output o(out, s.json, order_only ? "order" : "class");
    o.field("ring", "ring", c.name());
    o.field("value", "value", format_value(f, c));
    if (!order_only) class_fields(o, "class", "class", cls);
    o.field("order", "order", to_string(class_order(cls)));
    o.flush();
    return kExitOk;
}

inline int cmd_factor(const CliState& s, std::ostream& out, std::istream& in) {
    RingContext c = parse_ring(s.ring);
    RatFuncQi f = parse_value(resolve_input(s.exprs.at(0), in), c);
    make_element(f, c, ElementDomain::Ring);
    Output o(out, s.json, "factor");
    o.field("ring", "ring", c.name());
    o.field("value", "value", format_value(f, c));
    try {
        SplitForm sf = split_rational(f, c.is_laurent());
        o.field("split", "split", to_json(sf), format_split(sf, c.variable()));
    } catch (const UnsplittableError& e) {
        if (c.kind() == ContextKind::Circle) throw;
        std::string residual = format_poly(e.residual(), c.variable());
        o.field("split", "split", Json{{"unsplittable", true}, {"residual", residual}},
                "does not split over Q(i), residual " + residual);
    }
    PolarFactorization pf = polar_factorize(f, c);
    o.field("real part", "real_part", format_value(pf.real_part, c));
    o.field("delta part", "delta_part", format_value(pf.delta_part, c));
    o.field("real part sigma-fixed", "real_part_sigma_fixed", is_sigma_fixed(pf.real_part, c));
    o.field("delta part in Delta", "delta_part_in_delta", delta_membership(pf.delta_part, c));
    o.flush();
    return kExitOk;
}

inline int cmd_delta(const CliState& s, std::ostream& out, std::istream& in) {
    RingContext c = parse_ring(s.ring);
    RatFuncQi f = parse_value(resolve_input(s.exprs.at(0), in), c);
    bool member = c.kind() == ContextKind::CuspCubic ? delta_T_membership(f) : delta_membership(f, c);
    Output o(out, s.json, "delta");
    o.field("ring", "ring", c.name());
    o.field("value", "value", format_value(f, c));
    o.field("delta", "delta", member);
    o.flush();
    return kExitOk;
}

inline int cmd_eq(const CliState& s, std::ostream& out, std::istream& in) {
    if (s.exprs.size() != 2) throw DomainError("eq takes exactly two expressions");
    RingContext c = parse_ring(s.ring);
    RatFuncQi f = parse_value(resolve_input(s.exprs[0], in), c);
    RatFuncQi g = parse_value(resolve_input(s.exprs[1], in), c);
    PolarClass cf = class_of(f, c), cg = class_of(g, c);
    bool equal = cf == cg;
    bool oracle = triviality_oracle(f / g, c);
    Output o(out, s.json, "eq");
    o.field("ring", "ring", c.name());
    class_fields(o, "class(f)", "class_f", cf);
    class_fields(o, "class(g)", "class_g", cg);
    o.field("equal", "equal", equal);
    o.field("oracle f/g trivial", "oracle", oracle);
    o.flush();
    if (equal != oracle) throw std::logic_error("normal form and oracle disagree");
    return kExitOk;
}

inline int cmd_oracle(const CliState& s, std::ostream& out, std::istream& in) {
    RingContext c = parse_ring(s.ring);
    RatFuncQi f = parse_value(resolve_input(s.exprs.at(0), in), c);
    Output o(out, s.json, "oracle");
    o.field("ring", "ring", c.name());
    o.field("value", "value", format_value(f, c));
    o.field("sigma(f)/f", "sigma_ratio", format_value(sigma(f, c) / f, c));
    o.field("trivial", "trivial", triviality_oracle(f, c));
    o.flush();
    return kExitOk;
}

inline int cmd_fixedring(const CliState& s, std::ostream& out) {
    RingContext c = parse_ring(s.ring);
    FixedRingPresentation p = fixed_ring_generators(c);
    Output o(out, s.json, "fixedring");
    o.field("ring", "ring", c.name());
    Json gens = Json::array();
    for (const auto& g : p.generators) {
        gens.push_back(Json{{"name", g.name}, {"value", format_value(g.value, c)}});
        o.text_only(g.name + " = " + format_value(g.value, c));
    }
    o.field("generators", "generators", gens, std::to_string(p.generators.size()));
    o.field("relation", "relation", p.relation.empty() ? std::string("none") : p.relation);
    o.field("verified", "verified", p.verified());
    if (!p.unhalved.empty()) {
        Json un = Json::array();
        for (const auto& g : p.unhalved) un.push_back(Json{{"name", g.name}, {"value", format_value(g.value, c)}});
        std::string text = "X = " + format_value(p.unhalved[0].value, c) + ", Y = " +
                           format_value(p.unhalved[1].value, c) + ", X^2 + Y^2 = " + format_value(p.unhalved_lhs, c);
        o.field("unhalved", "unhalved", Json{{"generators", un}, {"sum_of_squares", format_value(p.unhalved_lhs, c)}},
                text);
    }
    o.flush();
    return kExitOk;
}

inline int cmd_orbit(const CliState& s, std::ostream& out, std::istream& in) {
    RingContext c = parse_ring(s.ring);
    RatFuncQi f = parse_value(resolve_input(s.exprs.at(0), in), c);
    OrbitRepresentative r = orbit_normalize(f, c);
    Output o(out, s.json, "orbit");
    o.field("ring", "ring", c.name());
    o.field("value", "value", format_value(f, c));
    o.field("representative", "representative", format_poly(r.rep, c.variable()));
    o.field("root", "root", to_literal(r.root));
    o.field("conjugated", "conjugated", r.conjugated);
    o.flush();
    return kExitOk;
}

inline int cmd_hom(const CliState& s, std::ostream& out, std::istream& in) {
    Output o(out, s.json, "hom");
    o.field("kind", "kind", s.kind);
    const std::string src = resolve_input(s.exprs.at(0), in);
    if (s.kind == "localize" || s.kind == "section") {
        if (s.to.empty()) throw DomainError("--to is required for " + s.kind);
        RingContext from = parse_ring(s.ring), to = parse_ring(s.to);
        PolarClass a = class_of(parse_value(src, from), from);
        PolarClass b = s.kind == "localize" ? localization_map(a, to) : localization_section(a, to);
        o.field("from", "from", from.name());
        o.field("to", "to", to.name());
        class_fields(o, "class", "class", a);
        class_fields(o, "image", "image", b);
    } else if (s.kind == "include") {
        RingContext from = parse_ring(s.ring);
        PolarClass a = class_of(parse_value(src, from), from);
        PolarClass b = projective_include(a);
        o.field("from", "from", from.name());
        o.field("to", "to", b.ctx.name());
        class_fields(o, "class", "class", a);
        class_fields(o, "image", "image", b);
    } else if (s.kind == "cusp-embed") {
        RingContext cusp = RingContext::cusp_cubic();
        if (s.ring != "line" && parse_ring(s.ring) != cusp) throw DomainError("cusp-embed works on --ring cusp");
        RatFuncQi f = parse_value(src, cusp);
        PolarClass b = subalgebra_embed(f);
        o.field("from", "from", cusp.name());
        o.field("to", "to", b.ctx.name());
        o.field("value", "value", format_value(f, cusp));
        class_fields(o, "image", "image", b);
        o.field("delta_T", "delta_T", delta_T_membership(f));
        const PolyQi& p = f.numerator();
        if (p.leading() == GaussianRational(1) && !p.constant_term().is_zero()) {
            ReciprocalSumCheck r = reciprocal_sum_check(p);
            o.field("reciprocal sum", "reciprocal_sum", to_literal(r.reciprocal_sum));
            o.field("f'(0) = 0", "derivative_vanishes", r.derivative_vanishes);
            o.field("consistent", "consistent", r.consistent());
        }
    } else {
        throw DomainError("unknown --kind '" + s.kind + "' (localize, section, include, cusp-embed)");
    }
    o.flush();
    return kExitOk;
}

inline int cmd_report(const CliState& s, std::ostream& out) {
    std::string section = s.exprs.empty() ? s.section : s.exprs.front();
    ReportResult r = run_report(section);
    if (s.json) {
        Json j{{"schema", kJsonSchema}, {"command", "report"}, {"section", section},
               {"passed", r.passed}, {"failed", r.failed}, {"text", r.text}};
        out << j.dump(2) << "\n";
    } else {
        out << r.text;
    }
    return r.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

/// Runs polarctl with argv-style arguments; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"polarctl: polar groups of real forms of complex curves", "polarctl"};
    app.require_subcommand(1);
    detail::CliState s;

    auto add_common = [&](CLI::App* sub, bool with_expr, bool two = false) {
        sub->add_option("--ring", s.ring, "ring context: line, line[inv=...], prime-local[z], circle, icircle, "
                                          "proj-line, conic, cusp")
            ->capture_default_str();
        sub->add_flag("--json", s.json, "emit JSON");
        if (with_expr) {
            auto* opt = sub->add_option("expr", s.exprs, two ? "two expressions (- reads stdin)"
                                                               : "expression (- reads stdin)");
            opt->required();
            opt->expected(two ? 2 : 1);
        }
    };

    std::string chosen;
    struct SubcommandDef {
        const char* name;
        const char* help;
        bool expr;
        bool two;
    };
    const SubcommandDef subcommands[] = {
        {"class", "normal form of the class [f]", true, false},
        {"factor", "split form and polar factorization", true, false},
        {"delta", "membership in Delta(B)", true, false},
        {"order", "order of [f]: 1, 2 or inf", true, false},
        {"eq", "compare [f] and [g]", true, true},
        {"oracle", "decide [f] = 1 without normal forms", true, false},
        {"fixedring", "generators and relation of the fixed ring", false, false},
        {"orbit", "canonical orbit representative of an irreducible Delta element", true, false},
    };
    for (const auto& sp : subcommands) {
        CLI::App* sub = app.add_subcommand(sp.name, sp.help);
        add_common(sub, sp.expr, sp.two);
        sub->callback([&chosen, name = std::string(sp.name)] { chosen = name; });
    }
    CLI::App* hom = app.add_subcommand("hom", "homomorphisms between class groups");
    add_common(hom, true);
    hom->add_option("--kind", s.kind, "localize, section, include, cusp-embed")->required();
    hom->add_option("--to", s.to, "target ring for localize / section");
    hom->callback([&] { chosen = "hom"; });

    CLI::App* report = app.add_subcommand("report", "worked computations with computed checks");
    report->add_option("--section", s.section, "forms-of-cstar, forms-of-p1, localizations, circle-identities, "
                                               "cusp-cubic, all")
        ->capture_default_str();
    report->add_option("id", s.exprs, "section id (alternative to --section)")->expected(0, 1);
    report->add_flag("--json", s.json, "emit JSON");
    report->callback([&] { chosen = "report"; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (chosen == "class") return detail::cmd_class(s, out, in, false);
        if (chosen == "order") return detail::cmd_class(s, out, in, true);
        if (chosen == "factor") return detail::cmd_factor(s, out, in);
        if (chosen == "delta") return detail::cmd_delta(s, out, in);
        if (chosen == "eq") return detail::cmd_eq(s, out, in);
        if (chosen == "oracle") return detail::cmd_oracle(s, out, in);
        if (chosen == "fixedring") return detail::cmd_fixedring(s, out);
        if (chosen == "orbit") return detail::cmd_orbit(s, out, in);
        if (chosen == "hom") return detail::cmd_hom(s, out, in);
        if (chosen == "report") return detail::cmd_report(s, out);
    } catch (const UnsplittableError& e) {
        err << "error: " << e.what() << "; residual " << format_poly(e.residual(), parse_ring(s.ring).variable())
            << "\n";
        return kExitUnsplittable;
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // DomainError, UnsupportedContext and ContextMismatch derive from logic_error.
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace polar

#endif  // POLAR_CLI_HPP
