#include "cli.hpp"

#include "avw/classify.hpp"
#include "avw/random.hpp"
#include "avw/report.hpp"
#include "avw/spec_json.hpp"
#include "avw/subalgebra.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace avw::cli {

namespace {

const char* const kCommands[] = {"verify", "iso", "classify", "enumerate", "table", "subalgebras", "degree",
                                 "experiment-4.8"};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string human;
    Json json;
    Table table;
    int code = kOk;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render(const Report& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Human: return r.human;
        case Format::Json: os << r.json.dump(2) << "\n"; break;
        case Format::Csv:
            for (std::size_t row = 0; row <= r.table.rows.size(); ++row) {
                const auto& cells = row == 0 ? r.table.header : r.table.rows[row - 1];
                for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
                os << "\n";
            }
            break;
        case Format::Markdown: {
            auto line = [&](const std::vector<std::string>& cells) {
                os << "|";
                for (const auto& c : cells) os << " " << c << " |";
                os << "\n";
            };
            line(r.table.header);
            os << "|";
            for (std::size_t c = 0; c < r.table.header.size(); ++c) os << "---|";
            os << "\n";
            for (const auto& row : r.table.rows) line(row);
            break;
        }
    }
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
    return s;
}

std::string witness_text(const Verdict& v) {
    std::vector<std::string> parts;
    const char* names[] = {"x", "y"};
    for (std::size_t k = 0; k < v.witness.size(); ++k) parts.push_back(std::string(names[k]) + " = " + pretty(v.witness[k]));
    return join(parts, ", ");
}

AlgebraSpec require_spec(const std::string& path, const char* flag) {
    if (path.empty()) throw SpecError(std::string("missing ") + flag);
    return load_spec(path);
}

Report cmd_verify(const RunConfig& cfg) {
    const AlgebraSpec spec = require_spec(cfg.spec, "--spec");
    const Algebra alg = build(spec);
    std::vector<IdentitySpec> ids;
    if (cfg.identity.empty() || cfg.identity == "all")
        ids.assign(IdentitySpec::all_one_var().begin(), IdentitySpec::all_one_var().end());
    else
        ids.push_back(IdentitySpec::parse(cfg.identity));
    if (cfg.mode != "symbolic" && cfg.mode != "sample") throw std::invalid_argument("--mode must be symbolic or sample");
    const bool symbolic = cfg.mode == "symbolic";

    Report r;
    r.table.header = {"identity", "holds", "authoritative", "witness", "residual_monomial"};
    r.json["spec"] = describe(spec);
    r.json["mode"] = cfg.mode;
    r.json["verdicts"] = Json::array();
    std::ostringstream h;
    h << "spec: " << describe(spec) << "\n";
    for (const auto& id : ids) {
        const Verdict v = symbolic ? check_symbolic(alg, id) : check_sampled(alg, id, cfg.trials, cfg.seed);
        if (!v.holds) r.code = kFails;
        r.json["verdicts"].push_back(verdict_to_json(v));
        std::string wit;
        for (const auto& x : v.witness) wit += (wit.empty() ? "" : " ") + to_string(x);
        r.table.rows.push_back({id.name(), v.holds ? "true" : "false", v.authoritative ? "true" : "false", wit,
                                v.residual.value_or("")});
        h << id.pretty() << ": " << (v.holds ? "holds" : "fails") << " ["
          << (symbolic ? "symbolic" : v.holds ? "sampled, tentative" : "sampled") << "]\n";
        if (!v.witness.empty()) h << "  witness " << witness_text(v) << "\n";
        if (v.value) h << "  associator = " << pretty(*v.value) << "\n";
        if (v.residual) h << "  residual " << *v.residual << "\n";
    }
    r.human = h.str();
    return r;
}

Report cmd_iso(const RunConfig& cfg) {
    const AlgebraSpec s1 = require_spec(cfg.spec, "--spec");
    const AlgebraSpec s2 = require_spec(cfg.spec2, "--spec2");
    const auto w = isotope_isomorphic(s1, s2);
    Report r;
    r.code = w ? kOk : kFails;
    r.json = iso_to_json(w);
    r.table.header = {"spec", "spec2", "isomorphic", "p", "eps", "delta"};
    r.table.rows.push_back({describe(s1), describe(s2), w ? "true" : "false", w ? to_string(w->p) : "",
                            w ? std::to_string(w->eps) : "", w ? std::to_string(w->delta) : ""});
    std::ostringstream h;
    h << describe(s1) << " vs " << describe(s2) << ": ";
    if (w)
        h << "isomorphic\n  p = " << pretty(w->p) << ", eps = " << w->eps << ", delta = " << w->delta << "\n";
    else
        h << "not isomorphic\n";
    r.human = h.str();
    return r;
}

// The spec with its circle parameter u replaced by -conj(u): e^{ia} -> e^{i(pi - a)}.
AlgebraSpec reflected_circle(const AlgebraSpec& spec) {
    AlgebraSpec s = spec;
    if (spec.n() == 2)
        s.b = -conjugate(*spec.b);
    else
        s.a = -conjugate(*spec.a);
    return s;
}

Report cmd_classify(const RunConfig& cfg) {
    const AlgebraSpec spec = require_spec(cfg.spec, "--spec");
    const Classification c = classify(spec);
    Report r;
    r.json = classification_to_json(c);
    std::ostringstream h;
    h << "spec: " << describe(spec) << "\nclass: " << c.label.display() << "\nprofile: " << c.label.profile.to_string()
      << "\n";
    if (c.witness)
        h << "witness: p = " << pretty(c.witness->p) << ", eps = " << c.witness->eps << ", delta = " << c.witness->delta
          << "\n";
    if (!c.profile_consistent) h << "warning: profile differs from the classification table\n";
    if (c.label.pattern == ClassLabel::Pattern::CircleFamily) {
        const Element& u = spec.n() == 2 ? *spec.b : *spec.a;
        const auto refl = isotope_isomorphic(spec, reflected_circle(spec));
        r.json["invariants"]["re_parameter"] = to_string(re(u));
        r.json["invariants"]["pi_minus_alpha_isomorphic"] = refl.has_value();
        h << "parametrization: a in [0, pi) with cos a = +-" << to_string(c.label.alpha_cos) << "\n";
        h << "solver: a and pi - a " << (refl ? "give isomorphic algebras" : "give non-isomorphic algebras");
        if (refl) h << " (p = " << pretty(refl->p) << ", eps = " << refl->eps << ", delta = " << refl->delta << ")";
        h << "\n";
    }
    r.human = h.str();
    r.table.header = {"spec", "label", "abs_cos_alpha", "profile"};
    r.table.rows.push_back({describe(spec), c.label.name(),
                            c.label.pattern == ClassLabel::Pattern::CircleFamily ? to_string(c.label.alpha_cos) : "",
                            c.label.profile.to_string()});
    return r;
}

Report cmd_enumerate(const RunConfig& cfg) {
    if (cfg.identity.empty()) throw std::invalid_argument("missing --identity");
    const IdentitySpec id = IdentitySpec::parse(cfg.identity);
    const Enumeration en = enumerate_classes(id);
    Report r;
    r.code = en.pairwise_distinct ? kOk : kTableViolated;
    const std::string n = en.row.infinite() ? "infinite" : std::to_string(en.row.count());
    Json labels = Json::array();
    for (const auto& l : en.row.finite) labels.push_back(label_to_json(l));
    Json circles = Json::array();
    for (int f : en.row.circles) circles.push_back(circle_label(f, 0).name());
    r.json = {{"identity", id.name()},   {"N", en.row.infinite() ? Json("infinite") : Json(en.row.count())},
              {"classes", labels},       {"circle_families", circles},
              {"members", en.member_names}, {"pairwise_non_isomorphic", en.pairwise_distinct}};
    r.table.header = {"identity", "member", "spec"};
    for (std::size_t k = 0; k < en.members.size(); ++k)
        r.table.rows.push_back({id.name(), en.member_names[k], describe(en.members[k])});
    std::ostringstream h;
    h << id.pretty() << ": N = " << n << "\n";
    std::vector<std::string> names;
    for (const auto& l : en.row.finite) names.push_back(l.name());
    for (int f : en.row.circles) names.push_back(circle_label(f, 0).name());
    h << "classes: " << join(names, ", ") << "\n";
    h << "checked " << en.members.size() << " members pairwise: "
      << (en.pairwise_distinct ? "non-isomorphic" : "ISOMORPHIC PAIR FOUND") << "\n";
    r.human = h.str();
    return r;
}

struct TableLine {
    IdentitySpec id;
    std::vector<std::string> entries;
    Json json;
    bool ok = true;
    std::string failure;
};

TableLine table_line(const IdentitySpec& id) {
    TableLine line;
    line.id = id;
    const TableRow row = table_row(id);
    std::vector<AlgebraSpec> finite;
    Json classes = Json::array();
    for (const auto& l : row.finite) {
        finite.push_back(*representative(l));
        line.entries.push_back(l.name());
        classes.push_back(l.name());
        if (!check_symbolic(build(finite.back()), id).holds) {
            line.ok = false;
            line.failure = l.name() + " fails " + id.pretty();
        }
    }
    for (std::size_t i = 0; i < finite.size(); ++i)
        for (std::size_t j = i + 1; j < finite.size(); ++j)
            if (isotope_isomorphic(finite[i], finite[j])) {
                line.ok = false;
                line.failure = row.finite[i].name() + " ~ " + row.finite[j].name();
            }
    Json circles = Json::array();
    for (int f : row.circles) {
        std::vector<std::string> coss;
        Json samples = Json::array();
        for (const auto& t : circle_parameters(3)) {
            const AlgebraSpec s = circle_point_t(f, t);
            const std::string c = to_string(re(rational_unit(t * Element::basis(4, 1))));
            coss.push_back(c);
            samples.push_back(c);
            if (!check_symbolic(build(s), id).holds) {
                line.ok = false;
                line.failure = describe(s) + " fails " + id.pretty();
            }
        }
        const std::string name = circle_label(f, 0).name();
        line.entries.push_back(name + " at cos a in {" + join(coss, ", ") + "}");
        circles.push_back({{"family", name}, {"sampled_cos_alpha", samples}});
    }
    line.json = {{"identity", id.name()},
                 {"classes", classes},
                 {"circle_families", circles},
                 {"N", row.infinite() ? Json("infinite") : Json(row.count())},
                 {"verified", line.ok}};
    return line;
}

Report cmd_table(const RunConfig&) {
    const auto& ids = IdentitySpec::all_one_var();
    std::vector<TableLine> lines(ids.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(ids.size()); ++k)
        lines[static_cast<std::size_t>(k)] = table_line(ids[static_cast<std::size_t>(k)]);
    Report r;
    r.table.header = {"identity", "classes", "N"};
    r.json = Json::array();
    for (const auto& line : lines) {
        const TableRow row = table_row(line.id);
        const std::string n = row.infinite() ? "infinite" : std::to_string(row.count());
        r.table.rows.push_back({line.id.pretty(), join(line.entries, ", "), n});
        r.json.push_back(line.json);
        if (!line.ok) r.code = kTableViolated;
    }
    r.human = render(r, Format::Markdown);
    for (const auto& line : lines)
        if (!line.ok) r.human += "VIOLATION " + line.id.pretty() + ": " + line.failure + "\n";
    return r;
}

Report cmd_subalgebras(const RunConfig& cfg) {
    const AlgebraSpec spec = require_spec(cfg.spec, "--spec");
    const SubalgebraReport rep = subalgebra_report(spec);
    Report r;
    r.json = subalgebra_report_to_json(rep);
    r.table.header = {"kind", "type", "basis"};
    std::ostringstream h;
    h << "spec: " << describe(spec) << "\n";
    if (rep.criteria) {
        std::vector<std::string> yes;
        for (std::size_t k = 0; k < 4; ++k)
            if ((*rep.criteria)[k]) {
                yes.push_back(plane_name(kPlanes[k]));
                r.table.rows.push_back({"criterion", plane_name(kPlanes[k]), ""});
            }
        h << "dimension-2 criteria: " << (yes.empty() ? "none" : join(yes, ", ")) << "\n";
    }
    h << "discovered: " << rep.discovered.size() << "\n";
    for (const auto& d : rep.discovered) {
        std::vector<std::string> b;
        for (const auto& v : d.basis) b.push_back(pretty(v));
        h << "  " << plane_name(d.type) << " = span{" << join(b, "; ") << "}\n";
        r.table.rows.push_back({"discovered", plane_name(d.type), join(b, "; ")});
    }
    r.human = h.str();
    return r;
}

Report cmd_degree(const RunConfig& cfg) {
    const AlgebraSpec spec = require_spec(cfg.spec, "--spec");
    const std::size_t d = degree_estimate(build(spec), cfg.trials, cfg.seed);
    Report r;
    r.json = {{"spec", describe(spec)}, {"degree_lower_bound", d}, {"trials", cfg.trials}, {"seed", cfg.seed}};
    r.table.header = {"spec", "degree_lower_bound", "trials", "seed"};
    r.table.rows.push_back({describe(spec), std::to_string(d), std::to_string(cfg.trials), std::to_string(cfg.seed)});
    r.human = describe(spec) + ": degree >= " + std::to_string(d) + " (" + std::to_string(cfg.trials) + " trials)\n";
    return r;
}

Report cmd_experiment(const RunConfig& cfg) {
    const AlgebraSpec spec = require_spec(cfg.spec, "--spec");
    const Algebra alg = build(spec);
    if (alg.dim() != 8) throw SpecError("experiment-4.8 takes an eight-dimensional algebra");
    const Verdict flex = check_symbolic(alg, IdentitySpec::one_var(1, 2, 1));
    const Verdict two = check_symbolic(alg, IdentitySpec::x2yx2());
    const Verdict third = check_symbolic(alg, IdentitySpec::one_var(1, 1, 1));
    const bool candidate = flex.holds && two.holds;
    std::string outcome = "not a candidate";
    if (candidate) outcome = third.holds ? "candidate, third power-associative" : "candidate, NOT third power-associative";
    Report r;
    r.json = {{"spec", describe(spec)},
              {"verdicts", {verdict_to_json(flex), verdict_to_json(two), verdict_to_json(third)}},
              {"candidate", candidate},
              {"outcome", outcome}};
    r.table.header = {"identity", "holds"};
    std::ostringstream h;
    h << "spec: " << describe(spec) << "\n";
    for (const Verdict* v : {&flex, &two, &third}) {
        r.table.rows.push_back({v->identity.name(), v->holds ? "true" : "false"});
        h << v->identity.pretty() << ": " << (v->holds ? "holds" : "fails") << "\n";
    }
    h << "outcome: " << outcome << "\n";
    r.human = h.str();
    return r;
}

Report dispatch(const RunConfig& cfg) {
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "iso") return cmd_iso(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg);
    if (cfg.command == "table") return cmd_table(cfg);
    if (cfg.command == "subalgebras") return cmd_subalgebras(cfg);
    if (cfg.command == "degree") return cmd_degree(cfg);
    return cmd_experiment(cfg);
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument("bad seed '" + text + "'");
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string format = "human", seed_text;
    CLI::App app{"Exact workbench for absolute-valued algebras", "avw"};
    app.add_option("command", cfg.command, "Command to run")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kCommands), std::end(kCommands))));
    app.add_option("--spec", cfg.spec, "Algebra spec (JSON)");
    app.add_option("--spec2", cfg.spec2, "Second algebra spec for iso");
    app.add_option("--identity", cfg.identity, "p,q,r or x2yx2");
    app.add_option("--mode", cfg.mode, "symbolic or sample")->check(CLI::IsMember({"symbolic", "sample"}));
    app.add_option("--trials", cfg.trials, "Samples for sample mode and degree")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed_text, "RNG seed (decimal or 0x hex)");
    app.add_option("--format", format, "human, json, csv or markdown")
        ->check(CLI::IsMember({"human", "json", "csv", "markdown"}));
    app.add_option("--out", cfg.out, "Write the report to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (seed_text.empty())
            if (const char* env = std::getenv("AVW_SEED")) seed_text = env;
        if (!seed_text.empty()) cfg.seed = parse_seed(seed_text);
        cfg.format = format == "json"       ? Format::Json
                     : format == "csv"      ? Format::Csv
                     : format == "markdown" ? Format::Markdown
                                            : Format::Human;
        const Report r = dispatch(cfg);
        const std::string text = render(r, cfg.format);
        if (cfg.out.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out);
            if (!f) throw std::invalid_argument("cannot write '" + cfg.out + "'");
            f << text;
        }
        return r.code;
    } catch (const std::invalid_argument& e) {  // SpecError, DimensionError, bad identity or seed
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace avw::cli
