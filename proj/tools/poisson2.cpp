// Command-line front end: exact Poisson cohomology of plane germs
// f (1 + h) d/dx ^ d/dy with quasihomogeneous f.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "poisson2/json_io.hpp"
#include "poisson2/parse.hpp"

namespace {

using namespace poisson2;

struct GermOptions {
    std::string weights;
    std::string f_text;
    std::string h_text;
    std::string catalog_label;
    std::string lambda = "0";
    std::string d_form = "as-printed";
};

void add_germ_options(CLI::App* cmd, GermOptions& opt, bool allow_h = true) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--weights", opt.weights, "weights w1,w2");
    cmd->add_option("--f", opt.f_text, "polynomial f (quasihomogeneous)");
    if (allow_h) cmd->add_option("--h", opt.h_text, "multiplier term h (degree d-w1-w2)");
    cmd->add_option("--catalog", opt.catalog_label, "catalog label FAMILY:INDEX[:SIGN]");
    cmd->add_option("--lambda", opt.lambda, "modulus for catalog families with an h-term");
    cmd->add_option("--d-form", opt.d_form,
                    "even-D catalog row: as-printed | corrected")
        ->check(CLI::IsMember({"as-printed", "corrected"}));
}

Weights parse_weights(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw SyntaxError("weights must be given as w1,w2", 0);
    try {
        int w1 = std::stoi(text.substr(0, comma));
        int w2 = std::stoi(text.substr(comma + 1));
        return Weights(w1, w2);
    } catch (const std::invalid_argument&) {
        throw SyntaxError("weights must be integers", 0);
    } catch (const std::out_of_range&) {
        throw SyntaxError("weights out of range", 0);
    }
}

Rational parse_rational(const std::string& text) {
    Poly p = parse_poly(text);
    if (!(p - Poly(p.constant_term())).is_zero())
        throw SyntaxError("expected a rational constant", 0);
    return p.constant_term();
}

AdeLabel parse_label(const std::string& text, const Rational& lambda) {
    AdeLabel label;
    label.lambda = lambda;
    if (text.empty()) throw SyntaxError("empty catalog label", 0);
    switch (text[0]) {
        case 'A': case 'a': label.family = AdeFamily::A; break;
        case 'D': case 'd': label.family = AdeFamily::D; break;
        case 'E': case 'e': label.family = AdeFamily::E; break;
        default: throw SyntaxError("catalog family must be A, D or E", 0);
    }
    if (text.size() < 3 || text[1] != ':')
        throw SyntaxError("catalog label must look like A:3 or D:6:-", 1);
    auto second_colon = text.find(':', 2);
    std::string index = text.substr(2, second_colon == std::string::npos
                                           ? std::string::npos
                                           : second_colon - 2);
    try {
        label.k = std::stoi(index);
    } catch (...) {
        throw SyntaxError("catalog index must be an integer", 2);
    }
    if (second_colon != std::string::npos) {
        std::string sign = text.substr(second_colon + 1);
        if (sign == "+") label.sign = +1;
        else if (sign == "-") label.sign = -1;
        else throw SyntaxError("catalog sign must be + or -", second_colon + 1);
    }
    return label;
}

CatalogEntry resolve_entry(const GermOptions& opt) {
    if (!opt.catalog_label.empty()) {
        AdeLabel label = parse_label(opt.catalog_label, parse_rational(opt.lambda));
        DEvenForm form =
            opt.d_form == "corrected" ? DEvenForm::Corrected : DEvenForm::AsPrinted;
        return catalog(label, form);
    }
    if (opt.weights.empty() || opt.f_text.empty())
        throw SyntaxError("either --catalog or both --weights and --f are required", 0);
    Weights w = parse_weights(opt.weights);
    Poly f = parse_poly(opt.f_text);
    Poly h = opt.h_text.empty() ? Poly() : parse_poly(opt.h_text);
    return {PoissonGerm(f, h, w), ""};
}

void emit(const nlohmann::json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    // Text mode: flat "key: value" lines in key order.
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) std::cout << key << ": " << value.get<std::string>() << "\n";
        else std::cout << key << ": " << value.dump() << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact Poisson cohomology of plane germs f(1+h) dx^dy"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    GermOptions g_grade, g_milnor, g_cohom, g_oracle, g_cross, g_catalog;
    std::string norm_weights, norm_f, norm_unit;
    std::optional<int> cutoff_oracle, cutoff_cross, norm_order;

    CLI::App* c_grade = app.add_subcommand("grade", "graded components of a polynomial");
    add_germ_options(c_grade, g_grade, false);

    CLI::App* c_milnor = app.add_subcommand("milnor", "Milnor algebra basis and codimension");
    add_germ_options(c_milnor, g_milnor);

    CLI::App* c_cohom = app.add_subcommand("cohomology", "basis-level cohomology report");
    add_germ_options(c_cohom, g_cohom);

    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force cohomology dimensions");
    add_germ_options(c_oracle, g_oracle);
    c_oracle->add_option("--cutoff", cutoff_oracle, "degree cutoff (default 2d + max w)");

    CLI::App* c_cross = app.add_subcommand("crosscheck", "compare basis-level against brute force");
    add_germ_options(c_cross, g_cross);
    c_cross->add_option("--cutoff", cutoff_cross, "degree cutoff (default 2d + max w)");

    CLI::App* c_norm = app.add_subcommand("normalize", "reduce f*(1+u) to f*(1+h), constant aside");
    c_norm->add_option("--weights", norm_weights, "weights w1,w2")->required();
    c_norm->add_option("--f", norm_f, "quasihomogeneous polynomial f")->required();
    c_norm->add_option("--unit", norm_unit, "unit tail u, the germ being f*(1+u)")->required();
    c_norm->add_option("--order", norm_order, "normalization order (default 2d + max w)");

    CLI::App* c_catalog = app.add_subcommand("catalog", "one row of the ADE normal-form table");
    add_germ_options(c_catalog, g_catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (c_grade->parsed()) {
            if (g_grade.weights.empty() || g_grade.f_text.empty())
                throw SyntaxError("grade requires --weights and --f", 0);
            Weights w = parse_weights(g_grade.weights);
            Poly p = parse_poly(g_grade.f_text);
            nlohmann::json j;
            j["weights"] = {w.w1, w.w2};
            j["poly"] = to_string(p, w);
            nlohmann::json comps = nlohmann::json::object();
            for (const auto& [deg, comp] : graded_components(p, w))
                comps[std::to_string(deg)] = to_string(comp, w);
            j["components"] = comps;
            if (!p.is_zero()) {
                auto d = is_quasihomogeneous(p, w);
                j["quasihomogeneous"] = d.has_value();
                if (d) j["degree"] = *d;
            }
            emit(j, format);
        } else if (c_milnor->parsed()) {
            CatalogEntry entry = resolve_entry(g_milnor);
            MilnorData md = milnor_data(entry.germ.f(), entry.germ.weights());
            emit(milnor_json(entry.germ, md), format);
        } else if (c_cohom->parsed()) {
            CatalogEntry entry = resolve_entry(g_cohom);
            emit(cohomology_json(entry.germ, theorem_report(entry.germ)), format);
        } else if (c_oracle->parsed()) {
            CatalogEntry entry = resolve_entry(g_oracle);
            int cutoff = cutoff_oracle.value_or(default_cutoff(entry.germ));
            emit(oracle_run_json(entry.germ, oracle_report(entry.germ, cutoff)), format);
        } else if (c_cross->parsed()) {
            CatalogEntry entry = resolve_entry(g_cross);
            int cutoff = cutoff_cross.value_or(default_cutoff(entry.germ));
            nlohmann::json j = crosscheck_json(entry.germ, crosscheck(entry.germ, cutoff));
            if (!entry.note.empty()) j["note"] = entry.note;
            emit(j, format);
        } else if (c_norm->parsed()) {
            Weights w = parse_weights(norm_weights);
            Poly f = parse_poly(norm_f);
            Poly u = parse_poly(norm_unit);
            int order = norm_order.value_or(default_normalize_order(f, w));
            NormalizationResult res = normalize(f, u, w, order);
            Poly src = f * (Poly(1) + u);
            Poly dst = Poly(res.constant) * f * (Poly(1) + res.h_out);
            PushforwardCheck check =
                check_pushforward(res.phi, src, dst, order + *is_quasihomogeneous(f, w));
            emit(normalization_json(f, u, w, res, check), format);
            if (!check.pass) return 1;
        } else if (c_catalog->parsed()) {
            if (g_catalog.catalog_label.empty())
                throw SyntaxError("catalog requires --catalog FAMILY:INDEX[:SIGN]", 0);
            emit(catalog_json(resolve_entry(g_catalog)), format);
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
