#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "fresco/commands.hpp"

namespace {

std::vector<std::string> split_vars(const std::string& spec) {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-divisor toolkit for sparse polynomial frescos"};
    app.require_subcommand(1);

    fresco::RunConfig cfg;
    if (const char* env = std::getenv("FRESCO_COLOR")) cfg.color = std::string(env) == "1";

    std::string vars_spec;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "emit a JSON report instead of text");
    };
    auto add_poly_opts = [&](CLI::App* sub) {
        sub->add_option("--poly", cfg.poly, "polynomial, e.g. \"x^5 + y^5 + z^5 + L*x*y*z^2\"")
            ->required();
        sub->add_option("--vars", vars_spec,
                        "comma-separated variable names, e.g. x,y,z (default: x0, x1, ...)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "combinatorial setup of a sparse polynomial");
    add_poly_opts(analyze);
    add_common(analyze);

    CLI::App* bernstein =
        app.add_subcommand("bernstein", "Bernstein-divisor report for a monomial volume form");
    add_poly_opts(bernstein);
    bernstein->add_option("--form", cfg.form, "monomial form, e.g. \"1\", \"z\", \"x*y*z\"");
    bernstein->add_option("--path", cfg.path, "climb order: lex, revlex or balanced")
        ->check(CLI::IsMember({"lex", "revlex", "balanced"}));
    add_common(bernstein);

    CLI::App* abmod =
        app.add_subcommand("abmod", "simple-pole Bernstein polynomial of an (a,b)-module file");
    abmod->add_option("file", cfg.presentation_file, "presentation file (one line per column)")
        ->required();
    abmod->add_option("--trunc", cfg.trunc, "truncation order (default 8, minimum 2)")
        ->check(CLI::Range(static_cast<fresco::Index>(2), static_cast<fresco::Index>(1 << 20)));
    add_common(abmod);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "recompute the built-in reference tables and compare");
    reproduce->add_option("--case", cfg.case_filter, "filter, e.g. 4.3.4 or 4.3.1:3");
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.vars = split_vars(vars_spec);
    return fresco::run_command(cfg, std::cout, std::cerr);
}
