#include "fresco/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "fresco/ab_module.hpp"
#include "fresco/errors.hpp"
#include "fresco/parse.hpp"
#include "fresco/report.hpp"
#include "fresco/reproduce.hpp"

namespace fresco {

namespace {

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const MonomialPoly poly = parse_poly({cfg.poly, cfg.vars});
    AnalyzeReport report{analyze(poly)};
    if (cfg.json)
        out << to_json(report).dump(2) << "\n";
    else
        out << to_text(report);
    return kExitOk;
}

int cmd_bernstein(const RunConfig& cfg, std::ostream& out) {
    const MonomialPoly poly = parse_poly({cfg.poly, cfg.vars});
    const MonomialSetup setup = analyze(poly);
    const ExpVector beta = parse_form(cfg.form, setup.poly.var_names);
    const PathStrategy path = path_strategy_from_string(cfg.path);
    const DivisorReport report = make_divisor_report(setup, beta, cfg.form, path);
    if (cfg.json)
        out << to_json(report).dump(2) << "\n";
    else
        out << to_text(report);
    return kExitOk;
}

int cmd_abmod(const RunConfig& cfg, std::ostream& out) {
    std::ifstream in(cfg.presentation_file);
    if (!in) throw Error("cannot open presentation file '" + cfg.presentation_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ABModulePresentation pres = parse_presentation(buffer.str(), cfg.trunc);

    AbmodReport report;
    report.rank = pres.rank();
    report.truncation = pres.truncation_order();
    report.simple_pole = is_simple_pole(pres);
    if (report.simple_pole) report.bernstein = bernstein_simple_pole(pres);
    if (cfg.json)
        out << to_json(report).dump(2) << "\n";
    else
        out << to_text(report);
    return report.simple_pole ? kExitOk : kExitNotSimplePole;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ReproduceReport report = run_reproduction(cfg.case_filter);
    if (cfg.json)
        out << to_json(report).dump(2) << "\n";
    else
        out << to_text(report, cfg.color);
    if (report.rows.empty()) {
        err << "error: no reference case matches '" << cfg.case_filter << "'\n";
        return kExitFailure;
    }
    return report.all_matched ? kExitOk : kExitFailure;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "analyze") return cmd_analyze(cfg, out);
        if (cfg.command == "bernstein") return cmd_bernstein(cfg, out);
        if (cfg.command == "abmod") return cmd_abmod(cfg, out);
        if (cfg.command == "reproduce") return cmd_reproduce(cfg, out, err);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kExitFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const C1ViolationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitC1;
    } catch (const C2ViolationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitC2;
    } catch (const NotSimplePoleError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotSimplePole;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace fresco
