#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fresco/engine.hpp"
#include "fresco/qpoly.hpp"
#include "fresco/setup.hpp"

namespace fresco {

using Json = nlohmann::json;

struct AnalyzeReport {
    MonomialSetup setup;
};

struct DivisorReport {
    MonomialSetup setup;
    ExpVector beta;
    std::string form_text;
    PathStrategy path = PathStrategy::Lex;
    AnnihilatorResult ann;
    PoleReport poles;
    std::string ode;
};

struct AbmodReport {
    Index rank = 0;
    Index truncation = 0;
    bool simple_pole = false;
    QPoly bernstein;  // empty unless simple_pole
};

DivisorReport make_divisor_report(const MonomialSetup& setup, const ExpVector& beta,
                                  const std::string& form_text, PathStrategy path);

// Factored display of a root multiset: product of (xi + q)^m, ascending q = -root.
std::string factored_divisor(const std::vector<Rational>& roots, const std::string& var = "xi");

// Eq-(11) operator with a read as multiplication by s and b as integration
// from 0; textual only.
std::string render_ode(const AnnihilatorResult& ann);

Json to_json(const MonomialSetup& setup);
MonomialSetup setup_from_json(const Json& j);

Json to_json(const AnalyzeReport& r);
AnalyzeReport analyze_report_from_json(const Json& j);

Json to_json(const DivisorReport& r);
DivisorReport divisor_report_from_json(const Json& j);

Json to_json(const AbmodReport& r);
AbmodReport abmod_report_from_json(const Json& j);

std::string to_text(const MonomialSetup& setup);
std::string to_text(const AnalyzeReport& r);
std::string to_text(const DivisorReport& r);
std::string to_text(const AbmodReport& r);

}  // namespace fresco
