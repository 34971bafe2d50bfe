#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fresco/engine.hpp"
#include "fresco/rational.hpp"

namespace fresco {

// One row of the built-in reference tables: a polynomial, a monomial form and
// the published divisor (as the multiset of divisor roots).
struct ReferenceCase {
    std::string family;   // "4.3.1" .. "4.3.4"
    int index = 0;        // row number within the family, 1-based
    std::string poly;
    std::vector<std::string> vars;
    std::string form;
    std::vector<std::string> expected_roots;  // sorted ascending as rationals
};

const std::vector<ReferenceCase>& reference_cases();

struct ReproduceRow {
    ReferenceCase ref;
    std::vector<Rational> expected;                       // sorted
    std::vector<std::vector<Rational>> computed;          // per strategy, sorted
    std::vector<bool> strategy_match;                     // per strategy
    bool matched = false;
};

struct ReproduceReport {
    std::vector<ReproduceRow> rows;
    bool all_matched = false;
};

// Runs every reference case whose "family" or "family:index" id contains
// `filter` (empty = all) under all path strategies.
ReproduceReport run_reproduction(const std::string& filter);

nlohmann::json to_json(const ReproduceReport& r);
std::string to_text(const ReproduceReport& r, bool color);

}  // namespace fresco
