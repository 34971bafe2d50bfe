#include "fresco/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "fresco/parse.hpp"
#include "fresco/report.hpp"

namespace fresco {

namespace {

std::vector<std::string> seq_roots_sixths() {
    // -(k+7)/6 for k = 0..11
    std::vector<std::string> out;
    for (int k = 11; k >= 0; --k) out.push_back("-" + std::to_string(k + 7) + "/6");
    return out;
}

}  // namespace

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> cases = [] {
        std::vector<ReferenceCase> v;
        const std::string f1 = "x^5 + y^5 + z^5 + L*x*y*z^2";
        const std::vector<std::string> v3{"x", "y", "z"};
        v.push_back({"4.3.1", 1, f1, v3, "1", {"-6/5", "-4/5", "-4/5", "-7/10"}});
        v.push_back({"4.3.1", 2, f1, v3, "x", {"-7/5", "-6/5", "-1", "-9/10"}});
        v.push_back({"4.3.1", 3, f1, v3, "z", {"-3/2", "-1", "-1", "-1"}});
        v.push_back({"4.3.1", 4, f1, v3, "z^2", {"-9/5", "-13/10", "-6/5", "-6/5"}});
        v.push_back({"4.3.1", 5, f1, v3, "x*y", {"-8/5", "-7/5", "-7/5", "-11/10"}});
        v.push_back({"4.3.1", 6, f1, v3, "x^2", {"-8/5", "-8/5", "-6/5", "-11/10"}});
        v.push_back({"4.3.1", 7, f1, v3, "x*z", {"-17/10", "-7/5", "-6/5", "-6/5"}});
        v.push_back({"4.3.1", 8, f1, v3, "x*y*z", {"-19/10", "-8/5", "-8/5", "-7/5"}});

        const std::string f2 = "x*y^3 + y*z^3 + z*x^3 + L*x*y*z";
        v.push_back({"4.3.2", 1, f2, v3, "1", {"-1", "-1", "-1"}});
        v.push_back({"4.3.2", 2, f2, v3, "x", {"-11/7", "-9/7", "-8/7"}});
        v.push_back({"4.3.2", 3, f2, v3, "x^2", {"-15/7", "-11/7", "-9/7"}});
        v.push_back({"4.3.2", 4, f2, v3, "x*y", {"-13/7", "-12/7", "-10/7"}});
        v.push_back({"4.3.2", 5, f2, v3, "x*y*z", {"-2", "-2", "-2"}});
        v.push_back({"4.3.2", 6, f2, v3, "x^7", {"-5", "-3", "-2"}});

        const std::vector<std::string> v4{"x", "y", "z", "t"};
        v.push_back({"4.3.3", 1, "x*y^2*z^3 + y*z^2*t^3 + z*t^2*x^3 + t*x^2*y^3 + L*x*y*z*t", v4,
                     "1", {"-1", "-1", "-1", "-1"}});

        v.push_back({"4.3.4", 1, "x*y^2 + x^2*y + z*t^3 + t*z^3 + L*x*y*z*t", v4, "1",
                     seq_roots_sixths()});
        return v;
    }();
    return cases;
}

ReproduceReport run_reproduction(const std::string& filter) {
    ReproduceReport report;
    report.all_matched = true;
    const auto strategies = all_path_strategies();
    for (const ReferenceCase& ref : reference_cases()) {
        const std::string id = ref.family + ":" + std::to_string(ref.index);
        if (!filter.empty() && ref.family.find(filter) == std::string::npos &&
            id.find(filter) == std::string::npos)
            continue;
        ReproduceRow row;
        row.ref = ref;
        for (const std::string& s : ref.expected_roots) row.expected.emplace_back(s);
        std::sort(row.expected.begin(), row.expected.end());

        const MonomialPoly poly = parse_poly({ref.poly, ref.vars});
        const MonomialSetup setup = analyze(poly);
        const ExpVector beta = parse_form(ref.form, ref.vars);
        for (PathStrategy strategy : strategies) {
            AnnihilatorResult ann = annihilator(setup, beta, strategy);
            const bool match = ann.divisor_roots == row.expected;
            row.computed.push_back(std::move(ann.divisor_roots));
            row.strategy_match.push_back(match);
            if (match) row.matched = true;
        }
        if (!row.matched) report.all_matched = false;
        report.rows.push_back(std::move(row));
    }
    if (report.rows.empty()) report.all_matched = false;
    return report;
}

nlohmann::json to_json(const ReproduceReport& r) {
    const auto strategies = all_path_strategies();
    nlohmann::json rows = nlohmann::json::array();
    for (const ReproduceRow& row : r.rows) {
        nlohmann::json expected = nlohmann::json::array();
        for (const Rational& q : row.expected) expected.push_back(q.str());
        nlohmann::json computed = nlohmann::json::object();
        nlohmann::json matched_by = nlohmann::json::array();
        for (std::size_t i = 0; i < strategies.size(); ++i) {
            nlohmann::json roots = nlohmann::json::array();
            for (const Rational& q : row.computed[i]) roots.push_back(q.str());
            computed[to_string(strategies[i])] =
                nlohmann::json{{"roots", roots}, {"match", static_cast<bool>(row.strategy_match[i])}};
            if (row.strategy_match[i]) matched_by.push_back(to_string(strategies[i]));
        }
        rows.push_back(nlohmann::json{{"family", row.ref.family},
                                      {"index", row.ref.index},
                                      {"poly", row.ref.poly},
                                      {"vars", row.ref.vars},
                                      {"form", row.ref.form},
                                      {"paper_divisor", factored_divisor(row.expected)},
                                      {"paper_roots", expected},
                                      {"computed", computed},
                                      {"matched_by", matched_by},
                                      {"matched", row.matched}});
    }
    return nlohmann::json{{"command", "reproduce"}, {"all_matched", r.all_matched}, {"rows", rows}};
}

std::string to_text(const ReproduceReport& r, bool color) {
    const auto strategies = all_path_strategies();
    std::ostringstream os;
    for (const ReproduceRow& row : r.rows) {
        const char* mark = row.matched ? "MATCH " : "DIFFER";
        std::string tag = mark;
        if (color) tag = (row.matched ? "\033[32m" : "\033[31m") + tag + "\033[0m";
        os << tag << "  [" << row.ref.family << " #" << row.ref.index << "]  omega = " << row.ref.form
           << ".dx\n";
        os << "        paper:    " << factored_divisor(row.expected) << "\n";
        for (std::size_t i = 0; i < strategies.size(); ++i) {
            os << "        " << to_string(strategies[i]) << ":";
            for (std::size_t pad = std::string(to_string(strategies[i])).size(); pad < 9; ++pad)
                os << " ";
            os << factored_divisor(row.computed[i])
               << (row.strategy_match[i] ? "   (= paper)" : "   (differs)") << "\n";
        }
    }
    os << (r.all_matched ? "all rows matched" : "SOME ROWS DIFFER") << " (" << r.rows.size()
       << " rows)\n";
    return os.str();
}

}  // namespace fresco
