#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fresco/types.hpp"

namespace fresco {

struct RunConfig {
    std::string command;  // analyze | bernstein | abmod | reproduce
    std::string poly;
    std::vector<std::string> vars;
    std::string form = "1";
    std::string path = "lex";
    bool json = false;
    Index trunc = 8;
    std::string case_filter;
    std::string presentation_file;
    bool color = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitC1 = 3;
inline constexpr int kExitC2 = 4;
inline constexpr int kExitNotSimplePole = 5;

// Runs one command; the report goes to `out`, diagnostics to `err`. Returns
// the exit code listed above.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fresco
