#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace avw::cli {

enum ExitCode : int { kOk = 0, kFails = 1, kInputError = 2, kTableViolated = 3 };

enum class Format { Human, Json, Csv, Markdown };

struct RunConfig {
    std::string command;
    std::string spec, spec2;
    std::string identity;
    std::string mode = "symbolic";
    int trials = 8;
    std::uint64_t seed = 0x41565731;
    Format format = Format::Human;
    std::string out;
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avw::cli
