#ifndef RHYDRO_CLI_HPP
#define RHYDRO_CLI_HPP

#include <string>
#include <vector>

namespace rhydro::cli {

inline constexpr const char* kVersion = "rhydro 1.0.0";

// Runs one subcommand. Exit codes: 0 success, 1 failed verification verdict,
// 2 input error, 3 numeric/resource error. Errors also emit a structured
// JSON record on stderr. Nothing is written to disk on exit code 2.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace rhydro::cli

#endif
