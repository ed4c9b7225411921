#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphcode {

inline constexpr const char* kVersion = "0.1.0";

/// Parses and runs one command line (without the program name).
/// Exit codes: 0 success / verified, 1 usage or domain error,
/// 2 unverified result (failed certificate, failed witness check, infeasible).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sphcode
