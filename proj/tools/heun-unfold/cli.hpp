#pragma once

#include "heun/complex.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace heun::cli {

enum ExitCode : int { exit_ok = 0, exit_validation = 2, exit_numeric = 3, exit_verdict = 4 };

// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1.5", "-2i", "0.7+0.2i", "1e-3-4e-2i".
Complex parse_complex(std::string_view text);

// "1e-2,1e-4" as listed, or "1e-2:1e-6" by decades.
std::vector<double> parse_eps_range(std::string_view text);

// "25,50,100" as listed, or "25:200" by doubling.
std::vector<long> parse_m_range(std::string_view text);

} // namespace heun::cli
