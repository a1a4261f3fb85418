#pragma once

#include "bdm/analysis.hpp"
#include "bdm/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bdm::cli
{

/// Exit codes of `run`.
enum ExitCode : int { Ok = 0, ValidationError = 1, NumericalFailure = 2, SelftestFailure = 3 };

/// `INT`, `INT/INT`, or `ratfn:p0,p1/q0,q1` meaning (p0 + p1 n)/(q0 + q1 n).
RationalFn parse_sequence(std::string_view expr);

/// Comma-separated positive integers, strictly increasing.
std::vector<long> parse_n_list(std::string_view text);

/// `a:b` with 0 <= a < b.
Interval parse_interval(std::string_view text);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, char **argv);

} // namespace bdm::cli
