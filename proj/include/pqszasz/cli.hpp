#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqszasz::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kNonConvergence = 2 };

/// Runs one subcommand (eval, moments, korovkin, voronovskaya, rate, direct,
/// weighted, limits). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pqszasz::cli
