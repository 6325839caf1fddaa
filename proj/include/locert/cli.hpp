#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locert {

// Runs the command-line front end against explicit streams so tests can
// drive full pipelines in-process. Exit codes: 0 success/accept,
// 1 reject/counterexample/budget-exhausted, 2 usage or format error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace locert
