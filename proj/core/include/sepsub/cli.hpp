#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepsub {

/// Command-line front end. Subcommands: check, game, axioms, eval,
/// crosscheck, pseudo, pseudo-check, scheme. Exit codes: 0 membership /
/// true, 1 non-membership / false / mismatch, 2 operational error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sepsub
