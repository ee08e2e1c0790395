#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordfree {

/// Runs one CLI command. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success (or PASS), 1 parse or validation failure,
/// 2 internal invariant violation (including failed selftest criteria),
/// 3 braid-check found a counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ordfree
