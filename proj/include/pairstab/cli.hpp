#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairstab::cli {

/// Runs one command. `args` excludes the program name. Returns the process
/// exit code: 0 on success, 1 on invalid input, 2 on internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Built-in symbolic identity checks behind `selftest`. Returns the number of
/// identities verified; failures are described in `failures`.
unsigned selftest(std::vector<std::string>& failures);

}  // namespace pairstab::cli
