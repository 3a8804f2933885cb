#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stratos {

// Batch front end. `args` excludes the program name. Exit code 0 on
// success/true, 1 on semantically false or unprovable-within-bound, 2 on
// malformed input. STRATOS_FUEL overrides the recursion fuel guards.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratos
