#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arcmodel::cli {

// Dispatches a full command line (without the program name). Returns 0 on
// success, 1 on domain errors (NoMorphism, NotSaturated, ...), 2 on parse or
// usage errors. All output is deterministic: identical invocations produce
// byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arcmodel::cli
