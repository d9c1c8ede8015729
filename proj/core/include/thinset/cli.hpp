#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thinset {

// Runs one CLI invocation. Exit status 0 on success, 1 on domain errors,
// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace thinset
