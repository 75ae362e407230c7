#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dseq::cli {

// Dispatch one invocation. Returns the process exit code: 0 on success,
// 2 on usage errors, 1 on domain errors (diagnostic on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dseq::cli
