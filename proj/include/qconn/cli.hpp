#pragma once

#include <string>
#include <vector>

namespace qconn {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 failed run or verification, 2 usage error.
int cli_main(const std::vector<std::string>& args);

} // namespace qconn
