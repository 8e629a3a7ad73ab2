#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidix {

// Command-line entry point, stream-parameterized for testing.  Returns the
// process exit code: 0 on success, 1 when a computation fails (including
// failed verification suites), 2 on usage or input-parse errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace braidix
