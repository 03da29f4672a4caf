#pragma once

#include <iosfwd>

namespace elastica {

// Full command-line front end. Returns the process exit status: 0 on
// success, 1 when a requested check fails, 2 on input errors.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace elastica
