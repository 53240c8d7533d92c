#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral {

/**
 * Entry point for the command-line surface (table / verify / errata /
 * export).  Returns the process exit code: 0 on success, 1 when a
 * verification run leaves any identity unverified and unresolved,
 * 2 on usage errors.  All output goes through the provided streams so
 * the commands are testable in-process.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral
