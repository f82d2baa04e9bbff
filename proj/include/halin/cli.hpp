#ifndef HALIN_CLI_HPP
#define HALIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace halin {

// Command-line surface. args excludes the program name. Exit codes: 0 on
// success (built-and-verified, verified, SAT, generated), 1 when a check
// answers negatively (verification mismatch, UNSAT), 2 on input or resource
// errors (unreadable files, malformed formats, non-decomposable graphs,
// aborted searches, bad flags).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halin

#endif
