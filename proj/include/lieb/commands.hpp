#ifndef LIEB_COMMANDS_HPP
#define LIEB_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lieb {

// Dispatches one CLI invocation (argv without the program name).  Exit code
// 0 on success, 1 on mathematical failure (a failed check, a non-GSB system),
// 2 on input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieb

#endif  // LIEB_COMMANDS_HPP
