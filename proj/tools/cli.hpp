#ifndef ODDLEN_CLI_HPP
#define ODDLEN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oddlen::cli {

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kBudget = 3, kMismatch = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oddlen::cli

#endif // ODDLEN_CLI_HPP
