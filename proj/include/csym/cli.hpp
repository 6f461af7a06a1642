#ifndef CSYM_CLI_HPP
#define CSYM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace csym {

// Runs the csym command line. Returns the process exit code:
// 0 success, 1 domain error, 2 usage/parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace csym

#endif
