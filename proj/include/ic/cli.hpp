#ifndef IC_CLI_HPP
#define IC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ic::cli {

// Exit codes: 0 success, 1 input error, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ic::cli

#endif
