#ifndef WEYLTASEP_CLI_HPP
#define WEYLTASEP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wt {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wt

#endif
