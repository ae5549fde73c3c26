#ifndef WEYLTASEP_VERIFY_HPP
#define WEYLTASEP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wt {

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SuiteOptions {
    int n_max = 4;      // largest chain size for exact solves
    int k_max = 12;     // identity ranges
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

// Throws InvalidParameter for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& opt);

bool all_ok(const std::vector<Check>& checks);

} // namespace wt

#endif
