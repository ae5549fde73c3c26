#ifndef WEYLTASEP_TWOROW_HPP
#define WEYLTASEP_TWOROW_HPP

#include "weyltasep/markov.hpp"
#include "weyltasep/models.hpp"

#include <string>
#include <vector>

namespace wt::tworow {

struct Column {
    int top;
    int bottom;
    bool operator==(const Column&) const = default;
    auto operator<=>(const Column&) const = default;
};

inline constexpr Column kZero{0, 0};
inline constexpr Column kStarCol{kStar, kStar};
inline constexpr Column kUp{1, 1};     // 1 over 1
inline constexpr Column kDown{-1, -1}; // -1 over -1
inline constexpr Column kPlusMinus{1, -1};
inline constexpr Column kMinusPlus{-1, 1};

using Config = std::vector<Column>;

using Params = DStarParams;

std::string to_string(const Config& c);
// Parses whitespace-separated columns: "0", "*", or top/bottom such as "1/-1".
Config parse(const std::string& text);

State encode(const Config& c);
Config decode(const State& s);

bool is_valid(const Config& c);
void validate(const Config& c); // throws InvalidConfig

// Every valid configuration with n columns and n0 zero columns, sorted.
std::vector<Config> enumerate(int n, int n0);

// Star-free column strings of length k with n0 zero columns that satisfy the
// balance and prefix conditions; no constraint on the end columns.
BigInt count_segments(int k, int n0);

struct Labels {
    int y = 0;
    int z = 0;
    int z_prime = 0;
    int y_star = 0;
    int z_star = 0;
};

// Label counts without the end-column validity check.
Labels count_labels(const Config& c);
Labels label_counts(const Config& c);

// 1 / (alpha^y alpha*^y* beta^z beta*^z*); factors of a zero alpha* or beta* are dropped.
Rational q_weight(const Config& c, const Params& p);

enum class Rule { None, B1, B2, L1, L2, L3, R1, R2, R3 };
std::string rule_name(Rule r);

Rule rule_at(const Config& c, int wall);
Rational rate(Rule r, const Params& p);

struct Move {
    Config result;
    int wall; // wall of the result at which the reverse rate is read
    Rule rule;
};

// Local move at wall i (1..n-1). Unchanged configuration and wall i when no rule applies.
Move transition(const Config& c, int wall);

Kernel kernel(int n, int n0, const Params& p);

// Stationary law q / Z on the closed class of the kernel.
Dist stationary(int n, int n0, const Params& p);
Rational partition(int n, int n0, const Params& p);

} // namespace wt::tworow

#endif
