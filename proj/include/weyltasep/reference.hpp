#ifndef WEYLTASEP_REFERENCE_HPP
#define WEYLTASEP_REFERENCE_HPP

// Published values reproduced by `verify --suite tables` and the tests.

#include <array>
#include <string_view>
#include <vector>

namespace wt::reference {

// <i, -j> in the B multispecies chain, n = 4, last two sites.
// Rows i = -4..-1, 1..4; columns j = 4, 3, 2, 1.
inline constexpr std::array<int, 8> kBPairRows{-4, -3, -2, -1, 1, 2, 3, 4};
inline constexpr std::array<int, 4> kBPairCols{4, 3, 2, 1};
inline constexpr std::array<std::array<std::string_view, 4>, 8> kBPairN4{{
    {"0", "1/32", "1/64", "1/64"},
    {"1/224", "0", "19/448", "1/64"},
    {"2/224", "1/224", "0", "11/224"},
    {"3/224", "2/224", "1/224", "0"},
    {"4/224", "3/224", "1/32", "0"},
    {"5/224", "3/56", "0", "1/224"},
    {"13/224", "0", "1/112", "3/224"},
    {"0", "3/224", "5/224", "3/112"},
}};

struct DirectionRow {
    int n;
    std::vector<std::string_view> c;
};

// Limiting-direction coefficients c_1..c_n.
inline const std::vector<DirectionRow> kDirectionD{
    {2, {"1/2", "1/2"}},
    {3, {"0", "1/6", "1/3"}},
    {4, {"0", "5/58", "19/116", "1/4"}},
    {5, {"0", "7/130", "147/1495", "17/115", "1/5"}},
    {6, {"0", "21/562", "1077/16298", "381/3886", "53/402", "1/6"}},
};

inline const std::vector<DirectionRow> kDirectionBDual{
    {2, {"1/10", "2/5"}},
    {3, {"1/22", "13/77", "2/7"}},
    {4, {"5/186", "326/3441", "52/333", "2/9"}},
};

inline const std::vector<DirectionRow> kDirectionC{
    {1, {"1/2"}},
    {2, {"1/6", "1/3"}},
    {3, {"5/58", "19/116", "1/4"}},
    {4, {"7/130", "147/1495", "17/115", "1/5"}},
};

} // namespace wt::reference

#endif
