#ifndef WEYLTASEP_MODELS_HPP
#define WEYLTASEP_MODELS_HPP

#include "weyltasep/markov.hpp"
#include "weyltasep/weyl.hpp"

#include <vector>

namespace wt {

// Multispecies chains on signed permutations (D: even number of negatives).
// Supported kinds: CDual, B, D.
Kernel build_multi(WeylKind kind, int n);
std::vector<State> multi_states(WeylKind kind, int n);

// Two-species chains on words over {-1, 0, 1} with exactly n0 zeros.
// Supported kinds: CDual, B, D.
Kernel build_two_species(WeylKind kind, int n, int n0);
std::vector<State> two_species_states(int n, int n0);

struct DStarParams {
    Rational alpha = 1;
    Rational alpha_star = 1;
    Rational beta = 1;
    Rational beta_star = 1;
};

// Sites 1 and n carry 0 or *, interior sites -1, 0 or 1; n0 zeros in total.
Kernel build_dstar(int n, int n0, const DStarParams& params);
std::vector<State> dstar_states(int n, int n0);

// (t_1..t_n) -> (-t_n..-t_1)
State reverse_negate(const State& s);

// Probability that the chain moves along edge `edge` (0..n), from the Kac labels.
Rational edge_probability(WeylKind kind, int n, int edge);

} // namespace wt

#endif
