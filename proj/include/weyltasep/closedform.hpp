#ifndef WEYLTASEP_CLOSEDFORM_HPP
#define WEYLTASEP_CLOSEDFORM_HPP

#include "weyltasep/rational.hpp"
#include "weyltasep/weyl.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace wt {

// C^n_k = binom(n+k, n) - binom(n+k, n+1), defined for 0 <= k <= n.
BigInt ballot(long n, long k);
// Extension used inside sums: 0 for k < 0 or k > n, and C^{-1}_0 = 1.
BigInt ballot_ext(long n, long k);
BigInt catalan(long k);

Rational m_poly(int k, const Rational& beta);
Rational v_poly(int k, const Rational& alpha, const Rational& beta);
// Brute-force weighted sum over bicolored Motzkin paths of length k.
Rational enumerate_bicolored_motzkin(int k, const Rational& alpha, const Rational& beta);

// Semipermeable chain (two-row model with * at both ends, rates alpha, beta).
Rational z_semiperm(int n, int n0, const Rational& alpha, const Rational& beta);
// P(w_j = 1) on n sites with n0 zeros.
Rational semiperm_density(int n, int n0, int j, const Rational& alpha, const Rational& beta);
// Probability of species i at the last site of the Cdual chain.
Rational ccheck_last_density(int n, int i);

// Tables of <a,b> for the last two sites, indexed [a+1][b+1], a, b in {-1,0,1}.
using PairTable = std::array<std::array<Rational, 3>, 3>;

BigInt z_b(int n, int n0);
PairTable b_pair_table(int n, int n0);
BigInt z_d(int n, int n0);
PairTable d_pair_table(int n, int n0);

// Row/Col sums indexed by species (-n..n, no 0); hooks by 1..n.
struct MultiSums {
    std::map<int, Rational> row, col, hd, hu;
};
MultiSums multi_sums(WeylKind kind, int n);
// The same sums read off the exact stationary law of the multispecies chain.
MultiSums multi_sums_exact(WeylKind kind, int n);

// Row_k - Hd_k + Col_k - Hu_k from last-two-site tables of the two-species
// chains with n0 = 0..n zeros (tables[n0]).
std::vector<Rational> direction_from_pair_tables(const std::vector<PairTable>& tables);
MultiSums sums_from_pair_tables(const std::vector<PairTable>& tables);

Rational b_first_site(int n, int k);

// Conjectured <x, y> at the last two sites of the B chain; empty outside
// the five covered ranges.
std::optional<Rational> conjecture_b_value(int n, int x, int y);

// Coefficients c_1..c_n of the limiting direction. For B and D these equal the
// exact sum over raising states of pi(w) w^{-1}.theta; for C, Cdual, Bdual they
// are the last-site (resp. last-two-site) combinations, i.e. the direction up to
// a positive factor.
std::vector<Rational> limdir_closed(WeylKind kind, int n);

// sum over w with r_theta w > w of pi(w) w^{-1}.theta, from the exact
// stationary law of the multispecies chain (Cdual, B, D).
std::vector<Rational> limdir_exact_lam(WeylKind kind, int n);

// Divides by the coefficient sum.
std::vector<Rational> normalize_direction(const std::vector<Rational>& c);

// Last-two-site tables of the Bdual two-species chain via the two-row model.
PairTable bdual_pair_table(int n, int n0);

// Coefficients of sum_n Z^D_{n,n0} t^n up to t^max_power.
std::vector<BigInt> z_d_series(int n0, int max_power);

} // namespace wt

#endif
