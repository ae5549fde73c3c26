#ifndef WEYLTASEP_MARKOV_HPP
#define WEYLTASEP_MARKOV_HPP

#include "weyltasep/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wt {

// A state is a word of integers. The boundary letter * is stored as kStar.
using State = std::vector<int>;
inline constexpr int kStar = 1 << 20;

std::string state_to_string(const State& s);

struct Transition {
    std::size_t to;
    Rational p;
};

// Finite Markov kernel with exact rational entries. Rows are sparse and
// include the holding probability.
class Kernel {
public:
    Kernel() = default;
    explicit Kernel(std::vector<State> states);

    std::size_t size() const { return states_.size(); }
    const std::vector<State>& states() const { return states_; }
    const State& state(std::size_t i) const { return states_[i]; }
    const std::vector<Transition>& row(std::size_t i) const { return rows_[i]; }

    bool contains(const State& s) const { return index_.count(s) != 0; }
    std::size_t index_of(const State& s) const;

    // Adds probability mass for s -> t. t must be a known state.
    void add(std::size_t from, const State& to, const Rational& p);
    void add(std::size_t from, std::size_t to, const Rational& p);

    // Puts 1 - (row sum) on the diagonal; throws NotStochastic if negative.
    void close_rows();

    Rational probability(std::size_t from, std::size_t to) const;
    std::size_t transition_count() const;

private:
    std::vector<State> states_;
    std::map<State, std::size_t> index_;
    std::vector<std::vector<Transition>> rows_;
};

struct Dist {
    std::vector<State> states;
    std::vector<Rational> p;

    Rational operator[](const State& s) const;
    Rational total() const;
    std::size_t size() const { return states.size(); }
};

struct EmpiricalDist {
    std::vector<State> states;
    std::vector<double> p;
};

struct ClassInfo {
    std::vector<std::vector<std::size_t>> classes; // strongly connected components
    std::vector<bool> closed;
    std::vector<std::size_t> closed_classes() const;
};

ClassInfo communicating_classes(const Kernel& k);

// Restriction to a set of states whose rows do not leave the set.
Kernel restrict(const Kernel& k, const std::vector<std::size_t>& keep);

// Exact stationary law. Transient states get probability 0.
// Throws NotIrreducible unless exactly one closed class exists.
Dist exact_stationary(const Kernel& k);

// True when pi K == pi exactly.
bool is_stationary(const Kernel& k, const Dist& pi);

// Occupation frequencies of independent chains started at `start`
// (default: first state of the closed class).
EmpiricalDist mc_estimate(const Kernel& k, std::uint64_t steps, std::uint64_t burn_in,
                          std::uint64_t seed, int trials = 1, long start = -1);

double total_variation(const Dist& exact, const EmpiricalDist& est);

} // namespace wt

#endif
