#ifndef WEYLTASEP_ALCOVE_HPP
#define WEYLTASEP_ALCOVE_HPP

#include "weyltasep/rational.hpp"
#include "weyltasep/weyl.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wt {

// Barycenter of the vertices of the fundamental alcove
// { <alpha_i, x> > 0, <theta, x> < 1 }.
std::vector<Rational> fundamental_point(WeylKind kind, int n);

// Number of hyperplanes <alpha, x> = k (alpha positive, k integer) separating
// x from the fundamental point. Throws NonGenericPoint on a hyperplane.
long separation_count(WeylKind kind, const std::vector<Rational>& x);

// Reduced random walk on alcoves. Coordinates are kept as integers over a
// fixed denominator, so every step is exact.
class AlcoveWalker {
public:
    AlcoveWalker(WeylKind kind, int n);

    // Proposes u -> u r_g; accepts iff the new wall was never crossed.
    bool step(int g);

    std::vector<Rational> point() const;
    const SignedPerm& linear() const { return linear_; }
    std::vector<Rational> translation() const;
    long crossings() const { return crossings_; }
    WeylKind kind() const { return kind_; }
    int n() const { return n_; }

    // Raw scaled coordinates (point() times denominator()).
    const std::vector<std::int64_t>& scaled_point() const { return x_; }
    std::int64_t denominator() const { return den_; }

private:
    WeylKind kind_;
    int n_;
    std::int64_t den_;
    std::vector<std::int64_t> x0_;
    std::vector<std::vector<std::int64_t>> roots_; // alpha_0..alpha_{n-1}, theta
    std::vector<std::int64_t> level_;              // 0 for simple walls, den for theta
    std::vector<SignedPerm> refl_;                 // linear part of r_g
    std::vector<std::vector<std::int64_t>> shift_; // translation part of r_g
    std::vector<std::vector<std::int64_t>> image_; // r_g(x0)
    SignedPerm linear_;
    std::vector<std::int64_t> t_;
    std::vector<std::int64_t> x_;
    long crossings_ = 0;
};

struct WalkResult {
    std::vector<Rational> final_point;
    std::vector<double> canonical;  // final point moved to the dominant chamber
    std::string chamber;            // signed permutation taking it there
    std::uint64_t accepted = 0;
    std::uint64_t steps = 0;
};

// Generators proposed with probability a_g / sum a.
WalkResult run_walk(WeylKind kind, int n, std::uint64_t steps, std::uint64_t seed, std::uint64_t stream = 0);

struct DirectionEstimate {
    std::vector<double> direction;      // mean unit vector, renormalized
    std::vector<WalkResult> trials;
    std::map<std::string, double> chambers;
    double cosine = 0;                  // against the closed form
    std::vector<double> reference;      // closed form, unit length
};

DirectionEstimate estimate_direction(WeylKind kind, int n, std::uint64_t steps, int trials, std::uint64_t seed);

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

} // namespace wt

#endif
