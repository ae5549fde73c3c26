#include "weyltasep/errors.hpp"
#include "weyltasep/markov.hpp"
#include "weyltasep/models.hpp"

#include <doctest.h>

#include <set>

using namespace wt;

namespace {

Rational prob(const Kernel& k, const State& from, const State& to)
{
    return k.probability(k.index_of(from), k.index_of(to));
}

bool rows_stochastic(const Kernel& k)
{
    for (std::size_t i = 0; i < k.size(); ++i) {
        Rational s = 0;
        for (const auto& t : k.row(i)) {
            if (t.p < 0)
                return false;
            s += t.p;
        }
        if (s != 1)
            return false;
    }
    return true;
}

// Exact equality of the kernel with its image under reverse_negate.
bool reversal_invariant(const Kernel& k)
{
    for (std::size_t i = 0; i < k.size(); ++i) {
        std::size_t ri = k.index_of(reverse_negate(k.state(i)));
        for (const auto& t : k.row(i))
            if (k.probability(ri, k.index_of(reverse_negate(k.state(t.to)))) != t.p)
                return false;
    }
    return true;
}

} // namespace

TEST_CASE("state spaces")
{
    CHECK(build_multi(WeylKind::B, 2).size() == 8);
    CHECK(build_multi(WeylKind::D, 3).size() == 24);
    CHECK(build_multi(WeylKind::CDual, 3).size() == 48);
    CHECK(two_species_states(4, 1).size() == 32);

    std::vector<State> ds = dstar_states(3, 1);
    std::set<State> got(ds.begin(), ds.end());
    std::set<State> want{{kStar, 0, kStar}, {kStar, 1, 0}, {kStar, -1, 0}, {0, 1, kStar}, {0, -1, kStar}};
    CHECK(got == want);
}

TEST_CASE("multispecies transitions")
{
    CHECK(prob(build_multi(WeylKind::CDual, 2), {2, 1}, {1, 2}) == Rational(1, 3));
    CHECK(prob(build_multi(WeylKind::B, 3), {1, 3, 2}, {1, -2, -3}) == Rational(1, 6));
    CHECK(prob(build_multi(WeylKind::D, 3), {-1, -2, 3}, {2, 1, 3}) == Rational(1, 4));
}

TEST_CASE("two-species transitions")
{
    CHECK(prob(build_two_species(WeylKind::CDual, 3, 1), {1, 0, -1}, {0, 1, -1}) == Rational(1, 4));
    CHECK(prob(build_two_species(WeylKind::B, 3, 2), {0, 1, 0}, {0, 0, -1}) == Rational(1, 6));
    Kernel d = build_two_species(WeylKind::D, 3, 0);
    CHECK(prob(d, {1, 1, 1}, {1, -1, -1}) == Rational(1, 4));
    CHECK(prob(d, {1, 1, 1}, {-1, -1, 1}) == 0);
}

TEST_CASE("D* transitions")
{
    DStarParams p{Rational(2, 3), Rational(1, 5), Rational(1, 7), Rational(3, 4)};
    Kernel k = build_dstar(3, 1, p);
    CHECK(prob(k, {kStar, -1, 0}, {kStar, 1, 0}) == p.alpha / 2);
    CHECK(prob(k, {0, -1, kStar}, {kStar, 0, kStar}) == Rational(1, 2));
    Kernel z = build_dstar(3, 1, {0, 0, 1, 1});
    CHECK(prob(z, {kStar, -1, 0}, {kStar, 1, 0}) == 0);
    CHECK_THROWS_AS(build_dstar(2, 0, p), InvalidCounts);
    CHECK_THROWS_AS(build_dstar(3, 1, {2, 1, 1, 1}), InvalidParameter);
}

TEST_CASE("rows are stochastic")
{
    for (WeylKind k : {WeylKind::CDual, WeylKind::B, WeylKind::D})
        for (int n = 2; n <= 4; ++n) {
            if (k == WeylKind::D && n < 3)
                continue;
            CHECK(rows_stochastic(build_multi(k, n)));
            for (int n0 = 0; n0 <= n; ++n0)
                CHECK(rows_stochastic(build_two_species(k, n, n0)));
        }
    for (int n = 3; n <= 5; ++n)
        for (int n0 = 0; n0 <= n; ++n0)
            CHECK(rows_stochastic(build_dstar(n, n0, {Rational(1, 2), Rational(1, 3), 1, Rational(1, 4)})));
}

TEST_CASE("Cdual and D two-species chains are invariant under reverse-negate")
{
    for (int n = 2; n <= 6; ++n)
        for (int n0 = 0; n0 <= n; ++n0) {
            CHECK(reversal_invariant(build_two_species(WeylKind::CDual, n, n0)));
            if (n >= 3)
                CHECK(reversal_invariant(build_two_species(WeylKind::D, n, n0)));
        }
}

TEST_CASE("edge probabilities follow the Kac labels")
{
    CHECK(edge_probability(WeylKind::CDual, 4, 0) == Rational(1, 5));
    CHECK(edge_probability(WeylKind::B, 4, 0) == Rational(1, 4));
    CHECK(edge_probability(WeylKind::B, 4, 4) == Rational(1, 8));
    CHECK(edge_probability(WeylKind::D, 4, 0) == Rational(1, 6));
    CHECK(edge_probability(WeylKind::D, 4, 2) == Rational(1, 3));
    for (WeylKind k : {WeylKind::CDual, WeylKind::B, WeylKind::D})
        for (int n = 3; n <= 6; ++n) {
            Rational s = 0;
            for (int e = 0; e <= n; ++e)
                s += edge_probability(k, n, e);
            CHECK(s == 1);
        }
}

TEST_CASE("reverse-negate")
{
    CHECK(reverse_negate({1, -2, 0}) == State{0, 2, -1});
    CHECK(reverse_negate(reverse_negate({3, -1, 2})) == State{3, -1, 2});
}

TEST_CASE("invalid counts")
{
    CHECK_THROWS_AS(build_two_species(WeylKind::B, 3, 4), InvalidCounts);
    CHECK_THROWS_AS(build_multi(WeylKind::C, 3), NotImplemented);
}
