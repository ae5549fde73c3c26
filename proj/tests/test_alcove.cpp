#include "weyltasep/alcove.hpp"
#include "weyltasep/closedform.hpp"
#include "weyltasep/errors.hpp"

#include <doctest.h>

#include <random>

using namespace wt;

namespace {

struct Case {
    WeylKind kind;
    int n;
};

const Case kCases[] = {{WeylKind::B, 2}, {WeylKind::B, 3}, {WeylKind::C, 2}, {WeylKind::C, 3},
                       {WeylKind::CDual, 2}, {WeylKind::CDual, 3}, {WeylKind::BDual, 2},
                       {WeylKind::BDual, 3}, {WeylKind::D, 3}};

} // namespace

TEST_CASE("fundamental point")
{
    auto x = fundamental_point(WeylKind::B, 2);
    CHECK(0 < x[0]);
    CHECK(x[0] < x[1]);
    CHECK(x[0] + x[1] < 1);
    for (const auto& c : kCases) {
        auto p = fundamental_point(c.kind, c.n);
        CHECK(separation_count(c.kind, p) == 0);
        RootData r = root_data(c.kind, c.n);
        for (const auto& a : r.positive_roots) {
            Rational s = 0;
            for (int j = 0; j < c.n; ++j)
                s += a[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
            CHECK(s.get_den() != 1);
        }
    }
}

TEST_CASE("separation count")
{
    CHECK_THROWS_AS(separation_count(WeylKind::B, {0, Rational(1, 3)}), NonGenericPoint);

    // Reflection of the fundamental point in <theta, x> = 1.
    auto x = fundamental_point(WeylKind::B, 2);
    Rational t = x[0] + x[1];
    std::vector<Rational> y{x[0] + (1 - t), x[1] + (1 - t)};
    CHECK(separation_count(WeylKind::B, y) == 1);
}

TEST_CASE("a reduced word of length eight")
{
    AlcoveWalker w(WeylKind::B, 2);
    for (int g : {2, 0, 1, 0, 2, 0, 2, 1})
        CHECK(w.step(g));
    CHECK(w.crossings() == 8);
    CHECK(separation_count(WeylKind::B, w.point()) == 8);
}

TEST_CASE("first proposals are accepted, immediate repeats rejected")
{
    for (const auto& c : kCases)
        for (int g = 0; g <= c.n; ++g) {
            AlcoveWalker w(c.kind, c.n);
            CHECK(w.step(g));
            CHECK_FALSE(w.step(g));
            CHECK(w.crossings() == 1);
        }
}

TEST_CASE("crossings equal the separation count along random proposals")
{
    for (const auto& c : kCases) {
        AlcoveWalker w(c.kind, c.n);
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> gen(0, c.n);
        long accepted = 0;
        for (int s = 0; s < 10000; ++s) {
            long before = w.crossings();
            bool ok = w.step(gen(rng));
            accepted += ok;
            CHECK(w.crossings() - before == (ok ? 1 : 0));
            if (s % 500 == 0)
                CHECK(separation_count(c.kind, w.point()) == w.crossings());
        }
        CHECK(w.crossings() == accepted);
        CHECK(separation_count(c.kind, w.point()) == accepted);
        std::vector<Rational> x = w.point();
        for (int j = 0; j < c.n; ++j)
            CHECK(x[static_cast<std::size_t>(j)] * w.denominator() == w.scaled_point()[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("a single reflection in a wall of the current alcove changes the count by one")
{
    for (const auto& c : kCases) {
        AlcoveWalker w(c.kind, c.n);
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<int> gen(0, c.n);
        for (int s = 0; s < 300; ++s)
            w.step(gen(rng));
        long base = separation_count(c.kind, w.point());
        for (int g = 0; g <= c.n; ++g) {
            AlcoveWalker v = w;
            long before = v.crossings();
            bool ok = v.step(g);
            long after = separation_count(c.kind, v.point());
            if (ok)
                CHECK(after == base + 1);
            else
                CHECK(after == before);
        }
    }
}

TEST_CASE("walks are deterministic")
{
    WalkResult a = run_walk(WeylKind::B, 3, 20000, 42, 1);
    WalkResult b = run_walk(WeylKind::B, 3, 20000, 42, 1);
    CHECK(a.final_point == b.final_point);
    CHECK(a.accepted == b.accepted);
    WalkResult c = run_walk(WeylKind::B, 3, 20000, 42, 2);
    CHECK(c.final_point != a.final_point);

    DirectionEstimate e1 = estimate_direction(WeylKind::B, 2, 50000, 3, 7);
    DirectionEstimate e2 = estimate_direction(WeylKind::B, 2, 50000, 3, 7);
    CHECK(e1.direction == e2.direction);
    double total = 0;
    for (const auto& [k, v] : e1.chambers)
        total += v;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("short walks point in the closed-form direction")
{
    DirectionEstimate b = estimate_direction(WeylKind::B, 2, 200000, 4, 3);
    CHECK(b.cosine > 0.99);
    CHECK(cosine_similarity(b.reference, {1 / std::sqrt(10.0), 3 / std::sqrt(10.0)}) == doctest::Approx(1.0));
    DirectionEstimate c = estimate_direction(WeylKind::CDual, 2, 200000, 4, 3);
    CHECK(c.cosine > 0.99);
    CHECK(cosine_similarity(c.reference, {3, 5}) == doctest::Approx(1.0));
}

TEST_CASE("unsupported ranks")
{
    CHECK_THROWS_AS(AlcoveWalker(WeylKind::B, 1), UnsupportedRange);
    CHECK_THROWS_AS(AlcoveWalker(WeylKind::D, 2), UnsupportedRange);
}
