#include "oracle.hpp"

#include "weyltasep/closedform.hpp"
#include "weyltasep/errors.hpp"
#include "weyltasep/lumping.hpp"
#include "weyltasep/markov.hpp"
#include "weyltasep/models.hpp"
#include "weyltasep/tworow.hpp"
#include "weyltasep/verify.hpp"

#include <doctest.h>

#include <set>

using namespace wt;
using namespace wt::tworow;

namespace {

bool same_dist(const Dist& a, const Dist& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.p[i] != b[a.states[i]])
            return false;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.p[i] != a[b.states[i]])
            return false;
    return true;
}

} // namespace

TEST_CASE("enumeration")
{
    CHECK(enumerate(3, 1).size() == 5);
    CHECK(enumerate(4, 0).size() == 5);
    for (const Config& c : enumerate(5, 2)) {
        CHECK(is_valid(c));
        CHECK(parse(to_string(c)) == c);
        CHECK(decode(encode(c)) == c);
    }
    CHECK_FALSE(is_valid(parse("0 * 0")));
    CHECK_FALSE(is_valid(parse("* 1/1 * -1/-1 *")));
    CHECK_THROWS_AS(parse("1-1"), InvalidConfig);
    CHECK_THROWS_AS(validate(parse("0 * 0")), InvalidConfig);
}

TEST_CASE("strip counts")
{
    for (int k = 0; k <= 8; ++k)
        CHECK(count_segments(k, 0) == catalan(k + 1));
    CHECK(count_segments(2, 2) == 1);
    CHECK(count_segments(3, 1) == 14);
}

TEST_CASE("labels and q-weights")
{
    Config zeros = parse("0 0 0");
    Labels l = label_counts(zeros);
    CHECK(l.y + l.z + l.z_prime + l.y_star + l.z_star == 0);
    Params p{Rational(2, 3), Rational(1, 5), Rational(3, 7), Rational(1, 2)};
    CHECK(q_weight(zeros, p) == 1);

    Labels b = label_counts(parse("* 1/1 -1/-1 *"));
    CHECK(b.y == 1);
    CHECK(b.y_star == 1);
    CHECK(b.z_star == 1);
    CHECK(b.z == 0);

    CHECK(q_weight(parse("* -1/1 0"), {Rational(1, 2), 1, 1, 1}) == 2);
}

TEST_CASE("the q-weight reading fits the exact law of the three-column chain")
{
    Params p{Rational(1, 2), Rational(1, 3), Rational(3, 4), Rational(2, 5)};
    for (int n0 = 0; n0 <= 3; ++n0) {
        Kernel k = kernel(3, n0, p);
        CHECK(same_dist(stationary(3, n0, p), exact_stationary(k)));
    }
}

TEST_CASE("local moves")
{
    int seen = 0;
    for (int n = 3; n <= 5; ++n)
        for (const Config& c : enumerate(n, 1)) {
            if (c[0] != kZero || c[1] != kMinusPlus)
                continue;
            ++seen;
            CHECK(rule_at(c, 1) == Rule::L3);
            Move m = transition(c, 1);
            CHECK(m.rule == Rule::L3);
            CHECK(m.wall == 1);
            CHECK(m.result[0] == kStarCol);
            CHECK(m.result[1] == kZero);
            CHECK(std::equal(c.begin() + 2, c.end(), m.result.begin() + 2));
        }
    CHECK(seen > 0);

    Params p{Rational(2, 3), Rational(1, 5), Rational(3, 7), Rational(1, 2)};
    CHECK(rate(Rule::L1, p) == p.alpha);
    CHECK(rate(Rule::R2, p) == p.beta_star);
    CHECK(rate(Rule::None, p) == 0);

    for (const Config& c : enumerate(4, 1))
        for (int i = 1; i < 4; ++i) {
            Move m = transition(c, i);
            if (m.rule == Rule::None) {
                CHECK(m.result == c);
                CHECK(m.wall == i);
            }
        }
}

TEST_CASE("the local move map is a bijection on configurations times walls")
{
    for (int n = 3; n <= 6; ++n)
        for (int n0 = 0; n0 <= 2; ++n0) {
            auto all = enumerate(n, n0);
            std::set<std::pair<Config, int>> image;
            for (const Config& c : all)
                for (int i = 1; i < n; ++i) {
                    Move m = transition(c, i);
                    CHECK(is_valid(m.result));
                    image.insert({m.result, m.wall});
                }
            CHECK(image.size() == all.size() * static_cast<std::size_t>(n - 1));
        }
}

TEST_CASE("product form is the stationary law")
{
    std::mt19937_64 rng(7);
    for (auto [n, n0] : {std::pair{3, 1}, std::pair{4, 0}, std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 1}}) {
        Params p{oracle::random_rate(rng), oracle::random_rate(rng), oracle::random_rate(rng), oracle::random_rate(rng)};
        Dist q = stationary(n, n0, p);
        CHECK(q.total() == 1);
        CHECK(same_dist(q, exact_stationary(kernel(n, n0, p))));
    }
}

TEST_CASE("degenerate boundary rates")
{
    Dist d = stationary(3, 1, {1, 0, 1, 0});
    Rational mass = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.p[i] > 0) {
            CHECK(to_string(decode(d.states[i])) == "* 0 *");
            mass += d.p[i];
        }
    CHECK(mass == 1);
}

TEST_CASE("top row of the two-row law is the D* law")
{
    Params half{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    CHECK(same_dist(project_distribution(stationary(3, 1, half), top_row()), exact_stationary(build_dstar(3, 1, half))));
    Config c = parse("0 1/1 -1/-1");
    Dist point;
    point.states = {encode(c)};
    point.p = {1};
    CHECK(project_distribution(point, top_row())[State{0, 1, -1}] == 1);
}

TEST_CASE("partition function")
{
    CHECK(partition(5, 1, {1, 0, Rational(1, 2), Rational(1, 2)}) == Rational(binomial(8, 3)));
    CHECK(partition(4, 2, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}) == 29);
    CHECK(partition(5, 1, {1, 0, 1, 0}) == 14);
    CHECK(partition(4, 4, {Rational(1, 3), Rational(1, 5), 1, 1}) == 1);
}

TEST_CASE("tworow suite")
{
    SuiteOptions opt;
    opt.n_max = 4;
    auto checks = run_suite("tworow", opt);
    CHECK(checks.size() > 10);
    for (const auto& c : checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.ok);
    }
}
