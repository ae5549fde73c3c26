#include "weyltasep/errors.hpp"
#include "weyltasep/lumping.hpp"
#include "weyltasep/markov.hpp"
#include "weyltasep/models.hpp"
#include "weyltasep/tworow.hpp"
#include "weyltasep/verify.hpp"

#include <doctest.h>

using namespace wt;

namespace {

// Restriction of a kernel to its unique closed class.
Kernel closed_part(const Kernel& k)
{
    ClassInfo c = communicating_classes(k);
    auto closed = c.closed_classes();
    REQUIRE(closed.size() == 1);
    return restrict(k, c.classes[closed[0]]);
}

bool same_support_dist(const Dist& a, const Dist& b)
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

TEST_CASE("k-coloring")
{
    CHECK(k_color({1, 2, 3}, 1) == State{1, 1, 1});
    CHECK(k_color({2, -3, 1}, 2) == State{1, -1, 0});
    CHECK(k_color({-1, 2}, 2) == State{0, 1});
    CHECK_THROWS_AS(k_color({1}, 0), InvalidParameter);
    for (const State& s : multi_states(WeylKind::B, 4))
        for (int k = 1; k <= 4; ++k) {
            int zeros = 0;
            for (int x : k_color(s, k))
                zeros += x == 0;
            CHECK(zeros == k - 1);
        }
}

TEST_CASE("star collapse")
{
    CHECK(star_collapse(StarCollapse::PrependCollapseLast)({1, 0, -1}) == State{kStar, 1, 0, kStar});
    CHECK(star_collapse(StarCollapse::CollapseBothEnds)({0, 1, 0}) == State{0, 1, 0});
    CHECK(star_collapse(StarCollapse::CollapseBothEnds)({-1, 0, 1}) == State{kStar, 0, kStar});
    CHECK(star_collapse(StarCollapse::WrapBothEnds)({1, 0}) == State{kStar, 1, 0, kStar});
}

TEST_CASE("identity map is a lumping")
{
    Kernel k = build_multi(WeylKind::B, 3);
    CHECK(verify_isomorphism(k, [](const State& s) { return s; }, k).ok);
}

TEST_CASE("coloring lumps the B chain")
{
    LumpReport r = verify_lumping(build_multi(WeylKind::B, 3), k_coloring(2), build_two_species(WeylKind::B, 3, 1));
    CHECK(r.ok);
    CHECK(r.checked > 0);
}

TEST_CASE("B two-species chain lumps to D* with a star at the first site")
{
    Kernel big = build_two_species(WeylKind::B, 3, 1);
    Kernel small = closed_part(build_dstar(4, 1, {1, 0, Rational(1, 2), Rational(1, 2)}));
    CHECK(verify_lumping(big, star_collapse(StarCollapse::PrependCollapseLast), small).ok);
}

TEST_CASE("a wrong target is detected")
{
    Kernel big = build_multi(WeylKind::B, 3);
    LumpReport r = verify_lumping(big, k_coloring(2), build_two_species(WeylKind::D, 3, 1));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());

    // Forgetting everything but the first letter is not a lumping of the Cdual chain.
    Kernel cd = build_multi(WeylKind::CDual, 3);
    CHECK_FALSE(verify_lumping(cd, [](const State& s) { return State{s[0] > 0 ? 1 : -1}; },
                               Kernel(std::vector<State>{{-1}, {1}}))
                    .ok);
}

TEST_CASE("projected distributions")
{
    Dist point;
    point.states = {{2, -1, 3}, {1, 2, 3}};
    point.p = {1, 0};
    Dist img = project_distribution(point, k_coloring(2));
    CHECK(img[{1, 0, 1}] == 1);
    CHECK(img.total() == 1);

    Dist cd = exact_stationary(build_multi(WeylKind::CDual, 3));
    CHECK(same_support_dist(project_distribution(cd, k_coloring(2)),
                            exact_stationary(build_two_species(WeylKind::CDual, 3, 1))));

    Dist d = exact_stationary(build_multi(WeylKind::D, 3));
    Dist proj = project_distribution(d, compose_maps(k_coloring(2), star_collapse(StarCollapse::CollapseBothEnds)));
    CHECK(same_support_dist(proj, exact_stationary(build_dstar(3, 1, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}))));
}

TEST_CASE("two-row top row lumps to D*")
{
    DStarParams p{Rational(1, 3), Rational(2, 5), Rational(3, 4), Rational(1, 6)};
    for (auto [n, n0] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}})
        CHECK(verify_lumping(tworow::kernel(n, n0, p), top_row(), build_dstar(n, n0, p)).ok);
}

TEST_CASE("lumping suite")
{
    SuiteOptions opt;
    opt.n_max = 4;
    auto checks = run_suite("lumping", opt);
    CHECK(checks.size() > 20);
    for (const auto& c : checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.ok);
    }
}
