#include "oracle.hpp"

#include "weyltasep/errors.hpp"
#include "weyltasep/weyl.hpp"

#include <doctest.h>

#include <set>

using namespace wt;

namespace {

const WeylKind kAll[] = {WeylKind::B, WeylKind::C, WeylKind::D, WeylKind::CDual, WeylKind::BDual};

int min_n(WeylKind k) { return k == WeylKind::D || k == WeylKind::BDual ? 2 : 1; }

} // namespace

TEST_CASE("root data")
{
    RootData b2 = root_data(WeylKind::B, 2);
    CHECK(b2.theta == IntVector{1, 1});

    RootData c1 = root_data(WeylKind::C, 1);
    CHECK(c1.positive_roots == std::vector<IntVector>{{2}});
    CHECK(c1.theta == IntVector{2});

    CHECK(root_data(WeylKind::D, 3).positive_roots.size() == 6);

    for (int n = 2; n <= 5; ++n) {
        CHECK(root_data(WeylKind::B, n).positive_roots.size() == static_cast<std::size_t>(n * n));
        CHECK(root_data(WeylKind::C, n).positive_roots.size() == static_cast<std::size_t>(n * n));
        CHECK(root_data(WeylKind::D, n).positive_roots.size() == static_cast<std::size_t>(n * (n - 1)));
    }
}

TEST_CASE("brute-force positive root count of D3")
{
    std::set<IntVector> roots;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int si : {-1, 1})
                for (int sj : {-1, 1}) {
                    IntVector v(3, 0);
                    v[static_cast<std::size_t>(i)] = si;
                    v[static_cast<std::size_t>(j)] = sj;
                    if (is_positive_root(v))
                        roots.insert(v);
                }
    CHECK(roots.size() == 6);
    std::set<IntVector> listed;
    for (const auto& r : root_data(WeylKind::D, 3).positive_roots)
        listed.insert(r);
    CHECK(roots == listed);
}

TEST_CASE("Kac labels")
{
    CHECK(root_data(WeylKind::B, 4).kac == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(root_data(WeylKind::CDual, 3).kac == std::vector<int>{1, 1, 1, 1});
    CHECK(root_data(WeylKind::D, 3).kac == std::vector<int>{1, 1, 1, 1});
    CHECK(root_data(WeylKind::C, 3).kac == std::vector<int>{1, 2, 2, 1});
    CHECK(root_data(WeylKind::BDual, 4).kac == std::vector<int>{1, 2, 2, 1, 1});
    CHECK(root_data(WeylKind::D, 5).kac == std::vector<int>{1, 1, 2, 2, 1, 1});
}

TEST_CASE("highest root expands in simple roots with the Kac labels")
{
    for (WeylKind k : {WeylKind::B, WeylKind::C, WeylKind::D}) {
        for (int n = 3; n <= 6; ++n) {
            RootData r = root_data(k, n);
            IntVector sum(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sum[static_cast<std::size_t>(j)] += r.kac[static_cast<std::size_t>(i)] * r.simple_roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            CHECK(sum == r.theta);
        }
    }
}

TEST_CASE("action")
{
    std::vector<Rational> v{Rational(1, 2), 3, -1};
    CHECK(act(identity_perm(3), v) == v);
    CHECK(act(SignedPerm{-1}, std::vector<int>{1}) == std::vector<int>{-1});
    CHECK(act(SignedPerm{2, 1}, std::vector<int>{1, 0}) == std::vector<int>{0, 1});

    for (const auto& w : enumerate_group(WeylKind::B, 3)) {
        for (int i = 0; i < 3; ++i) {
            std::vector<int> e(3, 0);
            e[static_cast<std::size_t>(i)] = 1;
            CHECK(act(w, act(inverse(w), e)) == e);
        }
    }
}

TEST_CASE("action composes contravariantly")
{
    auto g = enumerate_group(WeylKind::B, 3);
    std::vector<int> x{1, 2, 3};
    for (std::size_t i = 0; i < g.size(); i += 5)
        for (std::size_t j = 0; j < g.size(); j += 7)
            CHECK(act(g[i], act(g[j], x)) == act(compose(g[j], g[i]), x));
}

TEST_CASE("inverse action on the highest root")
{
    CHECK(inverse_act_theta(WeylKind::B, identity_perm(3)) == IntVector{0, 1, 1});
    CHECK(inverse_act_theta(WeylKind::B, SignedPerm{1, -3, 2}) == IntVector{0, 1, -1});
    CHECK(inverse_act_theta(WeylKind::C, SignedPerm{2, 1}) == IntVector{2, 0});

    for (WeylKind k : kAll)
        for (int n = std::max(2, min_n(k)); n <= 4; ++n) {
            IntVector theta = root_data(k, n).theta;
            for (const auto& w : enumerate_group(k, n))
                CHECK(inverse_act_theta(k, w) == act(inverse(w), theta));
        }
}

TEST_CASE("generators")
{
    CHECK(apply_generator(WeylKind::B, SignedPerm{1, 2}, 1) == SignedPerm{2, 1});
    CHECK(apply_generator(WeylKind::B, SignedPerm{1, 2}, 0) == SignedPerm{-1, 2});
    CHECK(apply_generator(WeylKind::B, SignedPerm{1, 2, 3}, 3) == SignedPerm{1, -3, -2});
    CHECK_THROWS_AS(apply_generator(WeylKind::B, SignedPerm{1, 2}, 3), GeneratorOutOfRange);
    CHECK_THROWS_AS(apply_generator(WeylKind::B, SignedPerm{1, 2}, -1), GeneratorOutOfRange);

    for (WeylKind k : kAll)
        for (int n = std::max(2, min_n(k)); n <= 4; ++n)
            for (const auto& w : enumerate_group(k, n))
                for (int g = 0; g <= n; ++g) {
                    SignedPerm v = apply_generator(k, w, g);
                    CHECK(in_group(k, v));
                    CHECK(apply_generator(k, v, g) == w);
                }
}

TEST_CASE("length")
{
    CHECK(length(WeylKind::B, identity_perm(4)) == 0);
    CHECK(length(WeylKind::B, SignedPerm{-1}) == 1);
    CHECK(length(WeylKind::C, SignedPerm{2, 1}) == 1);

    for (WeylKind k : kAll)
        for (int n = min_n(k); n <= 4; ++n) {
            auto bfs = oracle::bfs_lengths(k, n);
            auto group = enumerate_group(k, n);
            CHECK(bfs.size() == group.size());
            for (const auto& w : group)
                CHECK(length(k, w) == bfs.at(w));
        }
}

TEST_CASE("simple generators change length by one, the affine move by an odd amount")
{
    for (WeylKind k : kAll)
        for (int n = std::max(2, min_n(k)); n <= 4; ++n)
            for (const auto& w : enumerate_group(k, n)) {
                int l = length(k, w);
                for (int g = 0; g < n; ++g)
                    CHECK(std::abs(length(k, apply_generator(k, w, g)) - l) == 1);
                CHECK(std::abs(length(k, apply_generator(k, w, n)) - l) % 2 == 1);
            }
}

TEST_CASE("theta raising")
{
    for (WeylKind k : kAll)
        CHECK(theta_raises(k, identity_perm(3)));
    CHECK_FALSE(theta_raises(WeylKind::B, SignedPerm{1, -2}));
    CHECK(theta_raises(WeylKind::B, SignedPerm{-1, 2}));

    for (WeylKind k : kAll)
        for (int n = std::max(2, min_n(k)); n <= 4; ++n)
            for (const auto& w : enumerate_group(k, n))
                CHECK(theta_raises(k, w) == is_positive_root(inverse_act_theta(k, w)));
}

TEST_CASE("sum of positive roots")
{
    CHECK(positive_root_sum(WeylKind::C, 2) == IntVector{2, 4});
    CHECK(positive_root_sum(WeylKind::B, 3) == IntVector{1, 3, 5});
    CHECK(positive_root_sum(WeylKind::D, 2) == IntVector{0, 2});

    for (WeylKind k : {WeylKind::B, WeylKind::C, WeylKind::D})
        for (int n = 2; n <= 6; ++n) {
            RootData r = root_data(k, n);
            IntVector sum(static_cast<std::size_t>(n), 0);
            for (const auto& a : r.positive_roots)
                for (int j = 0; j < n; ++j)
                    sum[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(j)];
            CHECK(positive_root_sum(k, n) == sum);
        }
}

TEST_CASE("group enumeration")
{
    CHECK(enumerate_group(WeylKind::B, 2).size() == 8);
    CHECK(enumerate_group(WeylKind::D, 3).size() == 24);
    CHECK(enumerate_group(WeylKind::B, 4).size() == 384);
    for (const auto& w : enumerate_group(WeylKind::D, 4)) {
        int neg = 0;
        for (int x : w)
            neg += x < 0;
        CHECK(neg % 2 == 0);
        CHECK(compose(w, inverse(w)) == identity_perm(4));
    }
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(parse_kind("E"), InvalidKind);
    CHECK_THROWS_AS(require_signed_perm(SignedPerm{1, 1}), NotSignedPerm);
    CHECK_THROWS_AS(require_signed_perm(SignedPerm{0, 2}), NotSignedPerm);
    CHECK_THROWS_AS(act(SignedPerm{3, 1}, std::vector<int>{1, 2}), NotSignedPerm);
    CHECK(parse_kind("Cdual") == WeylKind::CDual);
    CHECK(kind_name(parse_kind("Bdual")) == "Bdual");
}
