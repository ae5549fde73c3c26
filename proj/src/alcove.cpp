#include "weyltasep/alcove.hpp"

#include "weyltasep/closedform.hpp"
#include "weyltasep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace wt {

namespace {

void require_walk_range(WeylKind kind, int n)
{
    validate_kind(kind, n);
    if (kind == WeylKind::D ? n < 3 : n < 2)
        throw UnsupportedRange("alcove walk needs n >= 2 (n >= 3 for D)");
}

// Solves A x = b over the rationals; A is square and invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw InvalidParameter("singular simple-root matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

Rational pair(const IntVector& alpha, const std::vector<Rational>& x)
{
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += alpha[i] * x[i];
    return s;
}

// Number of integers strictly between a and b (neither integral).
long integers_between(const Rational& a, const Rational& b)
{
    BigInt fa, fb;
    mpz_fdiv_q(fa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(fb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    BigInt d = fa - fb;
    return std::labs(d.get_si());
}

} // namespace

std::vector<Rational> fundamental_point(WeylKind kind, int n)
{
    require_walk_range(kind, n);
    RootData rd = root_data(kind, n);
    std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rd.simple_roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<Rational> x(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        std::vector<Rational> w = solve(s, e);
        Rational scale = pair(rd.theta, w);
        for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] += w[static_cast<std::size_t>(j)] / scale;
    }
    for (auto& v : x)
        v /= n + 1;
    return x;
}

long separation_count(WeylKind kind, const std::vector<Rational>& x)
{
    const int n = static_cast<int>(x.size());
    std::vector<Rational> x0 = fundamental_point(kind, n);
    RootData rd = root_data(kind, n);
    long count = 0;
    for (const IntVector& alpha : rd.positive_roots) {
        Rational a = pair(alpha, x0), b = pair(alpha, x);
        if (b.get_den() == 1)
            throw NonGenericPoint("point lies on a hyperplane");
        count += integers_between(a, b);
    }
    return count;
}

AlcoveWalker::AlcoveWalker(WeylKind kind, int n) : kind_(kind), n_(n)
{
    std::vector<Rational> x0 = fundamental_point(kind, n);
    BigInt den = 1;
    for (const auto& v : x0)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    den_ = den.get_si();
    for (const auto& v : x0) {
        Rational s = v * den;
        x0_.push_back(s.get_num().get_si());
    }
    RootData rd = root_data(kind, n);
    SignedPerm id = identity_perm(n);
    for (int g = 0; g <= n; ++g) {
        const IntVector& alpha = g < n ? rd.simple_roots[static_cast<std::size_t>(g)] : rd.theta;
        std::vector<std::int64_t> a(alpha.begin(), alpha.end());
        std::int64_t norm = 0;
        for (auto c : a)
            norm += c * c;
        std::int64_t level = g < n ? 0 : den_;
        std::vector<std::int64_t> shift(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            shift[static_cast<std::size_t>(j)] = level * 2 * a[static_cast<std::size_t>(j)] / norm;
        SignedPerm lin = apply_generator(kind, id, g);
        std::vector<std::int64_t> img = act(lin, x0_);
        for (int j = 0; j < n; ++j)
            img[static_cast<std::size_t>(j)] += shift[static_cast<std::size_t>(j)];
        roots_.push_back(a);
        level_.push_back(level);
        refl_.push_back(lin);
        shift_.push_back(shift);
        image_.push_back(img);
    }
    linear_ = id;
    t_.assign(static_cast<std::size_t>(n), 0);
    x_ = x0_;
}

bool AlcoveWalker::step(int g)
{
    if (g < 0 || g > n_)
        throw GeneratorOutOfRange("generator " + std::to_string(g));
    const auto& a = roots_[static_cast<std::size_t>(g)];
    // Wall u(H_g): <L alpha_g, z - t> = level.
    std::int64_t f0 = 0, f1 = 0;
    for (int j = 0; j < n_; ++j) {
        int v = linear_[static_cast<std::size_t>(j)];
        std::int64_t b = v > 0 ? a[static_cast<std::size_t>(v - 1)] : -a[static_cast<std::size_t>(-v - 1)];
        f0 += b * (x0_[static_cast<std::size_t>(j)] - t_[static_cast<std::size_t>(j)]);
        f1 += b * (x_[static_cast<std::size_t>(j)] - t_[static_cast<std::size_t>(j)]);
    }
    f0 -= level_[static_cast<std::size_t>(g)];
    f1 -= level_[static_cast<std::size_t>(g)];
    if ((f0 > 0) != (f1 > 0))
        return false;
    const auto& img = image_[static_cast<std::size_t>(g)];
    const auto& sh = shift_[static_cast<std::size_t>(g)];
    std::vector<std::int64_t> nt = t_;
    for (int j = 0; j < n_; ++j) {
        int v = linear_[static_cast<std::size_t>(j)];
        std::size_t k = static_cast<std::size_t>(std::abs(v) - 1);
        std::int64_t sgn = v > 0 ? 1 : -1;
        x_[static_cast<std::size_t>(j)] = sgn * img[k] + t_[static_cast<std::size_t>(j)];
        nt[static_cast<std::size_t>(j)] += sgn * sh[k];
    }
    t_ = std::move(nt);
    linear_ = compose(refl_[static_cast<std::size_t>(g)], linear_);
    ++crossings_;
    return true;
}

std::vector<Rational> AlcoveWalker::point() const
{
    std::vector<Rational> out;
    for (auto v : x_)
        out.push_back(frac(BigInt(static_cast<long>(v)), BigInt(static_cast<long>(den_))));
    return out;
}

std::vector<Rational> AlcoveWalker::translation() const
{
    std::vector<Rational> out;
    for (auto v : t_)
        out.push_back(frac(BigInt(static_cast<long>(v)), BigInt(static_cast<long>(den_))));
    return out;
}

namespace {

void canonicalize(WeylKind kind, const std::vector<std::int64_t>& x, std::int64_t den, WalkResult& r)
{
    const std::size_t n = x.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::llabs(x[static_cast<std::size_t>(a)]) < std::llabs(x[static_cast<std::size_t>(b)]); });
    SignedPerm w(n);
    int negatives = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t v = x[static_cast<std::size_t>(order[j])];
        w[j] = v < 0 ? -(order[j] + 1) : order[j] + 1;
        negatives += v < 0;
    }
    if (kind == WeylKind::D && negatives % 2 == 1)
        w[0] = -w[0];
    r.canonical.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        int v = w[j];
        double c = static_cast<double>(x[static_cast<std::size_t>(std::abs(v) - 1)]) / static_cast<double>(den);
        r.canonical[j] = v > 0 ? c : -c;
    }
    r.chamber.clear();
    for (std::size_t j = 0; j < n; ++j)
        r.chamber += (j ? "," : "") + std::to_string(w[j]);
}

} // namespace

WalkResult run_walk(WeylKind kind, int n, std::uint64_t steps, std::uint64_t seed, std::uint64_t stream)
{
    AlcoveWalker walker(kind, n);
    RootData rd = root_data(kind, n);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::mt19937_64 rng(seq);
    std::discrete_distribution<int> pick(rd.kac.begin(), rd.kac.end());
    WalkResult r;
    r.steps = steps;
    for (std::uint64_t s = 0; s < steps; ++s)
        if (walker.step(pick(rng)))
            ++r.accepted;
    r.final_point = walker.point();
    canonicalize(kind, walker.scaled_point(), walker.denominator(), r);
    return r;
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        throw InvalidParameter("dimension mismatch");
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    if (aa == 0 || bb == 0)
        return 0;
    return ab / std::sqrt(aa * bb);
}

static std::vector<double> unit(const std::vector<double>& v)
{
    double s = 0;
    for (double x : v)
        s += x * x;
    s = std::sqrt(s);
    std::vector<double> out(v);
    if (s > 0)
        for (double& x : out)
            x /= s;
    return out;
}

DirectionEstimate estimate_direction(WeylKind kind, int n, std::uint64_t steps, int trials, std::uint64_t seed)
{
    if (trials < 1 || steps < 1)
        throw InvalidParameter("need at least one trial and one step");
    require_walk_range(kind, n);
    DirectionEstimate est;
    est.trials.resize(static_cast<std::size_t>(trials));
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(trials));
    auto job = [&](unsigned first) {
        for (unsigned t = first; t < static_cast<unsigned>(trials); t += workers)
            est.trials[t] = run_walk(kind, n, steps, seed, t);
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(job, w);
        for (auto& th : pool)
            th.join();
    }
    std::vector<double> mean(static_cast<std::size_t>(n), 0);
    for (const auto& r : est.trials) {
        std::vector<double> u = unit(r.canonical);
        for (std::size_t i = 0; i < mean.size(); ++i)
            mean[i] += u[i] / trials;
        est.chambers[r.chamber] += 1.0 / trials;
    }
    est.direction = unit(mean);
    std::vector<double> ref;
    for (const auto& c : limdir_closed(kind, n))
        ref.push_back(c.get_d());
    est.reference = unit(ref);
    est.cosine = cosine_similarity(est.direction, est.reference);
    return est;
}

} // namespace wt
