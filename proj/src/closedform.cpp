#include "weyltasep/closedform.hpp"

#include "weyltasep/errors.hpp"
#include "weyltasep/lumping.hpp"
#include "weyltasep/models.hpp"
#include "weyltasep/tworow.hpp"

#include <functional>

namespace wt {

BigInt ballot(long n, long k)
{
    if (k < 0 || k > n)
        throw RangeError("ballot number needs 0 <= k <= n");
    return binomial(n + k, n) - binomial(n + k, n + 1);
}

BigInt ballot_ext(long n, long k)
{
    if (n == -1)
        return k == 0 ? 1 : 0;
    if (n < 0 || k < 0 || k > n)
        return 0;
    return ballot(n, k);
}

BigInt catalan(long k)
{
    if (k < 0)
        throw RangeError("negative Catalan index");
    return binomial(2 * k, k) / (k + 1);
}

Rational m_poly(int k, const Rational& beta)
{
    if (k < 0)
        throw RangeError("negative length");
    Rational out = 0;
    for (int i = 0; i <= k; ++i)
        out += Rational(ballot_ext(k, k - i)) * power(beta, -i);
    return out;
}

Rational v_poly(int k, const Rational& alpha, const Rational& beta)
{
    if (k < 0)
        throw RangeError("negative length");
    Rational out = 0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k - i; ++j)
            out += Rational(ballot_ext(k - 1, k - i - j)) * power(alpha, -i) * power(beta, -j);
    return out;
}

Rational enumerate_bicolored_motzkin(int k, const Rational& alpha, const Rational& beta)
{
    if (alpha == 0 || beta == 0)
        throw ZeroParameter("Motzkin weights need nonzero alpha, beta");
    if (k < 0)
        throw RangeError("negative length");
    Rational ia = 1 / alpha, ib = 1 / beta;
    // Steps: up, down, level of the alpha colour, level of the beta colour.
    std::function<Rational(int, int, bool)> walk = [&](int left, int h, bool seen_beta) -> Rational {
        if (h > left)
            return 0;
        if (left == 0)
            return 1;
        Rational a = seen_beta ? Rational(1) : ia;
        Rational out = (h == 0 ? a : Rational(1)) * walk(left - 1, h + 1, seen_beta);
        if (h > 0)
            out += walk(left - 1, h - 1, seen_beta);
        out += (h == 0 ? a : Rational(1)) * walk(left - 1, h, seen_beta);
        out += (h == 0 ? ib : Rational(1)) * walk(left - 1, h, seen_beta || h == 0);
        return out;
    };
    return walk(k, 0, false);
}

static void require_positive(const Rational& x, const char* name)
{
    if (x <= 0)
        throw InvalidParameter(std::string(name) + " must be positive");
}

Rational z_semiperm(int n, int n0, const Rational& alpha, const Rational& beta)
{
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    if (n < 0 || n0 < 0)
        throw InvalidCounts("negative size");
    if (n0 > n)
        return 0;
    Rational out = 0;
    Rational ia = 1 / alpha, ib = 1 / beta;
    for (int k = 0; k <= n - n0; ++k) {
        Rational c(ballot_ext(n + n0 - 1, n - n0 - k));
        if (alpha == beta)
            out += c * (k + 1) * power(ia, k);
        else
            out += c * (power(ib, k + 1) - power(ia, k + 1)) / (ib - ia);
    }
    return out;
}

Rational semiperm_density(int n, int n0, int j, const Rational& alpha, const Rational& beta)
{
    if (n < 1 || n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n, n >= 1");
    if (j < 1 || j > n)
        throw RangeError("site out of range");
    Rational z = z_semiperm(n, n0, alpha, beta);
    Rational out = 0;
    for (int i = 0; i <= n - j - 1; ++i)
        out += Rational(catalan(i)) * z_semiperm(n - i - 1, n0, alpha, beta) / z;
    Rational tail = 0;
    for (int k = 0; k <= n - j; ++k)
        tail += Rational(ballot_ext(n - j - 1, n - j - k)) * power(beta, -(k + 1));
    out += z_semiperm(j - 1, n0, alpha, beta) / z * tail;
    return out;
}

Rational ccheck_last_density(int n, int i)
{
    if (n < 1 || i < 1 || i > n)
        throw RangeError("need 1 <= i <= n");
    return frac(2 * i + 1, 2 * n * (2 * n + 1));
}

BigInt z_b(int n, int n0)
{
    if (n < 1 || n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n, n >= 1");
    return binomial(2 * n, n - n0);
}

PairTable b_pair_table(int n, int n0)
{
    if (n < 2 || n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n, n >= 2");
    Rational z(z_b(n, n0));
    auto B = [](long a, long b) { return Rational(binomial(a, b)); };
    auto C = [](long a, long b) { return Rational(ballot_ext(a, b)); };
    PairTable t;
    t[0] = {B(2 * n - 2, n - n0 - 2), n0 == 0 ? Rational(0) : C(n + n0 - 1, n - n0 - 1), B(2 * n - 2, n - n0 - 2)};
    t[1] = {C(n + n0 - 2, n - n0 - 1), C(n + n0 - 3, n - n0), C(n + n0 - 2, n - n0 - 1)};
    t[2] = {2 * B(2 * n - 3, n - n0 - 2), C(n + n0 - 2, n - n0 - 1), 2 * B(2 * n - 3, n - n0 - 2)};
    for (auto& row : t)
        for (auto& x : row)
            x /= z;
    return t;
}

BigInt z_d(int n, int n0)
{
    if (n < 2 || n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n, n >= 2");
    if (n0 == 0) {
        BigInt out;
        mpz_ui_pow_ui(out.get_mpz_t(), 4, static_cast<unsigned long>(n - 1));
        return out;
    }
    BigInt out = 0;
    for (int j = 0; j <= n - n0; ++j)
        out += binomial(2 * j, j) * binomial(2 * n - 2 * j - 2, n - j - n0);
    return out;
}

static BigInt d_sum_neg(int n, int n0)
{
    BigInt s = 0;
    for (int j = 2; j <= n - n0; ++j)
        s += binomial(2 * j - 2, j) * binomial(2 * n - 2 * j - 2, n - j - n0);
    return s;
}

static BigInt d_sum_pos(int n, int n0)
{
    BigInt s = 0;
    for (int j = 1; j <= n - 1 - n0; ++j)
        s += binomial(2 * j, j) * binomial(2 * n - 2 * j - 4, n - j - n0 - 1);
    return s;
}

PairTable d_pair_table(int n, int n0)
{
    if (n < 2 || n0 < 1 || n0 > n)
        throw InvalidCounts("need 1 <= n0 <= n, n >= 2");
    Rational z(z_d(n, n0));
    auto B = [](long a, long b) { return Rational(binomial(a, b)); };
    Rational neg(d_sum_neg(n, n0)), pos(d_sum_pos(n, n0));
    PairTable t;
    t[0] = {neg, B(2 * n - 3, n - n0 - 1), neg};
    t[1] = {B(2 * n - 4, n - n0 - 1), B(2 * n - 4, n - n0), B(2 * n - 4, n - n0 - 1)};
    if (n0 == 1) {
        // A single zero cannot fill both sites; its mass moves to (-1, 0).
        t[1][1] = 0;
        t[0][1] = B(2 * n - 2, n - 1) - B(2 * n - 4, n - 2);
    }
    t[2] = {pos, B(2 * n - 4, n - n0 - 1), pos};
    for (auto& row : t)
        for (auto& x : row)
            x /= z;
    return t;
}

MultiSums sums_from_pair_tables(const std::vector<PairTable>& tables)
{
    if (tables.size() < 2)
        throw InvalidCounts("need tables for n0 = 0..n");
    const int n = static_cast<int>(tables.size()) - 1;
    auto col_sum = [&](int n0, int b) {
        Rational s = 0;
        for (int a = 0; a < 3; ++a)
            s += tables[static_cast<std::size_t>(n0)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 1)];
        return s;
    };
    auto row_sum = [&](int n0, int a) {
        Rational s = 0;
        for (int b = 0; b < 3; ++b)
            s += tables[static_cast<std::size_t>(n0)][static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b)];
        return s;
    };
    auto cell = [&](int n0, int a, int b) {
        return tables[static_cast<std::size_t>(n0)][static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)];
    };
    MultiSums s;
    for (int k = 1; k <= n; ++k) {
        for (int sign : {1, -1}) {
            s.col[sign * k] = col_sum(k - 1, sign) - col_sum(k, sign);
            s.row[sign * k] = row_sum(k - 1, sign) - row_sum(k, sign);
        }
        s.hd[k] = cell(k - 1, 1, -1) - cell(k, 1, -1);
        s.hu[k] = cell(k - 1, -1, 1) - cell(k, -1, 1);
    }
    return s;
}

std::vector<Rational> direction_from_pair_tables(const std::vector<PairTable>& tables)
{
    MultiSums s = sums_from_pair_tables(tables);
    const int n = static_cast<int>(tables.size()) - 1;
    std::vector<Rational> c;
    for (int k = 1; k <= n; ++k)
        c.push_back(s.row[k] - s.hd[k] + s.col[k] - s.hu[k]);
    return c;
}

MultiSums multi_sums(WeylKind kind, int n)
{
    MultiSums s;
    if (kind == WeylKind::B) {
        if (n < 2)
            throw RangeError("B sums need n >= 2");
        const long d = 2L * n * (2 * n - 1) * (n - 1);
        for (int i = 1; i <= n; ++i) {
            s.col[i] = s.col[-i] = frac(1, 2 * n);
            s.row[-i] = i >= 2 ? frac(1, 2 * n) : frac(n - 1, 2L * n * (2 * n - 1));
            s.row[i] = frac(1L * n * n + 2L * n * (2 * i - 1) - 3L * i * i - i + 1, d);
            s.hd[i] = frac(1L * (n - i) * (n + 3 * i - 1), d);
            s.hu[i] = frac(n - i, 1L * n * (2 * n - 1));
        }
        return s;
    }
    if (kind == WeylKind::D) {
        if (n < 3)
            throw RangeError("D sums need n >= 3");
        BigInt four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(n - 1));
        BigInt two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(2 * n - 1));
        auto Z = [&](int n0) { return Rational(z_d(n, n0)); };
        auto B = [](long a, long b) { return Rational(binomial(a, b)); };
        for (int i = 1; i <= n; ++i) {
            Rational col = i == 1 ? Rational(B(2 * n - 2, n - 1) / Rational(two))
                                  : Rational(B(2 * n - 2, n - i) / (2 * Z(i)) - B(2 * n - 2, n - i + 1) / (2 * Z(i - 1)));
            s.col[i] = s.col[-i] = col;
            if (i == 1) {
                s.row[1] = B(2 * n - 4, n - 2) / Rational(four);
                s.row[-1] = B(2 * n - 4, n - 2) / Rational(four);
                s.hd[1] = B(2 * n - 4, n - 2) / Rational(four);
                s.hu[1] = B(2 * n - 3, n - 2) / Rational(four);
                continue;
            }
            auto neg_row = [&](int n0) {
                PairTable t = d_pair_table(n, n0);
                return Rational(t[0][0] + t[0][1] + t[0][2]);
            };
            s.row[-i] = neg_row(i - 1) - neg_row(i);
            s.row[i] = (2 * Rational(d_sum_pos(n, i - 1)) + B(2 * n - 4, n - i)) / Z(i - 1) -
                       (2 * Rational(d_sum_pos(n, i)) + B(2 * n - 4, n - i - 1)) / Z(i);
            s.hd[i] = Rational(d_sum_pos(n, i - 1)) / Z(i - 1) - Rational(d_sum_pos(n, i)) / Z(i);
            s.hu[i] = Rational(d_sum_neg(n, i - 1)) / Z(i - 1) - Rational(d_sum_neg(n, i)) / Z(i);
        }
        return s;
    }
    throw NotImplemented("correlation sums are known for B and D only");
}

MultiSums multi_sums_exact(WeylKind kind, int n)
{
    Dist pi = exact_stationary(build_multi(kind, n));
    MultiSums s;
    for (int i = 1; i <= n; ++i)
        for (int sign : {1, -1}) {
            s.row[sign * i] = 0;
            s.col[sign * i] = 0;
            if (sign > 0)
                s.hd[i] = s.hu[i] = 0;
        }
    for (std::size_t k = 0; k < pi.size(); ++k) {
        const State& w = pi.states[k];
        int a = w[w.size() - 2], b = w.back();
        const Rational& p = pi.p[k];
        s.row[a] += p;
        s.col[b] += p;
        // down-hook of i: <i,-j> and <j,-i> with j > i
        if (a > 0 && b < 0 && a != -b)
            s.hd[std::min(a, -b)] += p;
        // up-hook of i: <-j,i> and <-i,j> with j > i
        if (a < 0 && b > 0 && -a != b)
            s.hu[std::min(-a, b)] += p;
    }
    return s;
}

Rational b_first_site(int n, int k)
{
    if (n < 2 || k == 0 || k < -n || k > n)
        throw RangeError("need n >= 2 and 1 <= |k| <= n");
    const long d = 2L * n * (2 * n - 1);
    if (k < 0)
        return frac(2L * -k - 1, d);
    if (k == 1)
        return frac(1L * n * n + n - 1, d);
    return frac(1, 2 * n);
}

std::optional<Rational> conjecture_b_value(int n, int x, int y)
{
    if (n < 2 || x == 0 || y == 0 || std::abs(x) > n || std::abs(y) > n)
        throw RangeError("species out of range");
    const long nn = 1L * n * n;
    if (x < 0 && y < 0) {
        int i = -x, j = -y;
        if (i >= 3 && j >= 1 && j <= i - 2)
            return frac(1, 4 * nn);
        if (i == j + 1)
            return frac(1, 4 * nn) + frac(nn - 1L * j * j, 4 * nn * (2 * n - 1));
        if (i <= n - 1 && j >= i + 1)
            return frac(j - i, 2 * nn * (2 * n - 1));
        return std::nullopt;
    }
    if (x > 0 && y < 0) {
        int i = x, j = -y;
        if (i <= n - 2 && j >= i + 2)
            return frac(i + j - 1, 2 * nn * (2 * n - 1));
        if (j == i + 1)
            return frac(1L * i * (nn - 1L * i * i + 2 * n - 2), 2 * nn * (2 * n - 1) * (n - 1));
        if (i >= 2 && j <= i - 1)
            return frac(3L * (i - j) * (i + j - 1), 4 * nn * (2 * n - 1) * (n - 1));
        return std::nullopt;
    }
    return std::nullopt;
}

PairTable bdual_pair_table(int n, int n0)
{
    if (n < 2 || n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n, n >= 2");
    tworow::Params p{frac(1, 2), 0, frac(1, 2), frac(1, 2)};
    Dist d = project_distribution(tworow::stationary(n + 1, n0, p), top_row());
    PairTable t;
    for (auto& row : t)
        for (auto& x : row)
            x = 0;
    for (std::size_t s = 0; s < d.size(); ++s) {
        const State& w = d.states[s];
        int a = w[static_cast<std::size_t>(n - 1)];
        int b = w[static_cast<std::size_t>(n)];
        auto& row = t[static_cast<std::size_t>(a + 1)];
        if (b == kStar) {
            row[0] += d.p[s] / 2;
            row[2] += d.p[s] / 2;
        } else {
            row[1] += d.p[s];
        }
    }
    return t;
}

std::vector<Rational> limdir_closed(WeylKind kind, int n)
{
    validate_kind(kind, n);
    std::vector<Rational> c;
    switch (kind) {
    case WeylKind::B:
        if (n < 2)
            throw InvalidKind("B direction needs n >= 2");
        for (int k = 1; k <= n; ++k)
            c.push_back(frac(2 * k - 1, 1L * n * (2 * n - 1)));
        break;
    case WeylKind::CDual:
        for (int i = 1; i <= n; ++i)
            c.push_back(ccheck_last_density(n, i));
        break;
    case WeylKind::C: {
        Rational h = frac(1, 2);
        auto last = [&](int n0) { return n0 >= n ? Rational(0) : semiperm_density(n, n0, n, h, h); };
        for (int i = 1; i <= n; ++i)
            c.push_back(last(i - 1) - last(i));
        break;
    }
    case WeylKind::D:
        if (n == 2)
            return {frac(1, 2), frac(1, 2)};
        c.push_back(0);
        for (int i = 2; i <= n; ++i) {
            Rational a = frac((i - 1) * binomial(2 * n - 3, n - i), n + i - 2) / Rational(z_d(n, i));
            Rational b = i == 2 ? Rational(0)
                                : Rational(frac((i - 2) * binomial(2 * n - 3, n - i + 1), n + i - 3) / Rational(z_d(n, i - 1)));
            c.push_back(a - b);
        }
        break;
    case WeylKind::BDual: {
        std::vector<PairTable> tables;
        for (int n0 = 0; n0 <= n; ++n0)
            tables.push_back(bdual_pair_table(n, n0));
        return direction_from_pair_tables(tables);
    }
    }
    return c;
}

std::vector<Rational> limdir_exact_lam(WeylKind kind, int n)
{
    Dist pi = exact_stationary(build_multi(kind, n));
    std::vector<Rational> psi(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < pi.size(); ++s) {
        const SignedPerm& w = pi.states[s];
        if (!theta_raises(kind, w))
            continue;
        IntVector v = inverse_act_theta(kind, w);
        for (std::size_t i = 0; i < psi.size(); ++i)
            psi[i] += pi.p[s] * v[i];
    }
    return psi;
}

std::vector<Rational> normalize_direction(const std::vector<Rational>& c)
{
    Rational total = 0;
    for (const auto& x : c)
        total += x;
    if (total == 0)
        throw InvalidParameter("direction has zero coefficient sum");
    std::vector<Rational> out;
    for (const auto& x : c)
        out.push_back(x / total);
    return out;
}

namespace {

using Series = std::vector<BigInt>;

Series mul(const Series& a, const Series& b, int len)
{
    Series out(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < len && j < static_cast<int>(b.size()); ++j)
            out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
}

} // namespace

std::vector<BigInt> z_d_series(int n0, int max_power)
{
    if (n0 < 1 || max_power < 0)
        throw RangeError("series needs n0 >= 1");
    const int len = max_power + 1;
    Series cat(static_cast<std::size_t>(len)), geo(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
        cat[static_cast<std::size_t>(k)] = catalan(k);
        BigInt g;
        mpz_ui_pow_ui(g.get_mpz_t(), 4, static_cast<unsigned long>(k));
        geo[static_cast<std::size_t>(k)] = g;
    }
    Series acc = geo;
    for (int e = 0; e < 2 * n0 - 2; ++e)
        acc = mul(acc, cat, len);
    Series out(static_cast<std::size_t>(len), 0);
    for (int k = 0; k + n0 < len; ++k)
        out[static_cast<std::size_t>(k + n0)] = acc[static_cast<std::size_t>(k)];
    return out;
}

} // namespace wt
