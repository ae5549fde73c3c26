#include "weyltasep/verify.hpp"

#include "weyltasep/closedform.hpp"
#include "weyltasep/errors.hpp"
#include "weyltasep/lumping.hpp"
#include "weyltasep/models.hpp"
#include "weyltasep/reference.hpp"
#include "weyltasep/tworow.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wt {

namespace {

struct Recorder {
    std::vector<Check> out;

    void add(const std::string& name, bool ok, const std::string& detail = "")
    {
        out.push_back({name, ok, ok ? "" : detail});
    }

    void lump(const std::string& name, const LumpReport& r)
    {
        add(name, r.ok, r.violations.empty() ? "" : r.violations.front());
    }

    // Runs f, turning library errors into a failed check.
    void guard(const std::string& name, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            add(name, false, e.what());
        }
    }
};

std::string str(const Rational& r) { return to_string(r); }

bool same_dist(const Dist& a, const Dist& b)
{
    std::map<State, Rational> ma, mb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.p[i] != 0)
            ma[a.states[i]] += a.p[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.p[i] != 0)
            mb[b.states[i]] += b.p[i];
    return ma == mb;
}

Kernel closed_part(const Kernel& k)
{
    ClassInfo info = communicating_classes(k);
    std::vector<std::size_t> keep;
    for (std::size_t c : info.closed_classes())
        keep.insert(keep.end(), info.classes[c].begin(), info.classes[c].end());
    std::sort(keep.begin(), keep.end());
    return restrict(k, keep);
}

StateMap last_two()
{
    return [](const State& s) { return State(s.end() - 2, s.end()); };
}

DStarParams half_params() { return {frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)}; }

Rational random_rate(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(1, 13);
    int q = den(rng), p = num(rng);
    if (p > q)
        std::swap(p, q);
    return frac(p, q);
}

tworow::Params random_params(std::mt19937_64& rng)
{
    return {random_rate(rng), random_rate(rng), random_rate(rng), random_rate(rng)};
}

// ---------------------------------------------------------------- lumping

void suite_lumping(Recorder& rec, const SuiteOptions& opt)
{
    const int nmax = opt.n_max;
    for (WeylKind kind : {WeylKind::CDual, WeylKind::B, WeylKind::D})
        for (int n = kind == WeylKind::CDual ? 1 : 2; n <= nmax; ++n) {
            Kernel multi = build_multi(kind, n);
            for (int k = 1; k <= n; ++k) {
                std::string name = "k-coloring " + kind_name(kind) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
                rec.guard(name, [&] { rec.lump(name, verify_lumping(multi, k_coloring(k), build_two_species(kind, n, k - 1))); });
            }
        }

    for (int n = 1; n <= nmax; ++n)
        for (int n0 = 0; n0 <= n; ++n0) {
            std::string name = "Cdual two-species ~ D* n=" + std::to_string(n) + " n0=" + std::to_string(n0);
            rec.guard(name, [&] {
                Kernel small = closed_part(build_dstar(n + 2, n0, {1, 0, 1, 0}));
                rec.lump(name, verify_isomorphism(build_two_species(WeylKind::CDual, n, n0),
                                                  star_collapse(StarCollapse::WrapBothEnds), small));
            });
        }
    for (int n = 2; n <= nmax; ++n)
        for (int n0 = 0; n0 <= n; ++n0) {
            std::string name = "B two-species -> D* n=" + std::to_string(n) + " n0=" + std::to_string(n0);
            rec.guard(name, [&] {
                rec.lump(name, verify_lumping(build_two_species(WeylKind::B, n, n0),
                                              star_collapse(StarCollapse::PrependCollapseLast),
                                              build_dstar(n + 1, n0, {1, 0, frac(1, 2), frac(1, 2)})));
            });
        }
    for (int n = 3; n <= nmax; ++n)
        for (int n0 = 0; n0 <= n; ++n0) {
            std::string name = "D two-species -> D* n=" + std::to_string(n) + " n0=" + std::to_string(n0);
            rec.guard(name, [&] {
                rec.lump(name, verify_lumping(build_two_species(WeylKind::D, n, n0),
                                              star_collapse(StarCollapse::CollapseBothEnds),
                                              build_dstar(n, n0, half_params())));
            });
        }

    std::mt19937_64 rng(opt.seed);
    for (int n = 3; n <= std::max(nmax, 5); ++n)
        for (int n0 = 0; n0 <= std::min(n, 2); ++n0) {
            tworow::Params p = random_params(rng);
            std::string name = "two-row top row -> D* n=" + std::to_string(n) + " n0=" + std::to_string(n0);
            rec.guard(name, [&] { rec.lump(name, verify_lumping(tworow::kernel(n, n0, p), top_row(), build_dstar(n, n0, p))); });
        }

    for (WeylKind kind : {WeylKind::CDual, WeylKind::B, WeylKind::D})
        for (int n = kind == WeylKind::CDual ? 1 : 2; n <= nmax; ++n) {
            Dist pi = exact_stationary(build_multi(kind, n));
            for (int k = 1; k <= n; ++k) {
                if (kind == WeylKind::D && k == 1)
                    continue; // two closed classes without zeros
                std::string name = "stationary aggregation " + kind_name(kind) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
                rec.guard(name, [&] {
                    Dist small = exact_stationary(build_two_species(kind, n, k - 1));
                    rec.add(name, same_dist(project_distribution(pi, k_coloring(k)), small));
                });
            }
        }
}

// ---------------------------------------------------------------- two-row

void suite_tworow(Recorder& rec, const SuiteOptions& opt)
{
    for (int n = 3; n <= 6; ++n)
        for (int n0 = 0; n0 <= 2 && n0 <= n; ++n0) {
            std::string name = "extended transition map is a bijection n=" + std::to_string(n) + " n0=" + std::to_string(n0);
            rec.guard(name, [&] {
                auto configs = tworow::enumerate(n, n0);
                std::set<tworow::Config> valid(configs.begin(), configs.end());
                std::set<std::pair<tworow::Config, int>> image;
                bool ok = true;
                std::string detail;
                for (const auto& c : configs)
                    for (int i = 1; i <= n - 1; ++i) {
                        tworow::Move m = tworow::transition(c, i);
                        if (!valid.count(m.result) || m.wall < 1 || m.wall > n - 1) {
                            ok = false;
                            detail = "leaves the state space from " + tworow::to_string(c);
                        }
                        image.insert({m.result, m.wall});
                    }
                if (image.size() != configs.size() * static_cast<std::size_t>(n - 1)) {
                    ok = false;
                    detail = "not injective";
                }
                rec.add(name, ok, detail);
            });
        }

    std::mt19937_64 rng(opt.seed);
    for (int point = 0; point < 3; ++point) {
        tworow::Params p = random_params(rng);
        std::string tag = " at (" + str(p.alpha) + "," + str(p.alpha_star) + "," + str(p.beta) + "," + str(p.beta_star) + ")";
        for (int n = 3; n <= 6; ++n)
            for (int n0 = 0; n0 <= 2 && n0 <= n; ++n0) {
                std::string name = "transfer identity n=" + std::to_string(n) + " n0=" + std::to_string(n0) + tag;
                rec.guard(name, [&] {
                    bool ok = true;
                    std::string detail;
                    for (const auto& c : tworow::enumerate(n, n0))
                        for (int i = 1; i <= n - 1; ++i) {
                            tworow::Move m = tworow::transition(c, i);
                            Rational lhs = tworow::rate(tworow::rule_at(c, i), p) * tworow::q_weight(c, p);
                            Rational rhs = tworow::rate(tworow::rule_at(m.result, m.wall), p) * tworow::q_weight(m.result, p);
                            if (lhs != rhs) {
                                ok = false;
                                detail = tworow::to_string(c) + " wall " + std::to_string(i);
                            }
                        }
                    rec.add(name, ok, detail);
                });
            }
    }

    const std::vector<std::pair<int, int>> sizes{{3, 1}, {4, 0}, {4, 1}, {4, 2}, {5, 1}};
    for (auto [n, n0] : sizes) {
        tworow::Params p = random_params(rng);
        std::string name = "product-form law is stationary n=" + std::to_string(n) + " n0=" + std::to_string(n0);
        rec.guard(name, [&] {
            Kernel k = tworow::kernel(n, n0, p);
            Dist q = tworow::stationary(n, n0, p);
            rec.add(name, same_dist(q, exact_stationary(k)));
            std::string name2 = "top-row projection equals D* law n=" + std::to_string(n) + " n0=" + std::to_string(n0);
            rec.add(name2, same_dist(project_distribution(q, top_row()), exact_stationary(build_dstar(n, n0, p))));
        });
    }
}

// ---------------------------------------------------------------- identities

// Coefficients of t^{n0} / (1 - 4t) * ((1 - sqrt(1 - 4t)) / (2t))^{2 n0 - 2}.
std::vector<Rational> gf_series(int n0, int order)
{
    const int len = order + 2;
    // sqrt(1 + u) with u = -4t, binomial series with rational coefficients.
    std::vector<Rational> root(static_cast<std::size_t>(len), 0);
    Rational coef = 1;
    for (int k = 0; k < len; ++k) {
        root[static_cast<std::size_t>(k)] = coef * power(Rational(-4), k);
        coef = coef * (Rational(1, 2) - k) / (k + 1);
    }
    // (1 - root) / (2t): shift down by one.
    std::vector<Rational> c(static_cast<std::size_t>(order + 1), 0);
    for (int k = 0; k <= order; ++k)
        c[static_cast<std::size_t>(k)] = -root[static_cast<std::size_t>(k + 1)] / 2;
    auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> o(static_cast<std::size_t>(order + 1), 0);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                o[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        return o;
    };
    std::vector<Rational> acc(static_cast<std::size_t>(order + 1), 0);
    for (int k = 0; k <= order; ++k)
        acc[static_cast<std::size_t>(k)] = power(Rational(4), k);
    for (int e = 0; e < 2 * n0 - 2; ++e)
        acc = mul(acc, c);
    std::vector<Rational> out(static_cast<std::size_t>(order + 1), 0);
    for (int k = 0; k + n0 <= order; ++k)
        out[static_cast<std::size_t>(k + n0)] = acc[static_cast<std::size_t>(k)];
    return out;
}

void suite_identities(Recorder& rec, const SuiteOptions& opt)
{
    const int amax = 10;
    const int kmax = opt.k_max;
    {
        bool ok = true;
        for (long n = 0; n <= 2 * amax; ++n)
            for (long k = 0; k <= n; ++k) {
                if (Rational(ballot(n, k)) != frac(n - k + 1, n + 1) * Rational(binomial(n + k, n)))
                    ok = false;
                if (k > 0 && k < n && ballot(n, k) != ballot(n - 1, k) + ballot(n, k - 1))
                    ok = false;
            }
        for (long n = 1; n <= 2 * amax; ++n)
            if (catalan(n) != ballot(n, n) || catalan(n) != ballot(n, n - 1))
                ok = false;
        rec.add("ballot numbers: closed form, recurrence, Catalan diagonals", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (long a = 0; a <= amax; ++a)
            for (long b = 0; b <= a; ++b)
                for (long j = 0; j <= b; ++j) {
                    BigInt s = 0;
                    for (long i = j; i <= b; ++i)
                        s += ballot(a - i, b - i) * ballot(i, i - j);
                    if (s != ballot(a + 1, b - j)) {
                        ok = false;
                        detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " j=" + std::to_string(j);
                    }
                }
        rec.add("ballot convolution sum_i C^{a-i}_{b-i} C^i_{i-j} = C^{a+1}_{b-j}", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (long n = 0; n <= amax; ++n)
            for (long b = 0; b <= n; ++b)
                for (long d = 0; d <= b; ++d)
                    for (long a = 0; a <= b - d; ++a) {
                        BigInt s = 0;
                        for (long i = 0; i <= n - b; ++i)
                            s += ballot(i + d, i) * binomial(2 * n - 2 * i - d - a, n - b - i);
                        if (s != binomial(2 * n - a + 1, n - b)) {
                            ok = false;
                            detail = "n=" + std::to_string(n) + " b=" + std::to_string(b) + " d=" + std::to_string(d) + " a=" + std::to_string(a);
                        }
                    }
        rec.add("ballot-binomial sum = binom(2n-a+1, n-b)", ok, detail);
    }
    {
        std::mt19937_64 rng(opt.seed);
        bool ok = true;
        std::string detail;
        for (int point = 0; point < 3; ++point) {
            Rational a = random_rate(rng) * 3, b = random_rate(rng) * 2;
            for (int k = 0; k <= std::min(kmax, 8); ++k)
                if (v_poly(k, a, b) != enumerate_bicolored_motzkin(k, a, b)) {
                    ok = false;
                    detail = "k=" + std::to_string(k) + " alpha=" + str(a) + " beta=" + str(b);
                }
        }
        Rational a = frac(2, 3), b = frac(5, 7);
        Rational v2 = power(a, -2) + power(b, -2) + 1 / (a * b) + 1 / a + 1 / b;
        if (v_poly(2, a, b) != v2)
            ok = false;
        for (int k = 0; k <= kmax; ++k)
            if (v_poly(k, 1, 1) != Rational(catalan(k + 1)))
                ok = false;
        rec.add("V_k double sum equals bicolored Motzkin enumeration; V_k(1,1) = Catalan(k+1)", ok, detail);
    }
    {
        bool ok = true;
        for (int k = 0; k <= kmax; ++k) {
            if (m_poly(k, frac(1, 2)) != Rational(binomial(2 * k + 1, k)))
                ok = false;
            if (v_poly(k, frac(1, 2), frac(1, 2)) != power(Rational(4), k))
                ok = false;
            if (m_poly(k, frac(3, 5)) != v_poly(k, 1, frac(3, 5)))
                ok = false;
        }
        rec.add("M_k(1/2) = binom(2k+1,k), V_k(1/2,1/2) = 4^k", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int k = 0; k <= std::min(kmax, 10); ++k)
            for (int n0 = 0; n0 <= k; ++n0)
                if (tworow::count_segments(k, n0) != ballot_ext(k + n0 + 1, k - n0)) {
                    ok = false;
                    detail = "k=" + std::to_string(k) + " n0=" + std::to_string(n0);
                }
        rec.add("two-row strips of k columns with n0 zeros number C^{k+n0+1}_{k-n0}", ok, detail);
    }
    for (int n0 : {2, 3}) {
        std::vector<Rational> series = gf_series(n0, kmax);
        std::vector<BigInt> direct = z_d_series(n0, kmax);
        bool ok = true;
        for (int n = 0; n <= kmax; ++n) {
            Rational want = n >= n0 ? Rational(z_d(std::max(n, 2), n0)) : Rational(0);
            if (series[static_cast<std::size_t>(n)] != want || Rational(direct[static_cast<std::size_t>(n)]) != want)
                ok = false;
        }
        rec.add("generating function of Z^D_{n," + std::to_string(n0) + "} to order t^" + std::to_string(kmax), ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= amax; ++n)
            for (int n0 = 0; n0 <= n; ++n0) {
                if (z_semiperm(n, n0, 1, 1) != Rational(ballot_ext(n + n0 + 1, n - n0)))
                    ok = false;
                Rational z = z_semiperm(n, n0, 1, 1);
                Rational eps(1, 1000000);
                for (Rational beta : {Rational(1 + eps), Rational(1 - eps)})
                    if (abs(z_semiperm(n, n0, 1, beta) - z) > z / 1000)
                    ok = false;
            }
        rec.add("semipermeable partition function at alpha = beta = 1 and branch continuity", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= amax; ++n)
            for (int n0 = 0; n0 < n; ++n0)
                if (semiperm_density(n, n0, n, 1, 1) != frac((n - n0) * (n + n0 + 2), 2 * n * (2 * n + 1)))
                    ok = false;
        rec.add("semipermeable last-site density at alpha = beta = 1", ok);
    }
}

// ---------------------------------------------------------------- conjecture

void suite_conjecture(Recorder& rec, const SuiteOptions& opt)
{
    for (int n = 4; n <= std::max(4, opt.n_max); ++n) {
        Dist pi = exact_stationary(build_multi(WeylKind::B, n));
        Dist pairs = project_distribution(pi, last_two());
        int covered = 0;
        bool ok = true;
        std::string detail;
        for (int x = -n; x <= n; ++x)
            for (int y = -n; y <= n; ++y) {
                if (x == 0 || y == 0)
                    continue;
                auto f = conjecture_b_value(n, x, y);
                if (!f)
                    continue;
                ++covered;
                if (pairs[State{x, y}] != *f) {
                    ok = false;
                    detail = "<" + std::to_string(x) + "," + std::to_string(y) + ">: exact " + str(pairs[State{x, y}]) +
                             ", conjectured " + str(*f);
                }
            }
        rec.add("conjecture (cases 1-5) holds exactly, B n=" + std::to_string(n) + ", " + std::to_string(covered) + " cells", ok, detail);
        bool sym = true;
        for (int x = -n; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (x != 0 && pairs[State{x, y}] != pairs[State{x, -y}])
                    sym = false;
        rec.add("<i,j> = <i,-j> at the last two sites, B n=" + std::to_string(n), sym);
    }
}

// ---------------------------------------------------------------- tables

bool direction_rows_match(WeylKind kind, const std::vector<reference::DirectionRow>& rows, std::string& detail)
{
    bool ok = true;
    for (const auto& row : rows) {
        std::vector<Rational> c = limdir_closed(kind, row.n);
        for (std::size_t i = 0; i < row.c.size(); ++i)
            if (c.size() != row.c.size() || c[i] != parse_rational(std::string(row.c[i]))) {
                ok = false;
                detail = "n=" + std::to_string(row.n) + " i=" + std::to_string(i + 1);
            }
    }
    return ok;
}

void suite_tables(Recorder& rec, const SuiteOptions&)
{
    rec.guard("table: <i,-j> in the B chain, n = 4", [&] {
        Dist pairs = project_distribution(exact_stationary(build_multi(WeylKind::B, 4)), last_two());
        bool ok = true;
        std::string detail;
        for (std::size_t r = 0; r < reference::kBPairRows.size(); ++r)
            for (std::size_t c = 0; c < reference::kBPairCols.size(); ++c) {
                int i = reference::kBPairRows[r], j = reference::kBPairCols[c];
                Rational want = parse_rational(std::string(reference::kBPairN4[r][c]));
                if (pairs[State{i, -j}] != want) {
                    ok = false;
                    detail = "<" + std::to_string(i) + ",-" + std::to_string(j) + ">";
                }
            }
        rec.add("table: <i,-j> in the B chain, n = 4", ok, detail);
    });
    std::string detail;
    rec.guard("table: D direction n = 2..6", [&] {
        bool ok = direction_rows_match(WeylKind::D, reference::kDirectionD, detail);
        rec.add("table: D direction n = 2..6", ok, detail);
    });
    rec.guard("table: Bdual direction n = 2..4", [&] {
        bool ok = direction_rows_match(WeylKind::BDual, reference::kDirectionBDual, detail);
        rec.add("table: Bdual direction n = 2..4", ok, detail);
    });
    rec.guard("table: C direction n = 1..4", [&] {
        bool ok = direction_rows_match(WeylKind::C, reference::kDirectionC, detail);
        rec.add("table: C direction n = 1..4", ok, detail);
    });
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"lumping", "tworow", "identities", "conjecture-b", "tables"};
    return names;
}

std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& opt)
{
    Recorder rec;
    if (suite == "lumping")
        suite_lumping(rec, opt);
    else if (suite == "tworow")
        suite_tworow(rec, opt);
    else if (suite == "identities")
        suite_identities(rec, opt);
    else if (suite == "conjecture-b")
        suite_conjecture(rec, opt);
    else if (suite == "tables")
        suite_tables(rec, opt);
    else
        throw InvalidParameter("unknown suite " + suite);
    return rec.out;
}

bool all_ok(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.ok)
            return false;
    return true;
}

} // namespace wt
