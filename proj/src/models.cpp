#include "weyltasep/models.hpp"

#include "weyltasep/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace wt {

namespace {

// Pattern letters for a pair of sites holding +-i and +-j with 1 <= i < j.
enum Sym { I, NI, J, NJ };

struct PairRule {
    Sym a, b;
    Sym x, y;
};

using PairTable = std::vector<PairRule>;

const PairTable kLastSort = {{J, I, I, J}, {J, NI, NI, J}, {I, NJ, NJ, I}, {NI, NJ, NJ, NI}};
const PairTable kLastTheta = {{J, I, NI, NJ}, {J, NI, I, NJ}, {I, J, NJ, NI}, {NI, J, NJ, I}};
const PairTable kFirstSwapNegate = {{NI, NJ, J, I}, {I, NJ, J, NI}, {NJ, NI, I, J}, {NJ, I, NI, J}};
const PairTable kFirstSort = {{NI, NJ, NJ, NI}, {I, NJ, NJ, I}, {J, NI, NI, J}, {J, I, I, J}};

Sym classify(int v, int i)
{
    if (std::abs(v) == i)
        return v > 0 ? I : NI;
    return v > 0 ? J : NJ;
}

int realize(Sym s, int i, int j)
{
    switch (s) {
    case I: return i;
    case NI: return -i;
    case J: return j;
    case NJ: return -j;
    }
    return 0;
}

bool apply_pair_table(const PairTable& table, int& u, int& v)
{
    int i = std::min(std::abs(u), std::abs(v));
    int j = std::max(std::abs(u), std::abs(v));
    Sym a = classify(u, i), b = classify(v, i);
    for (const PairRule& r : table)
        if (r.a == a && r.b == b) {
            u = realize(r.x, i, j);
            v = realize(r.y, i, j);
            return true;
        }
    return false;
}

// A literal rule on consecutive sites for words with a small alphabet.
struct WordRule {
    int edge;
    std::vector<int> from;
    std::vector<int> to;
    int offset; // first site touched, relative to the edge's left site
    Rational rate;
};

void require_two_species_kind(WeylKind kind)
{
    if (kind != WeylKind::CDual && kind != WeylKind::B && kind != WeylKind::D)
        throw NotImplemented("chain for kind " + kind_name(kind) + " is not defined");
}

} // namespace

Rational edge_probability(WeylKind kind, int n, int edge)
{
    RootData rd = root_data(kind, n);
    int total = std::accumulate(rd.kac.begin(), rd.kac.end(), 0);
    Rational p(rd.kac[static_cast<std::size_t>(edge)], total);
    p.canonicalize();
    return p;
}

std::vector<State> multi_states(WeylKind kind, int n)
{
    require_two_species_kind(kind);
    std::vector<State> out;
    for (const SignedPerm& w : enumerate_group(kind, n))
        out.push_back(w);
    return out;
}

Kernel build_multi(WeylKind kind, int n)
{
    require_two_species_kind(kind);
    validate_kind(kind, n);
    if (kind == WeylKind::B && n < 2)
        throw InvalidKind("B chain needs n >= 2");
    Kernel k(multi_states(kind, n));
    for (std::size_t s = 0; s < k.size(); ++s) {
        const State& w = k.state(s);
        for (int edge = 0; edge <= n; ++edge) {
            Rational p = edge_probability(kind, n, edge);
            State t = w;
            bool moved = false;
            auto sort_at = [&](int site) {
                int& u = t[static_cast<std::size_t>(site - 1)];
                int& v = t[static_cast<std::size_t>(site)];
                if (u > v) {
                    std::swap(u, v);
                    moved = true;
                }
            };
            auto table_at = [&](const PairTable& table, int site) {
                moved = apply_pair_table(table, t[static_cast<std::size_t>(site - 1)], t[static_cast<std::size_t>(site)]);
            };
            switch (kind) {
            case WeylKind::CDual:
                if (edge == 0) {
                    if (t[0] < 0) {
                        t[0] = -t[0];
                        moved = true;
                    }
                } else if (edge == n) {
                    if (t.back() > 0) {
                        t.back() = -t.back();
                        moved = true;
                    }
                } else {
                    sort_at(edge);
                }
                break;
            case WeylKind::B:
                if (edge == 0) {
                    if (t[0] < 0) {
                        t[0] = -t[0];
                        moved = true;
                    }
                } else if (edge == n) {
                    table_at(kLastTheta, n - 1);
                } else if (edge == n - 1) {
                    table_at(kLastSort, n - 1);
                } else {
                    sort_at(edge);
                }
                break;
            case WeylKind::D:
                if (edge == 0) {
                    table_at(kFirstSwapNegate, 1);
                } else if (edge == n) {
                    table_at(kLastTheta, n - 1);
                } else if (edge == n - 1) {
                    table_at(kLastSort, n - 1);
                } else if (edge == 1) {
                    table_at(kFirstSort, 1);
                } else {
                    sort_at(edge);
                }
                break;
            default:
                break;
            }
            if (moved)
                k.add(s, t, p);
        }
    }
    k.close_rows();
    return k;
}

std::vector<State> two_species_states(int n, int n0)
{
    if (n < 1 || n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n and n >= 1");
    std::vector<State> out;
    State w(static_cast<std::size_t>(n), -1);
    std::function<void(int, int)> rec = [&](int pos, int zeros) {
        if (pos == n) {
            if (zeros == n0)
                out.push_back(w);
            return;
        }
        for (int v : {-1, 0, 1}) {
            if (v == 0 && zeros == n0)
                continue;
            if (n - pos - 1 < n0 - zeros - (v == 0 ? 1 : 0))
                continue;
            w[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, zeros + (v == 0));
        }
    };
    rec(0, 0);
    return out;
}

namespace {

Kernel build_from_rules(std::vector<State> states, int n, const std::vector<Rational>& edge_p,
                        const std::vector<WordRule>& rules)
{
    Kernel k(std::move(states));
    for (std::size_t s = 0; s < k.size(); ++s) {
        const State& w = k.state(s);
        for (const WordRule& r : rules) {
            int first = r.edge + r.offset; // 1-based
            int width = static_cast<int>(r.from.size());
            if (first < 1 || first + width - 1 > n)
                continue;
            bool match = true;
            for (int d = 0; d < width; ++d)
                if (w[static_cast<std::size_t>(first - 1 + d)] != r.from[static_cast<std::size_t>(d)]) {
                    match = false;
                    break;
                }
            if (!match)
                continue;
            State t = w;
            for (int d = 0; d < width; ++d)
                t[static_cast<std::size_t>(first - 1 + d)] = r.to[static_cast<std::size_t>(d)];
            k.add(s, t, edge_p[static_cast<std::size_t>(r.edge)] * r.rate);
        }
    }
    k.close_rows();
    return k;
}

void add_bulk(std::vector<WordRule>& rules, int edge)
{
    rules.push_back({edge, {1, -1}, {-1, 1}, 0, 1});
    rules.push_back({edge, {1, 0}, {0, 1}, 0, 1});
    rules.push_back({edge, {0, -1}, {-1, 0}, 0, 1});
}

void add_last_pair(std::vector<WordRule>& rules, int n)
{
    // sort edge n-1
    rules.push_back({n - 1, {1, -1}, {-1, 1}, 0, 1});
    rules.push_back({n - 1, {0, -1}, {-1, 0}, 0, 1});
    rules.push_back({n - 1, {1, 0}, {0, 1}, 0, 1});
    // swap-and-negate edge n, acting on sites n-1, n
    rules.push_back({n, {1, 1}, {-1, -1}, -1, 1});
    rules.push_back({n, {0, 1}, {-1, 0}, -1, 1});
    rules.push_back({n, {1, 0}, {0, -1}, -1, 1});
}

} // namespace

Kernel build_two_species(WeylKind kind, int n, int n0)
{
    require_two_species_kind(kind);
    validate_kind(kind, n);
    if ((kind == WeylKind::B || kind == WeylKind::D) && n < 2)
        throw InvalidKind("chain needs n >= 2");
    std::vector<Rational> edge_p;
    for (int e = 0; e <= n; ++e)
        edge_p.push_back(edge_probability(kind, n, e));
    std::vector<WordRule> rules;
    switch (kind) {
    case WeylKind::CDual:
        rules.push_back({0, {-1}, {1}, 1, 1});
        for (int e = 1; e <= n - 1; ++e)
            add_bulk(rules, e);
        rules.push_back({n, {1}, {-1}, 0, 1});
        break;
    case WeylKind::B:
        rules.push_back({0, {-1}, {1}, 1, 1});
        for (int e = 1; e <= n - 2; ++e)
            add_bulk(rules, e);
        add_last_pair(rules, n);
        break;
    case WeylKind::D:
        // swap-and-negate edge 0 on sites 1, 2
        rules.push_back({0, {-1, -1}, {1, 1}, 1, 1});
        rules.push_back({0, {-1, 0}, {0, 1}, 1, 1});
        rules.push_back({0, {0, -1}, {1, 0}, 1, 1});
        for (int e = 1; e <= n - 2; ++e)
            add_bulk(rules, e);
        add_last_pair(rules, n);
        break;
    default:
        break;
    }
    return build_from_rules(two_species_states(n, n0), n, edge_p, rules);
}

std::vector<State> dstar_states(int n, int n0)
{
    if (n < 3)
        throw InvalidCounts("D* chain needs n >= 3");
    if (n0 < 0 || n0 > n)
        throw InvalidCounts("need 0 <= n0 <= n");
    std::vector<State> out;
    for (int a : {0, kStar})
        for (int b : {0, kStar}) {
            int ends = (a == 0) + (b == 0);
            if (ends > n0)
                continue;
            int inner = n0 - ends;
            if (inner > n - 2)
                continue;
            for (const State& mid : two_species_states(n - 2, inner)) {
                State w;
                w.push_back(a);
                w.insert(w.end(), mid.begin(), mid.end());
                w.push_back(b);
                out.push_back(w);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

Kernel build_dstar(int n, int n0, const DStarParams& params)
{
    for (const Rational* r : {&params.alpha, &params.alpha_star, &params.beta, &params.beta_star})
        if (*r < 0 || *r > 1)
            throw InvalidParameter("D* rates must lie in [0, 1]");
    std::vector<Rational> edge_p(static_cast<std::size_t>(n), Rational(1, n - 1));
    edge_p[0] = 0;
    const int S = kStar;
    std::vector<WordRule> rules;
    rules.push_back({1, {S, -1}, {S, 1}, 0, params.alpha});
    rules.push_back({1, {S, 0}, {0, 1}, 0, params.alpha_star});
    rules.push_back({1, {0, -1}, {S, 0}, 0, 1});
    for (int e = 2; e <= n - 2; ++e)
        add_bulk(rules, e);
    rules.push_back({n - 1, {1, S}, {-1, S}, 0, params.beta});
    rules.push_back({n - 1, {0, S}, {-1, 0}, 0, params.beta_star});
    rules.push_back({n - 1, {1, 0}, {0, S}, 0, 1});
    return build_from_rules(dstar_states(n, n0), n, edge_p, rules);
}

State reverse_negate(const State& s)
{
    State out(s.rbegin(), s.rend());
    for (int& v : out)
        if (v != kStar)
            v = -v;
    return out;
}

} // namespace wt
