#include "weyltasep/weyl.hpp"

#include "weyltasep/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace wt {

WeylKind parse_kind(const std::string& name)
{
    if (name == "B") return WeylKind::B;
    if (name == "C") return WeylKind::C;
    if (name == "D") return WeylKind::D;
    if (name == "Cdual" || name == "CDual" || name == "Ccheck" || name == "Č") return WeylKind::CDual;
    if (name == "Bdual" || name == "BDual" || name == "Bcheck" || name == "B̌") return WeylKind::BDual;
    throw InvalidKind("unknown kind '" + name + "'");
}

std::string kind_name(WeylKind kind)
{
    switch (kind) {
    case WeylKind::B: return "B";
    case WeylKind::C: return "C";
    case WeylKind::D: return "D";
    case WeylKind::CDual: return "Cdual";
    case WeylKind::BDual: return "Bdual";
    }
    return "?";
}

void validate_kind(WeylKind kind, int n)
{
    int lo = (kind == WeylKind::D || kind == WeylKind::BDual) ? 2 : 1;
    if (n < lo)
        throw InvalidKind(kind_name(kind) + " needs n >= " + std::to_string(lo) + ", got " + std::to_string(n));
}

bool is_signed_perm(const SignedPerm& w)
{
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w) {
        int a = std::abs(v);
        if (a == 0 || a > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(a)])
            return false;
        seen[static_cast<std::size_t>(a)] = true;
    }
    return true;
}

void require_signed_perm(const SignedPerm& w)
{
    if (!is_signed_perm(w))
        throw NotSignedPerm("window is not a signed permutation");
}

static bool uses_even_signs(WeylKind kind) { return kind == WeylKind::D; }

bool in_group(WeylKind kind, const SignedPerm& w)
{
    if (!is_signed_perm(w))
        return false;
    if (!uses_even_signs(kind))
        return true;
    return std::count_if(w.begin(), w.end(), [](int v) { return v < 0; }) % 2 == 0;
}

SignedPerm identity_perm(int n)
{
    SignedPerm w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

static int eval(const SignedPerm& w, int i)
{
    return i > 0 ? w[static_cast<std::size_t>(i - 1)] : -w[static_cast<std::size_t>(-i - 1)];
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b)
{
    require_signed_perm(a);
    require_signed_perm(b);
    if (a.size() != b.size())
        throw NotSignedPerm("rank mismatch in compose");
    SignedPerm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = eval(a, b[i]);
    return out;
}

SignedPerm inverse(const SignedPerm& w)
{
    require_signed_perm(w);
    SignedPerm out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int v = w[i];
        int pos = static_cast<int>(i) + 1;
        if (v > 0)
            out[static_cast<std::size_t>(v - 1)] = pos;
        else
            out[static_cast<std::size_t>(-v - 1)] = -pos;
    }
    return out;
}

static IntVector unit(int n, int i, int coeff = 1)
{
    IntVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = coeff;
    return v;
}

static IntVector add(IntVector a, const IntVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

static IntVector neg(IntVector a)
{
    for (int& x : a)
        x = -x;
    return a;
}

static bool b_roots(WeylKind kind) { return kind == WeylKind::B || kind == WeylKind::BDual; }
static bool c_roots(WeylKind kind) { return kind == WeylKind::C || kind == WeylKind::CDual; }

RootData root_data(WeylKind kind, int n)
{
    validate_kind(kind, n);
    RootData rd{kind, n, {}, {}, {}, {}};
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            rd.positive_roots.push_back(add(unit(n, j), neg(unit(n, i))));
            rd.positive_roots.push_back(add(unit(n, i), unit(n, j)));
        }
    if (b_roots(kind))
        for (int i = 1; i <= n; ++i)
            rd.positive_roots.push_back(unit(n, i));
    if (c_roots(kind))
        for (int i = 1; i <= n; ++i)
            rd.positive_roots.push_back(unit(n, i, 2));

    if (b_roots(kind))
        rd.simple_roots.push_back(unit(n, 1));
    else if (c_roots(kind))
        rd.simple_roots.push_back(unit(n, 1, 2));
    else
        rd.simple_roots.push_back(add(unit(n, 1), unit(n, 2)));
    for (int i = 1; i < n; ++i)
        rd.simple_roots.push_back(add(unit(n, i + 1), neg(unit(n, i))));

    if (c_roots(kind))
        rd.theta = unit(n, n, 2);
    else if (n == 1)
        rd.theta = unit(n, 1);
    else
        rd.theta = add(unit(n, n - 1), unit(n, n));

    std::vector<int>& a = rd.kac;
    a.assign(static_cast<std::size_t>(n + 1), 2);
    auto set = [&](int idx, int v) {
        if (idx >= 0 && idx <= n)
            a[static_cast<std::size_t>(idx)] = v;
    };
    switch (kind) {
    case WeylKind::B:
        set(n - 1, 1);
        set(n, 1);
        if (n == 1)
            set(0, 1);
        break;
    case WeylKind::C:
        set(0, 1);
        set(n, 1);
        break;
    case WeylKind::CDual:
        std::fill(a.begin(), a.end(), 1);
        break;
    case WeylKind::BDual:
        set(0, 1);
        set(n - 1, 1);
        set(n, 1);
        break;
    case WeylKind::D:
        set(0, 1);
        set(1, 1);
        set(n - 1, 1);
        set(n, 1);
        break;
    }
    return rd;
}

bool is_positive_root(const IntVector& v)
{
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it != 0)
            return *it > 0;
    return false;
}

int length(WeylKind kind, const SignedPerm& w)
{
    int n = static_cast<int>(w.size());
    if (!in_group(kind, w))
        throw NotSignedPerm("not an element of the Weyl group of type " + kind_name(kind));
    RootData rd = root_data(kind, n);
    int count = 0;
    for (const IntVector& alpha : rd.positive_roots)
        if (!is_positive_root(act(w, alpha)))
            ++count;
    return count;
}

SignedPerm apply_generator(WeylKind kind, const SignedPerm& w, int g)
{
    int n = static_cast<int>(w.size());
    validate_kind(kind, n);
    require_signed_perm(w);
    if (g < 0 || g > n)
        throw GeneratorOutOfRange("generator " + std::to_string(g) + " not in 0.." + std::to_string(n));
    SignedPerm out = w;
    auto swap_negate = [&](std::size_t p, std::size_t q) {
        std::swap(out[p], out[q]);
        out[p] = -out[p];
        out[q] = -out[q];
    };
    if (g >= 1 && g <= n - 1) {
        std::swap(out[static_cast<std::size_t>(g - 1)], out[static_cast<std::size_t>(g)]);
    } else if (g == 0) {
        if (kind == WeylKind::D)
            swap_negate(0, 1);
        else
            out[0] = -out[0];
    } else { // r_theta
        if (c_roots(kind) || n == 1)
            out[static_cast<std::size_t>(n - 1)] = -out[static_cast<std::size_t>(n - 1)];
        else
            swap_negate(static_cast<std::size_t>(n - 2), static_cast<std::size_t>(n - 1));
    }
    return out;
}

bool theta_raises(WeylKind kind, const SignedPerm& w)
{
    int n = static_cast<int>(w.size());
    validate_kind(kind, n);
    require_signed_perm(w);
    int last = w.back();
    if (c_roots(kind) || n == 1)
        return last > 0;
    int prev = w[static_cast<std::size_t>(n - 2)];
    return std::abs(prev) > std::abs(last) ? prev > 0 : last > 0;
}

IntVector inverse_act_theta(WeylKind kind, const SignedPerm& w)
{
    int n = static_cast<int>(w.size());
    validate_kind(kind, n);
    require_signed_perm(w);
    IntVector out(static_cast<std::size_t>(n), 0);
    auto bump = [&](int signed_index, int coeff) {
        int a = std::abs(signed_index);
        out[static_cast<std::size_t>(a - 1)] += signed_index > 0 ? coeff : -coeff;
    };
    if (c_roots(kind)) {
        bump(w.back(), 2);
    } else if (n == 1) {
        bump(w.back(), 1);
    } else {
        bump(w[static_cast<std::size_t>(n - 2)], 1);
        bump(w.back(), 1);
    }
    return out;
}

IntVector positive_root_sum(WeylKind kind, int n)
{
    validate_kind(kind, n);
    IntVector out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int v = c_roots(kind) ? 2 * i : b_roots(kind) ? 2 * i - 1 : 2 * i - 2;
        out[static_cast<std::size_t>(i - 1)] = v;
    }
    return out;
}

std::vector<SignedPerm> enumerate_group(WeylKind kind, int n)
{
    validate_kind(kind, n);
    std::vector<SignedPerm> out;
    SignedPerm base = identity_perm(n);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (uses_even_signs(kind) && __builtin_popcount(mask) % 2 != 0)
                continue;
            SignedPerm w = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i))
                    w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.push_back(w);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wt
