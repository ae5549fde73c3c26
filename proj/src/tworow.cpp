#include "weyltasep/tworow.hpp"

#include "weyltasep/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace wt::tworow {

namespace {

std::string letter(int v)
{
    if (v == kStar)
        return "*";
    return std::to_string(v);
}

bool is_particle(const Column& c) { return (c.top == 1 || c.top == -1) && (c.bottom == 1 || c.bottom == -1); }
bool is_border(const Column& c) { return c == kZero || c == kStarCol; }

} // namespace

std::string to_string(const Config& c)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            os << ' ';
        if (c[i] == kZero)
            os << '0';
        else if (c[i] == kStarCol)
            os << '*';
        else
            os << letter(c[i].top) << '/' << letter(c[i].bottom);
    }
    return os.str();
}

Config parse(const std::string& text)
{
    std::istringstream is(text);
    std::string tok;
    Config out;
    while (is >> tok) {
        if (tok == "0") {
            out.push_back(kZero);
        } else if (tok == "*") {
            out.push_back(kStarCol);
        } else {
            auto slash = tok.find('/');
            if (slash == std::string::npos)
                throw InvalidConfig("bad column '" + tok + "'");
            try {
                out.push_back({std::stoi(tok.substr(0, slash)), std::stoi(tok.substr(slash + 1))});
            } catch (const std::exception&) {
                throw InvalidConfig("bad column '" + tok + "'");
            }
        }
    }
    return out;
}

State encode(const Config& c)
{
    State s(2 * c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        s[i] = c[i].top;
        s[c.size() + i] = c[i].bottom;
    }
    return s;
}

Config decode(const State& s)
{
    if (s.size() % 2 != 0)
        throw InvalidConfig("odd encoding length");
    std::size_t n = s.size() / 2;
    Config c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = {s[i], s[n + i]};
    return c;
}

static std::string invalid_reason(const Config& c)
{
    if (c.empty())
        return "empty configuration";
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Column& col = c[i];
        bool end = i == 0 || i + 1 == c.size();
        if (end) {
            if (!is_border(col))
                return "end column must be 0 or *";
            continue;
        }
        if (col == kStarCol)
            return "* column away from the ends";
        if (col != kZero && !is_particle(col))
            return "column mixes 0 or * with a particle";
    }
    int depth = 0;
    for (const Column& col : c) {
        if (col == kZero || col == kStarCol) {
            if (depth != 0)
                return "unbalanced segment";
        } else if (col == kUp) {
            ++depth;
        } else if (col == kDown) {
            if (--depth < 0)
                return "prefix with more -1/-1 than 1/1 columns";
        }
    }
    if (depth != 0)
        return "unbalanced segment";
    return {};
}

bool is_valid(const Config& c) { return invalid_reason(c).empty(); }

void validate(const Config& c)
{
    std::string why = invalid_reason(c);
    if (!why.empty())
        throw InvalidConfig(why + ": " + to_string(c));
}

std::vector<Config> enumerate(int n, int n0)
{
    if (n < 1 || n0 < 0 || n0 > n)
        throw InvalidCounts("need n >= 1 and 0 <= n0 <= n");
    std::vector<Config> out;
    if (n == 1) {
        out.push_back({n0 == 1 ? kZero : kStarCol});
        return out;
    }
    const Column interior[] = {kDown, kMinusPlus, kZero, kPlusMinus, kUp};
    Config cur(static_cast<std::size_t>(n));
    std::function<void(int, int, int)> rec = [&](int pos, int depth, int zeros) {
        if (pos == n - 1) {
            if (depth != 0)
                return;
            for (const Column& last : {kStarCol, kZero}) {
                int z = zeros + (last == kZero);
                if (z != n0)
                    continue;
                cur[static_cast<std::size_t>(pos)] = last;
                out.push_back(cur);
            }
            return;
        }
        int remaining = n - 1 - pos; // interior columns left including this one
        for (const Column& col : interior) {
            int d = depth + (col == kUp) - (col == kDown);
            int z = zeros + (col == kZero);
            if (d < 0 || (col == kZero && depth != 0) || z > n0)
                continue;
            if (d > remaining - 1)
                continue;
            cur[static_cast<std::size_t>(pos)] = col;
            rec(pos + 1, d, z);
        }
    };
    for (const Column& first : {kStarCol, kZero}) {
        cur[0] = first;
        rec(1, 0, first == kZero ? 1 : 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_segments(int k, int n0)
{
    if (k < 0 || n0 < 0)
        throw InvalidCounts("negative size");
    // ways[zeros][depth]
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(n0 + 1),
                                          std::vector<BigInt>(static_cast<std::size_t>(k + 2), 0));
    ways[0][0] = 1;
    for (int step = 0; step < k; ++step) {
        auto next = ways;
        for (auto& row : next)
            std::fill(row.begin(), row.end(), BigInt(0));
        for (int z = 0; z <= n0; ++z)
            for (int d = 0; d <= k; ++d) {
                const BigInt& w = ways[static_cast<std::size_t>(z)][static_cast<std::size_t>(d)];
                if (w == 0)
                    continue;
                next[static_cast<std::size_t>(z)][static_cast<std::size_t>(d)] += 2 * w; // 1/-1, -1/1
                next[static_cast<std::size_t>(z)][static_cast<std::size_t>(d + 1)] += w;
                if (d > 0)
                    next[static_cast<std::size_t>(z)][static_cast<std::size_t>(d - 1)] += w;
                if (d == 0 && z < n0)
                    next[static_cast<std::size_t>(z + 1)][0] += w;
            }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(n0)][0];
}

Labels count_labels(const Config& c)
{
    Labels L;
    const long n = static_cast<long>(c.size());
    long leftmost = -1, rightmost = -1;
    for (long i = 0; i < n; ++i)
        if (c[static_cast<std::size_t>(i)] == kZero) {
            if (leftmost < 0)
                leftmost = i;
            rightmost = i;
        }
    const bool zeros = leftmost >= 0;
    int depth = 0;
    bool seen_zprime = false;
    for (long i = 0; i < n; ++i) {
        const Column& col = c[static_cast<std::size_t>(i)];
        // "in a block" includes the delimiting 1/1 and -1/-1 columns,
        // "inside a block" does not.
        bool in_block, inside;
        if (col == kUp) {
            in_block = true;
            inside = depth > 0;
            ++depth;
        } else if (col == kDown) {
            --depth;
            in_block = true;
            inside = depth > 0;
        } else {
            in_block = inside = depth > 0;
        }
        bool left_of_zeros = !zeros || i < leftmost;
        bool right_of_zeros = !zeros || i > rightmost;
        if (col.bottom == -1 && !in_block) {
            if (right_of_zeros)
                ++L.z;
            if (left_of_zeros) {
                ++L.z_prime;
                seen_zprime = true;
                continue;
            }
        }
        if (col.bottom == 1 && !inside && left_of_zeros && !seen_zprime)
            ++L.y;
    }
    if (n > 0 && c.front() == kStarCol)
        L.y_star = 1;
    if (n > 0 && c.back() == kStarCol)
        L.z_star = 1;
    return L;
}

Labels label_counts(const Config& c)
{
    validate(c);
    return count_labels(c);
}

Rational q_weight(const Config& c, const Params& p)
{
    Labels L = label_counts(c);
    Rational q = 1;
    auto factor = [&](const Rational& param, int count, bool ignorable, const char* name) {
        if (count == 0)
            return;
        if (param == 0) {
            if (ignorable)
                return;
            throw ZeroParameter(std::string(name) + " is zero but labelled in " + to_string(c));
        }
        q /= power(param, count);
    };
    factor(p.alpha, L.y, false, "alpha");
    factor(p.alpha_star, L.y_star, true, "alpha*");
    factor(p.beta, L.z, false, "beta");
    factor(p.beta_star, L.z_star, true, "beta*");
    return q;
}

std::string rule_name(Rule r)
{
    switch (r) {
    case Rule::None: return "none";
    case Rule::B1: return "B1";
    case Rule::B2: return "B2";
    case Rule::L1: return "L1";
    case Rule::L2: return "L2";
    case Rule::L3: return "L3";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    }
    return "?";
}

Rule rule_at(const Config& c, int wall)
{
    const int n = static_cast<int>(c.size());
    if (n < 3)
        throw InvalidConfig("local moves need at least 3 columns");
    if (wall < 1 || wall > n - 1)
        throw RangeError("wall " + std::to_string(wall) + " out of range");
    const Column& a = c[static_cast<std::size_t>(wall - 1)];
    const Column& b = c[static_cast<std::size_t>(wall)];
    if (wall == 1) {
        if (a == kStarCol && b == kMinusPlus)
            return Rule::L1;
        if (a == kStarCol && b == kZero)
            return Rule::L2;
        if (a == kZero && b == kMinusPlus)
            return Rule::L3;
        return Rule::None;
    }
    if (wall == n - 1) {
        if (a == kPlusMinus && b == kStarCol)
            return Rule::R1;
        if (a == kZero && b == kStarCol)
            return Rule::R2;
        if (a == kPlusMinus && b == kZero)
            return Rule::R3;
        return Rule::None;
    }
    if (b == kMinusPlus && (a.top == 1 || a == kZero))
        return Rule::B1;
    if ((a.top == 1 && b == kDown) || (a == kPlusMinus && b == kZero))
        return Rule::B2;
    return Rule::None;
}

Rational rate(Rule r, const Params& p)
{
    switch (r) {
    case Rule::None: return 0;
    case Rule::L1: return p.alpha;
    case Rule::L2: return p.alpha_star;
    case Rule::R1: return p.beta;
    case Rule::R2: return p.beta_star;
    default: return 1;
    }
}

namespace {

// Leftmost wall j < i with only -1 on the top row strictly between j and wall i-1.
int find_j1(const Config& c, int i)
{
    int col = i - 1; // 1-based column just left of wall i-1 ... scanned leftwards
    while (col >= 1 && c[static_cast<std::size_t>(col - 1)].top == -1)
        --col;
    return col;
}

// Rightmost wall j > i with only 1 on the top row between walls i+1 and j.
int find_j2(const Config& c, int i)
{
    const int n = static_cast<int>(c.size());
    int col = i + 2;
    while (col <= n && c[static_cast<std::size_t>(col - 1)].top == 1)
        ++col;
    return col - 1;
}

// Removes a top particle at column pt and a bottom particle at column pb,
// then inserts a top 1 and a bottom -1 at wall j2.
Config move_pair_to_j2(const Config& c, int pt, int pb, int j2)
{
    const int n = static_cast<int>(c.size());
    std::vector<int> top(static_cast<std::size_t>(n)), bot(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        top[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)].top;
        bot[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)].bottom;
    }
    bool split = j2 + 1 <= n && c[static_cast<std::size_t>(j2)].top == -1;
    top.erase(top.begin() + (pt - 1));
    bot.erase(bot.begin() + (pb - 1));
    top.insert(top.begin() + (j2 - 1), 1);
    int qb = split ? j2 + 1 : j2;
    bot.insert(bot.begin() + (qb - 1), -1);
    Config out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = {top[static_cast<std::size_t>(k)], bot[static_cast<std::size_t>(k)]};
    return out;
}

// Removes column r and inserts a -1/1 column just right of wall j1.
Config move_column_to_j1(const Config& c, int r, int j1)
{
    Config out = c;
    out.erase(out.begin() + (r - 1));
    out.insert(out.begin() + j1, kMinusPlus);
    return out;
}

} // namespace

Move transition(const Config& c, int i)
{
    const int n = static_cast<int>(c.size());
    Rule r = rule_at(c, i);
    Move m{c, i, r};
    switch (r) {
    case Rule::None:
        break;
    case Rule::B1: {
        int j1 = find_j1(c, i);
        m.result = move_column_to_j1(c, i + 1, j1);
        m.wall = j1;
        break;
    }
    case Rule::R1:
    case Rule::R2: {
        int j1 = find_j1(c, i);
        m.result = move_column_to_j1(c, r == Rule::R1 ? n - 1 : n, j1);
        m.wall = j1;
        break;
    }
    case Rule::B2: {
        int j2 = find_j2(c, i);
        bool diagonal = c[static_cast<std::size_t>(i)] == kDown;
        m.result = move_pair_to_j2(c, i, diagonal ? i + 1 : i, j2);
        m.wall = j2;
        break;
    }
    case Rule::L1:
    case Rule::L2: {
        int j2 = find_j2(c, 1);
        int at = r == Rule::L1 ? 2 : 1;
        m.result = move_pair_to_j2(c, at, at, j2);
        m.wall = j2;
        break;
    }
    case Rule::L3:
        m.result[0] = kStarCol;
        m.result[1] = kZero;
        m.wall = 1;
        break;
    case Rule::R3:
        m.result[static_cast<std::size_t>(n - 2)] = kZero;
        m.result[static_cast<std::size_t>(n - 1)] = kStarCol;
        m.wall = n - 1;
        break;
    }
    return m;
}

Kernel kernel(int n, int n0, const Params& p)
{
    if (n < 3)
        throw InvalidCounts("two-row chain needs n >= 3");
    std::vector<State> states;
    for (const Config& c : enumerate(n, n0))
        states.push_back(encode(c));
    Kernel k(states);
    Rational edge(1, n - 1);
    for (std::size_t s = 0; s < k.size(); ++s) {
        Config c = decode(k.state(s));
        for (int i = 1; i <= n - 1; ++i) {
            Move m = transition(c, i);
            if (m.rule == Rule::None)
                continue;
            Rational lam = rate(m.rule, p);
            if (lam != 0)
                k.add(s, encode(m.result), edge * lam);
        }
    }
    k.close_rows();
    return k;
}

namespace {

std::vector<std::size_t> closed_class(const Kernel& k)
{
    ClassInfo info = communicating_classes(k);
    auto closed = info.closed_classes();
    if (closed.size() != 1)
        throw NotIrreducible(std::to_string(closed.size()) + " closed classes");
    return info.classes[closed.front()];
}

} // namespace

Dist stationary(int n, int n0, const Params& p)
{
    Kernel k = kernel(n, n0, p);
    auto members = closed_class(k);
    Dist d;
    d.states = k.states();
    d.p.assign(k.size(), 0);
    Rational z = 0;
    for (std::size_t i : members) {
        d.p[i] = q_weight(decode(k.state(i)), p);
        z += d.p[i];
    }
    for (std::size_t i : members)
        d.p[i] /= z;
    return d;
}

Rational partition(int n, int n0, const Params& p)
{
    Kernel k = kernel(n, n0, p);
    Rational z = 0;
    for (std::size_t i : closed_class(k))
        z += q_weight(decode(k.state(i)), p);
    return z;
}

} // namespace wt::tworow
