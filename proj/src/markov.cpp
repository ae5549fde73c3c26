#include "weyltasep/markov.hpp"

#include "weyltasep/detail/modular.hpp"
#include "weyltasep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace wt {

std::string state_to_string(const State& s)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            os << ',';
        if (s[i] == kStar)
            os << '*';
        else
            os << s[i];
    }
    os << ')';
    return os.str();
}

Kernel::Kernel(std::vector<State> states) : states_(std::move(states)), rows_(states_.size())
{
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (!index_.emplace(states_[i], i).second)
            throw InvalidParameter("duplicate state " + state_to_string(states_[i]));
}

std::size_t Kernel::index_of(const State& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        throw InvalidMap("unknown state " + state_to_string(s));
    return it->second;
}

void Kernel::add(std::size_t from, const State& to, const Rational& p) { add(from, index_of(to), p); }

void Kernel::add(std::size_t from, std::size_t to, const Rational& p)
{
    if (p == 0)
        return;
    for (Transition& t : rows_[from])
        if (t.to == to) {
            t.p += p;
            return;
        }
    rows_[from].push_back({to, p});
    rows_[from].back().p.canonicalize();
}

void Kernel::close_rows()
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational sum = 0;
        for (const Transition& t : rows_[i]) {
            if (t.p < 0)
                throw NotStochastic("negative entry in row " + state_to_string(states_[i]));
            sum += t.p;
        }
        if (sum > 1)
            throw NotStochastic("row mass exceeds 1 at " + state_to_string(states_[i]));
        add(i, i, Rational(1) - sum);
        auto& r = rows_[i];
        r.erase(std::remove_if(r.begin(), r.end(), [](const Transition& t) { return t.p == 0; }), r.end());
        std::sort(r.begin(), r.end(), [](const Transition& a, const Transition& b) { return a.to < b.to; });
    }
}

Rational Kernel::probability(std::size_t from, std::size_t to) const
{
    for (const Transition& t : rows_[from])
        if (t.to == to)
            return t.p;
    return 0;
}

std::size_t Kernel::transition_count() const
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

Rational Dist::operator[](const State& s) const
{
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s)
            return p[i];
    return 0;
}

Rational Dist::total() const
{
    Rational t = 0;
    for (const Rational& x : p)
        t += x;
    return t;
}

std::vector<std::size_t> ClassInfo::closed_classes() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (closed[i])
            out.push_back(i);
    return out;
}

ClassInfo communicating_classes(const Kernel& k)
{
    // iterative Tarjan
    const std::size_t n = k.size();
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call; // (vertex, next edge)
    std::size_t counter = 0;
    ClassInfo info;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != none)
            continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, e] = call.back();
            const auto& row = k.row(v);
            if (e < row.size()) {
                std::size_t w = row[e].to;
                ++e;
                if (index[w] == none) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            std::size_t vv = v;
            if (low[vv] == index[vv]) {
                std::vector<std::size_t> members;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = info.classes.size();
                    members.push_back(w);
                } while (w != vv);
                std::sort(members.begin(), members.end());
                info.classes.push_back(std::move(members));
            }
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[vv]);
            }
        }
    }
    info.closed.assign(info.classes.size(), true);
    for (std::size_t v = 0; v < n; ++v)
        for (const Transition& t : k.row(v))
            if (comp[t.to] != comp[v])
                info.closed[comp[v]] = false;
    return info;
}

Kernel restrict(const Kernel& k, const std::vector<std::size_t>& keep)
{
    std::vector<State> states;
    std::vector<std::size_t> remap(k.size(), static_cast<std::size_t>(-1));
    for (std::size_t i : keep) {
        remap[i] = states.size();
        states.push_back(k.state(i));
    }
    Kernel out(states);
    for (std::size_t i : keep)
        for (const Transition& t : k.row(i)) {
            if (remap[t.to] == static_cast<std::size_t>(-1))
                throw InvalidMap("restriction is not closed: " + state_to_string(k.state(i)) + " -> " +
                                 state_to_string(k.state(t.to)));
            out.add(remap[i], remap[t.to], t.p);
        }
    out.close_rows();
    return out;
}

bool is_stationary(const Kernel& k, const Dist& pi)
{
    if (pi.states.size() != k.size())
        return false;
    std::vector<Rational> image(k.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (pi.p[i] == 0)
            continue;
        for (const Transition& t : k.row(i))
            image[t.to] += pi.p[i] * t.p;
    }
    for (std::size_t i = 0; i < k.size(); ++i)
        if (image[i] != pi.p[i])
            return false;
    return pi.total() == 1;
}

Dist exact_stationary(const Kernel& k)
{
    if (k.size() == 0)
        throw NotIrreducible("empty kernel");
    ClassInfo info = communicating_classes(k);
    auto closed = info.closed_classes();
    if (closed.size() != 1)
        throw NotIrreducible(std::to_string(closed.size()) + " closed classes");
    const auto& members = info.classes[closed.front()];
    const std::size_t m = members.size();
    std::vector<std::size_t> local(k.size(), static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < m; ++a)
        local[members[a]] = a;

    // Equation j: sum_i x_i (P_ij - [i == j]) = 0; equation 0 becomes sum_i x_i = 1.
    std::vector<detail::SparseRationalRow> eq(m);
    for (std::size_t a = 0; a < m; ++a) {
        bool diag = false;
        for (const Transition& t : k.row(members[a])) {
            std::size_t b = local[t.to];
            Rational v = t.p;
            if (b == a) {
                v -= 1;
                diag = true;
            }
            if (b != 0 && v != 0)
                eq[b].emplace_back(a, v);
        }
        if (!diag && a != 0)
            eq[a].emplace_back(a, Rational(-1));
    }
    eq[0].clear();
    for (std::size_t a = 0; a < m; ++a)
        eq[0].emplace_back(a, Rational(1));
    std::vector<Rational> rhs(m, 0);
    rhs[0] = 1;

    auto accept = [&](const std::vector<Rational>& x) {
        Rational total = 0;
        for (const Rational& v : x) {
            if (v < 0)
                return false;
            total += v;
        }
        if (total != 1)
            return false;
        std::vector<Rational> image(m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (const Transition& t : k.row(members[a]))
                image[local[t.to]] += x[a] * t.p;
        return image == x;
    };
    std::vector<Rational> x = detail::solve_multimodular(eq, rhs, accept);

    Dist d;
    d.states = k.states();
    d.p.assign(k.size(), 0);
    for (std::size_t a = 0; a < m; ++a)
        d.p[members[a]] = x[a];
    return d;
}

EmpiricalDist mc_estimate(const Kernel& k, std::uint64_t steps, std::uint64_t burn_in, std::uint64_t seed,
                          int trials, long start)
{
    if (trials < 1)
        throw InvalidParameter("trials must be positive");
    if (k.size() == 0)
        throw InvalidParameter("empty kernel");
    std::size_t s0;
    if (start >= 0) {
        s0 = static_cast<std::size_t>(start);
    } else {
        ClassInfo info = communicating_classes(k);
        auto closed = info.closed_classes();
        s0 = info.classes[closed.front()].front();
    }

    std::vector<std::vector<double>> cumulative(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        double acc = 0;
        for (const Transition& t : k.row(i)) {
            acc += t.p.get_d();
            cumulative[i].push_back(acc);
        }
    }

    std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(trials),
                                                   std::vector<std::uint64_t>(k.size(), 0));
    auto run = [&](int trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::size_t s = s0;
        auto& c = counts[static_cast<std::size_t>(trial)];
        for (std::uint64_t t = 0; t < burn_in + steps; ++t) {
            const auto& cum = cumulative[s];
            double u = unif(rng) * cum.back();
            std::size_t pick = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
            if (pick >= cum.size())
                pick = cum.size() - 1;
            s = k.row(s)[pick].to;
            if (t >= burn_in)
                ++c[s];
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (trials == 1 || hw == 1) {
        for (int t = 0; t < trials; ++t)
            run(t);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < trials; ++t)
            pool.emplace_back(run, t);
        for (auto& th : pool)
            th.join();
    }

    EmpiricalDist out;
    out.states = k.states();
    out.p.assign(k.size(), 0.0);
    double total = static_cast<double>(steps) * trials;
    for (const auto& c : counts)
        for (std::size_t i = 0; i < k.size(); ++i)
            out.p[i] += static_cast<double>(c[i]) / total;
    return out;
}

double total_variation(const Dist& exact, const EmpiricalDist& est)
{
    if (exact.states != est.states)
        throw InvalidParameter("distributions over different state lists");
    double tv = 0;
    for (std::size_t i = 0; i < exact.size(); ++i)
        tv += std::abs(exact.p[i].get_d() - est.p[i]);
    return tv / 2;
}

} // namespace wt
