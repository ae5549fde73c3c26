#include "weyltasep/lumping.hpp"

#include "weyltasep/errors.hpp"

#include <map>
#include <set>

namespace wt {

State k_color(const State& s, int k)
{
    if (k < 1)
        throw InvalidParameter("coloring threshold must be >= 1");
    State out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = s[i] >= k ? 1 : s[i] <= -k ? -1 : 0;
    return out;
}

StateMap k_coloring(int k)
{
    if (k < 1)
        throw InvalidParameter("coloring threshold must be >= 1");
    return [k](const State& s) { return k_color(s, k); };
}

StateMap star_collapse(StarCollapse mode)
{
    return [mode](const State& s) {
        State out;
        switch (mode) {
        case StarCollapse::WrapBothEnds:
            out.push_back(kStar);
            out.insert(out.end(), s.begin(), s.end());
            out.push_back(kStar);
            break;
        case StarCollapse::PrependCollapseLast:
            out.push_back(kStar);
            out.insert(out.end(), s.begin(), s.end());
            if (out.back() != 0)
                out.back() = kStar;
            break;
        case StarCollapse::CollapseBothEnds:
            out = s;
            if (!out.empty() && out.front() != 0)
                out.front() = kStar;
            if (!out.empty() && out.back() != 0)
                out.back() = kStar;
            break;
        }
        return out;
    };
}

State top_row_of(const State& encoded)
{
    if (encoded.size() % 2 != 0)
        throw InvalidMap("two-row encoding has odd length");
    return State(encoded.begin(), encoded.begin() + static_cast<long>(encoded.size() / 2));
}

StateMap top_row() { return [](const State& s) { return top_row_of(s); }; }

StateMap compose_maps(StateMap first, StateMap second)
{
    return [first, second](const State& s) { return second(first(s)); };
}

LumpReport verify_lumping(const Kernel& big, const StateMap& map, const Kernel& small)
{
    LumpReport rep;
    auto note = [&](const std::string& msg) {
        rep.ok = false;
        if (rep.violations.size() < 20)
            rep.violations.push_back(msg);
    };
    for (std::size_t s = 0; s < big.size(); ++s) {
        State img = map(big.state(s));
        if (!small.contains(img)) {
            note("image " + state_to_string(img) + " of " + state_to_string(big.state(s)) + " is not a state");
            continue;
        }
        std::map<std::size_t, Rational> agg;
        for (const Transition& t : big.row(s)) {
            State target = map(big.state(t.to));
            if (!small.contains(target)) {
                note("image " + state_to_string(target) + " is not a state");
                continue;
            }
            agg[small.index_of(target)] += t.p;
        }
        std::size_t si = small.index_of(img);
        std::map<std::size_t, Rational> expect;
        for (const Transition& t : small.row(si))
            expect[t.to] = t.p;
        for (auto it = agg.begin(); it != agg.end();)
            it = it->second == 0 ? agg.erase(it) : std::next(it);
        if (agg != expect)
            note("row of " + state_to_string(big.state(s)) + " does not aggregate to the row of " +
                 state_to_string(img));
        ++rep.checked;
    }
    return rep;
}

LumpReport verify_isomorphism(const Kernel& big, const StateMap& map, const Kernel& small)
{
    LumpReport rep = verify_lumping(big, map, small);
    std::set<State> seen;
    for (const State& s : big.states())
        if (!seen.insert(map(s)).second) {
            rep.ok = false;
            rep.violations.push_back("map is not injective at " + state_to_string(s));
            break;
        }
    if (seen.size() != small.size()) {
        rep.ok = false;
        rep.violations.push_back("map is not onto the target state space");
    }
    return rep;
}

Dist project_distribution(const Dist& d, const StateMap& map)
{
    std::map<State, Rational> agg;
    for (std::size_t i = 0; i < d.size(); ++i)
        agg[map(d.states[i])] += d.p[i];
    Dist out;
    for (auto& [s, p] : agg) {
        out.states.push_back(s);
        out.p.push_back(p);
    }
    return out;
}

} // namespace wt
