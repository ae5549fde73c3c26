#ifndef WEYLTASEP_LUMPING_HPP
#define WEYLTASEP_LUMPING_HPP

#include "weyltasep/markov.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wt {

using StateMap = std::function<State(const State&)>;

// Species i -> 1 if i >= k, -1 if i <= -k, otherwise 0.
State k_color(const State& s, int k);
StateMap k_coloring(int k);

enum class StarCollapse {
    WrapBothEnds,        // prepend and append *
    PrependCollapseLast, // prepend *, last +-1 becomes *
    CollapseBothEnds,    // first and last +-1 become *
};
StateMap star_collapse(StarCollapse mode);

// Two-row configurations are encoded as top row followed by bottom row.
State top_row_of(const State& encoded);
StateMap top_row();

StateMap compose_maps(StateMap first, StateMap second);

struct LumpReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> violations;
};

// Checks that the image of every row of `big`, aggregated by `map`, equals
// the corresponding row of `small`.
LumpReport verify_lumping(const Kernel& big, const StateMap& map, const Kernel& small);

// As verify_lumping, and additionally that `map` is a bijection onto `small`.
LumpReport verify_isomorphism(const Kernel& big, const StateMap& map, const Kernel& small);

Dist project_distribution(const Dist& d, const StateMap& map);

} // namespace wt

#endif
