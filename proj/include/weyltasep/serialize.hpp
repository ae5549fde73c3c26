#ifndef WEYLTASEP_SERIALIZE_HPP
#define WEYLTASEP_SERIALIZE_HPP

#include "weyltasep/markov.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace wt {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; with digits >= 0 an object
// {"value": "p/q", "decimal": "..."} is produced instead.
Json rational_json(const Rational& r, int digits = -1);
Rational rational_from_json(const Json& j);

// States are arrays of integers with the boundary letter as "*".
Json state_json(const State& s);
State state_from_json(const Json& j);

// [{"state": [...], "p": "p/q"}, ...]
Json dist_json(const Dist& d, int digits = -1);
Dist dist_from_json(const Json& j);

Json vector_json(const std::vector<Rational>& v, int digits = -1);

// RFC 4180 quoting where needed.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

} // namespace wt

#endif
