#include "weyltasep/serialize.hpp"

#include "weyltasep/errors.hpp"

namespace wt {

Json rational_json(const Rational& r, int digits)
{
    if (digits < 0)
        return to_string(r);
    return Json{{"value", to_string(r)}, {"decimal", to_decimal(r, digits)}};
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_object() && j.contains("value"))
        return parse_rational(j.at("value").get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw InvalidParameter("expected a rational string");
}

Json state_json(const State& s)
{
    Json a = Json::array();
    for (int v : s) {
        if (v == kStar)
            a.push_back("*");
        else
            a.push_back(v);
    }
    return a;
}

State state_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidConfig("state must be an array");
    State s;
    for (const auto& v : j) {
        if (v.is_string() && v.get<std::string>() == "*")
            s.push_back(kStar);
        else if (v.is_number_integer())
            s.push_back(v.get<int>());
        else
            throw InvalidConfig("bad state entry " + v.dump());
    }
    return s;
}

Json dist_json(const Dist& d, int digits)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        a.push_back(Json{{"state", state_json(d.states[i])}, {"p", rational_json(d.p[i], digits)}});
    return a;
}

Dist dist_from_json(const Json& j)
{
    Dist d;
    for (const auto& e : j) {
        d.states.push_back(state_from_json(e.at("state")));
        d.p.push_back(rational_from_json(e.at("p")));
    }
    return d;
}

Json vector_json(const std::vector<Rational>& v, int digits)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rational_json(x, digits));
    return a;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out << ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out << c;
            continue;
        }
        out << '"';
        for (char ch : c) {
            if (ch == '"')
                out << '"';
            out << ch;
        }
        out << '"';
    }
    out << '\n';
}

} // namespace wt
