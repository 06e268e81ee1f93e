#pragma once

#include "polyring.hpp"
#include "qpieri.hpp"
#include "symgroup.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qschub {

/** {"n", "text", "terms": [{"c": "p/q", "m": {"x1": 2, ...}}]}; "text" parses back to the same polynomial. */
inline nlohmann::json to_json(const Poly& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (int s = 0; s < kSlots; ++s)
            if (m.e[s]) mono[var_name(var_of_slot(s))] = m.e[s];
        terms.push_back({{"c", c.get_str()}, {"m", mono}});
    }
    return {{"n", p.n()}, {"text", p.str()}, {"terms", terms}};
}

inline Poly poly_from_json(const nlohmann::json& j) { return parse(j.at("text").get<std::string>(), j.at("n").get<int>()); }

inline nlohmann::json to_json(const Perm& w)
{
    return {{"one_line", w.one_line()}, {"word", word_str(w.reduced_word())}};
}

inline nlohmann::json to_json(const SchubertVector& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto& [w, c] : v) out.push_back({{"perm", to_json(w)}, {"coeff", to_json(c)}});
    return out;
}

}  // namespace qschub
