/*
   Copyright 2026 The polarctl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLAR_RENDER_HPP
#define POLAR_RENDER_HPP

#include "polar.hpp"

#include <json.hpp>

#include <string>

namespace polar {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

inline std::string format_value(const RatFuncQi& f, const RingContext& c) {
    return format_ratfunc(f, c.variable(), c.allows_negative_powers());
}

/// {z:e, ...} in key order; "{}" when empty.
inline std::string format_table(const RootMultiset& table) {
    std::string out = "{";
    bool first = true;
    for (const auto& [z, e] : table) {
        if (!first) out += ", ";
        out += to_literal(z) + ":" + std::to_string(e);
        first = false;
    }
    return out + "}";
}

inline std::string format_class(const PolarClass& a) {
    if (a.ctx.kind() == ContextKind::Circle) {
        std::string torsion = a.torsion ? "{" + to_literal(circle_torsion_point()) + "}" : "{}";
        return "torsion " + torsion + ", free " + format_table(a.free);
    }
    return format_table(a.free);
}

inline std::string format_split(const SplitForm& s, char var) {
    std::string out = "unit " + to_literal(s.unit);
    if (s.t_exp != 0 || var == 't') out += ", t_exp " + std::to_string(s.t_exp);
    return out + ", roots " + format_table(s.roots);
}

inline Json table_json(const RootMultiset& table, bool skip_zero) {
    Json arr = Json::array();
    for (const auto& [z, e] : table) {
        if (skip_zero && z.is_zero()) continue;
        arr.push_back(Json{{"z", to_literal(z)}, {"e", e}});
    }
    return arr;
}

inline Json to_json(const SplitForm& s) {
    return Json{{"unit", to_literal(s.unit)}, {"t_exp", s.t_exp}, {"roots", table_json(s.roots, false)}};
}

/// "torsion" appears for the circle only, "t0" for the conic only.
inline Json to_json(const PolarClass& a) {
    const bool conic = a.ctx.kind() == ContextKind::ProjectiveConic;
    Json j{{"ctx", a.ctx.name()}, {"free", table_json(a.free, conic)}};
    if (a.ctx.kind() == ContextKind::Circle) {
        Json t = Json::array();
        if (a.torsion) t.push_back(to_literal(circle_torsion_point()));
        j["torsion"] = t;
    }
    if (conic) {
        auto it = a.free.find(GaussianRational(0));
        j["t0"] = it == a.free.end() ? 0 : it->second;
    }
    return j;
}

}  // namespace polar

#endif  // POLAR_RENDER_HPP
