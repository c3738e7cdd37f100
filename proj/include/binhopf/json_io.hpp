#pragma once

#include <json.hpp>

#include <string>

#include "binhopf/linear.hpp"
#include "binhopf/pairing.hpp"
#include "binhopf/tree.hpp"

namespace binhopf {

inline constexpr const char* json_schema = "binhopf/1";

inline nlohmann::json forest_json(const Forest& f)
{
    auto out = nlohmann::json::array();
    for (const Tree& t : f.trees())
        out.push_back(to_string(t));
    return out;
}

/// {"terms":[{"coef":"p/q","forest":[tree, ...]}, ...]}
inline nlohmann::json to_json(const LinComb& a)
{
    auto terms = nlohmann::json::array();
    for (const auto& [f, c] : a)
        terms.push_back({{"coef", to_string(c)}, {"forest", forest_json(f)}});
    return {{"terms", terms}};
}

/// {"terms":[{"coef":"p/q","left":[...],"right":[...]}, ...]}
inline nlohmann::json to_json(const Tensor2& t)
{
    auto terms = nlohmann::json::array();
    for (const auto& [key, c] : t)
        terms.push_back({{"coef", to_string(c)}, {"left", forest_json(key[0])}, {"right", forest_json(key[1])}});
    return {{"terms", terms}};
}

inline nlohmann::json to_json(const DualityReport& r)
{
    return {{"a", forest_json(r.a)},     {"b", forest_json(r.b)},     {"c", forest_json(r.c)},
            {"n", r.n_count.str()},      {"m", r.m_count.str()},      {"lhs", r.lhs.str()},
            {"rhs", r.rhs.str()},        {"pass", r.pass}};
}

} // namespace binhopf
