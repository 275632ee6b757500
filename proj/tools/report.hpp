#pragma once

#include <nlohmann/json.hpp>

#include "polystab/decide.hpp"
#include "polystab/moduli.hpp"

namespace polystab::report {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

json to_json(const PR& v);
PR pr_from_json(const json& j);

json to_json(const Regime& reg);
Regime regime_from_json(const json& j);
// Apply the optional override keys (d, eps, slack_d, slack_S, slack_delta,
// area_closure) of a config object to knobs.
void apply_knobs(const json& j, RegimeKnobs& knobs);

json to_json(const OrbitClass& c);
OrbitClass orbit_from_json(const json& j);
CurveSpec curve_from_json(const json& j);
BuildingSpec building_from_json(const json& j);

json to_json(const ComponentDatum& p, const Regime& reg);
json to_json(const Configuration& cfg, const Regime& reg);
json to_json(const ContradictionReport& r, const Regime& reg);
json to_json(const Verdict& v);

// {"command": argv, "exact": true, "version": ...} plus the given fields.
json envelope(const std::vector<std::string>& argv);

}  // namespace polystab::report
