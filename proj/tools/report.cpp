#include "report.hpp"

namespace polystab::report {

json to_json(const PR& v) { return v.str(); }

PR pr_from_json(const json& j) {
  if (j.is_string()) return PR::parse(j.get<std::string>());
  if (j.is_number_integer()) return PR(j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "expected an exact number as a string or integer, got " + j.dump());
}

json to_json(const Regime& reg) {
  json j;
  j["n"] = reg.n;
  j["x"] = to_json(reg.x);
  j["a"] = to_json(reg.a);
  j["b"] = to_json(reg.b);
  j["d"] = reg.d;
  j["eps"] = to_json(reg.eps);
  j["delta"] = json::array();
  for (const auto& v : reg.delta) j["delta"].push_back(to_json(v));
  j["S"] = to_json(reg.S);
  j["slack_d"] = to_string(reg.knobs.slack_d);
  j["slack_S"] = to_string(reg.knobs.slack_S);
  j["slack_delta"] = to_string(reg.knobs.slack_delta);
  j["area_closure"] = reg.knobs.area_closure;
  return j;
}

namespace {

template <class F>
auto field(const json& j, const char* key, F&& conv) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  try {
    return conv(j.at(key));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

int as_int(const json& j) { return j.get<int>(); }

Rational rational_from_json(const json& j) {
  PR v = pr_from_json(j);
  if (!v.exact()) throw Error(ErrorCode::ParseError, "slack knobs must be plain rationals");
  return v.q();
}

}  // namespace

void apply_knobs(const json& j, RegimeKnobs& knobs) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  if (j.contains("slack_d")) knobs.slack_d = field(j, "slack_d", rational_from_json);
  if (j.contains("slack_S")) knobs.slack_S = field(j, "slack_S", rational_from_json);
  if (j.contains("slack_delta")) knobs.slack_delta = field(j, "slack_delta", rational_from_json);
  if (j.contains("area_closure")) knobs.area_closure = field(j, "area_closure", [](const json& v) { return v.get<bool>(); });
  if (j.contains("d")) knobs.d = field(j, "d", as_int);
  if (j.contains("eps")) knobs.eps = field(j, "eps", pr_from_json);
}

Regime regime_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "regime must be a JSON object");
  Regime reg;
  reg.n = field(j, "n", as_int);
  reg.x = field(j, "x", pr_from_json);
  reg.a = field(j, "a", pr_from_json);
  reg.b = field(j, "b", pr_from_json);
  reg.d = field(j, "d", as_int);
  reg.eps = field(j, "eps", pr_from_json);
  reg.S = field(j, "S", pr_from_json);
  for (const auto& v : field(j, "delta", [](const json& v) { return v; })) reg.delta.push_back(pr_from_json(v));
  json knobs = j;
  knobs.erase("d");
  knobs.erase("eps");
  apply_knobs(knobs, reg.knobs);
  return reg;
}

json to_json(const OrbitClass& c) {
  if (c.is_torus()) return json{{"torus", c.v}};
  return json{{"axis", c.axis}, {"cover", c.multiplicity}};
}

OrbitClass orbit_from_json(const json& j) {
  if (j.contains("torus")) return OrbitClass::torus(field(j, "torus", [](const json& v) {
    return v.get<std::vector<std::int64_t>>();
  }));
  return OrbitClass::ellipsoid(field(j, "axis", as_int), field(j, "cover", as_int));
}

CurveSpec curve_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "curve spec must be a JSON object");
  CurveSpec u;
  u.n = j.contains("n") ? field(j, "n", as_int) : 3;
  u.d1 = j.contains("d1") ? field(j, "d1", as_int) : 0;
  u.d2 = j.contains("d2") ? field(j, "d2", as_int) : 0;
  if (j.contains("positive"))
    for (const auto& o : j.at("positive")) u.positive_ends.push_back(orbit_from_json(o));
  if (j.contains("negative"))
    for (const auto& o : j.at("negative")) u.negative_ends.push_back(orbit_from_json(o));
  if (j.contains("ellipsoid")) {
    std::vector<PR> caps;
    for (const auto& c : j.at("ellipsoid")) caps.push_back(pr_from_json(c));
    u.ellipsoid = Ellipsoid(caps);
  }
  return u;
}

BuildingSpec building_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "building spec must be a JSON object");
  BuildingSpec b;
  for (const auto& c : field(j, "components", [](const json& v) { return v; })) b.components.push_back(curve_from_json(c));
  if (j.contains("matchings"))
    for (const auto& m : j.at("matchings")) {
      if (!m.is_array() || m.size() != 2) throw Error(ErrorCode::ParseError, "a matching is a pair of end references");
      auto ref = [](const json& r) {
        return EndRef{field(r, "component", as_int), field(r, "positive", [](const json& v) { return v.get<bool>(); }),
                      field(r, "end", as_int)};
      };
      b.matchings.push_back({ref(m[0]), ref(m[1])});
    }
  return b;
}

json to_json(const ComponentDatum& p, const Regime& reg) {
  return json{{"bidegree", {p.d1, p.d2}},
              {"class", p.end.v},
              {"index", plane_index(p)},
              {"area", to_json(curve_area(p, reg))}};
}

json to_json(const Configuration& cfg, const Regime& reg) {
  json planes = json::array();
  PR total = special_curve_area(cfg, reg);
  for (const auto& p : cfg.planes) {
    planes.push_back(to_json(p, reg));
    total += curve_area(p, reg);
  }
  return json{{"M", cfg.M()},
              {"planes", planes},
              {"special_area", to_json(special_curve_area(cfg, reg))},
              {"area_total", to_json(total)},
              {"reference_family", is_reference_family(cfg, reg)}};
}

json to_json(const ContradictionReport& r, const Regime& reg) {
  json areas = json::array();
  for (const auto& a : r.family_areas) areas.push_back(to_json(a));
  return json{{"parent_area", to_json(r.parent_area)},
              {"required_area", to_json(r.required_area)},
              {"margin", to_json(r.margin)},
              {"contradiction", r.contradiction},
              {"basis", r.basis},
              {"configurations", r.configurations},
              {"family", to_json(r.family, reg)},
              {"family_areas", areas},
              {"family_special_area", to_json(r.family_special_area)}};
}

json to_json(const Verdict& v) {
  json j;
  if (v.embeds == Embeds::Unknown)
    j["embeds"] = "unknown";
  else
    j["embeds"] = v.embeds == Embeds::Yes;
  j["reason"] = to_string(v.reason);
  j["trace"] = json::array();
  for (const auto& t : v.trace)
    j["trace"].push_back(json{{"case", t.case_no},
                              {"lambda", to_json(t.lambda)},
                              {"action", t.action},
                              {"x", to_json(t.x)},
                              {"a", to_json(t.a)},
                              {"b", to_json(t.b)}});
  return j;
}

json envelope(const std::vector<std::string>& argv) {
  return json{{"command", argv}, {"exact", true}, {"version", kVersion}};
}

}  // namespace polystab::report
