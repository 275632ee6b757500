#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polystab/indexcalc.hpp"

namespace polystab {

enum class Role { TopPlane, SpecialCurve };

// A top plane: bidegree plus the torus class of its single negative end.
struct ComponentDatum {
  int d1 = 0;
  int d2 = 0;
  OrbitClass end;
  Role role = Role::TopPlane;

  friend bool operator==(const ComponentDatum& a, const ComponentDatum& b) {
    return a.d1 == b.d1 && a.d2 == b.d2 && a.end == b.end && a.role == b.role;
  }
  friend auto operator<=>(const ComponentDatum& a, const ComponentDatum& b) {
    if (auto c = a.d1 <=> b.d1; c != 0) return c;
    if (auto c = a.d2 <=> b.d2; c != 0) return c;
    return a.end.v <=> b.end.v;
  }
};

ComponentDatum plane(int d1, int d2, std::vector<std::int64_t> cls);

// The planes v_1..v_M, canonically sorted; the special curve v_0 is implied.
struct Configuration {
  std::vector<ComponentDatum> planes;
  int M() const { return static_cast<int>(planes.size()); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.planes <=> b.planes; }
};

struct SearchBounds {
  int k_max = 0;
  int l_max = 0;
  int M_max = 0;
};

struct ClassificationResult {
  bool admissible = true;
  std::int64_t index = 0;
  std::vector<std::string> reasons;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::size_t candidates = 0;
};

struct ContradictionReport {
  PR parent_area;
  PR required_area;
  PR margin;
  bool contradiction = false;
  std::string basis;  // "empty" or "unique-family"
  std::size_t configurations = 0;
  Configuration family;
  std::vector<PR> family_areas;
  PR family_special_area;
};

// Index of a plane in the reduced model, 4(d1+d2) - 2(k+l); independent of n.
std::int64_t plane_index(const ComponentDatum& c);

PR parent_area(const Regime& reg);
PR curve_area(const ComponentDatum& c, const Regime& reg);
PR special_curve_area(std::int64_t abs_k_sum, const Regime& reg);
PR special_curve_area(const Configuration& cfg, const Regime& reg);

ClassificationResult classify_component(const ComponentDatum& c, const Regime& reg);

// Every plane with index in {0,2}, m = 0 and area in [0, parentArea]. Finite
// because the area of a plane of fixed index is strictly decreasing in l.
std::vector<ComponentDatum> admissible_planes(const Regime& reg);

SearchBounds default_bounds(const Regime& reg);
void check_bounds(const Regime& reg, const SearchBounds& bounds);

std::vector<Configuration> enumerate_configurations(const Regime& reg, const SearchBounds& bounds,
                                                    int workers = 1, EnumerationStats* stats = nullptr);
// Reference search: raw tuples inside the bounds, filtered only by the
// definitions (index, area, homology sums, bidegree, special-curve area,
// building index); none of the derived lemmas are used.
std::vector<Configuration> enumerate_unpruned(const Regime& reg, const SearchBounds& bounds,
                                              EnumerationStats* stats = nullptr);

Configuration reference_family(const Regime& reg);
bool is_reference_family(const Configuration& cfg, const Regime& reg);

// v_0 plus the planes, each plane's negative end matched to a positive end of v_0.
BuildingSpec assemble_building(const Configuration& cfg, const Regime& reg);

ContradictionReport contradiction_check(const Regime& reg, const std::vector<Configuration>& configs);
ContradictionReport contradiction_check(const Regime& reg);

}  // namespace polystab
