#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polystab/domains.hpp"

namespace polystab {

// Either the r-fold cover of the axis-i orbit of an ellipsoid boundary, or a
// torus class (k, l, m_1..m_{n-2}) on the smoothed box boundary.
struct OrbitClass {
  enum class Kind { EllipsoidAxis, Torus };

  Kind kind = Kind::Torus;
  int axis = 0;
  int multiplicity = 0;
  std::vector<std::int64_t> v;

  static OrbitClass ellipsoid(int axis, int r);
  static OrbitClass torus(std::vector<std::int64_t> v);

  bool is_torus() const { return kind == Kind::Torus; }
  std::int64_t k() const { return v.at(0); }
  std::int64_t l() const { return v.at(1); }
  bool m_zero() const;
  int family_dim(int n) const { return is_torus() ? n - 1 : 0; }
  std::string str() const;

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
  friend auto operator<=>(const OrbitClass&, const OrbitClass&) = default;
};

struct PeriodicOrbit {
  OrbitClass orbit;
  PR period;
};

std::vector<PeriodicOrbit> ellipsoid_orbits(const Ellipsoid& e);
PR monodromy_angle(const Ellipsoid& e);

PR torus_orbit_action(const OrbitClass& c, const Regime& reg);
bool torus_m_vanishing(const OrbitClass& c, const PR& budget, const Regime& reg);

}  // namespace polystab
