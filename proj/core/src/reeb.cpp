#include "polystab/reeb.hpp"

#include <algorithm>
#include <cstdlib>

namespace polystab {

OrbitClass OrbitClass::ellipsoid(int axis, int r) {
  if (axis < 1) throw Error(ErrorCode::DomainError, "ellipsoid axis must be >= 1");
  if (r < 1) throw Error(ErrorCode::DomainError, "cover multiplicity must be >= 1");
  OrbitClass c;
  c.kind = Kind::EllipsoidAxis;
  c.axis = axis;
  c.multiplicity = r;
  return c;
}

OrbitClass OrbitClass::torus(std::vector<std::int64_t> v) {
  if (v.size() < 2) throw Error(ErrorCode::DomainError, "torus class needs at least (k, l)");
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }))
    throw Error(ErrorCode::DomainError, "torus class must be nonzero");
  OrbitClass c;
  c.kind = Kind::Torus;
  c.v = std::move(v);
  return c;
}

bool OrbitClass::m_zero() const {
  return std::all_of(v.begin() + std::min<std::size_t>(2, v.size()), v.end(), [](auto x) { return x == 0; });
}

std::string OrbitClass::str() const {
  if (!is_torus()) return "gamma_" + std::to_string(axis) + "^" + std::to_string(multiplicity);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<PeriodicOrbit> ellipsoid_orbits(const Ellipsoid& e) {
  std::vector<PeriodicOrbit> out;
  for (int i = 1; i <= e.n(); ++i) out.push_back({OrbitClass::ellipsoid(i, 1), e.capacity(i)});
  return out;  // capacities are sorted, so periods are too
}

PR monodromy_angle(const Ellipsoid& e) { return e.capacity(1) / e.capacity(2); }

PR torus_orbit_action(const OrbitClass& c, const Regime& reg) {
  if (!c.is_torus()) throw Error(ErrorCode::DomainError, "torus action of a non-torus orbit");
  if (static_cast<int>(c.v.size()) != reg.n)
    throw Error(ErrorCode::DimensionMismatch, "torus class length differs from n");
  std::int64_t msum = 0;
  for (std::size_t j = 2; j < c.v.size(); ++j) msum += std::llabs(c.v[j]);
  return reg.eps / PR(2) * PR(std::llabs(c.k())) +
         PR(2 * reg.d + 1) * reg.eps / PR(2) * PR(std::llabs(c.l())) +
         reg.S / PR(4) * PR(msum);
}

bool torus_m_vanishing(const OrbitClass& c, const PR& budget, const Regime& reg) {
  if (c.m_zero()) return true;
  return torus_orbit_action(c, reg) > budget;
}

}  // namespace polystab
