#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polystab/exactnum.hpp"

namespace polystab {

using PR = PerturbedRational;

// Capacities are kept sorted ascending; construction rejects resonant
// (non-generic) pairs.
class Ellipsoid {
 public:
  explicit Ellipsoid(std::vector<PR> capacities);
  int n() const { return static_cast<int>(caps_.size()); }
  const std::vector<PR>& capacities() const { return caps_; }
  const PR& capacity(int axis) const { return caps_.at(axis - 1); }  // 1-based

 private:
  std::vector<PR> caps_;
};

class Polydisc {
 public:
  explicit Polydisc(std::vector<PR> capacities);
  int n() const { return static_cast<int>(caps_.size()); }
  const std::vector<PR>& capacities() const { return caps_; }

 private:
  std::vector<PR> caps_;
};

struct TorusBox {
  int n = 0;
  std::vector<PR> lower;
  std::vector<PR> upper;
  std::vector<PR> torus_point;
  PR width(int axis) const { return upper.at(axis - 1) - lower.at(axis - 1); }
};

struct RegimeKnobs {
  Rational slack_d{2};
  Rational slack_S{10};
  Rational slack_delta{1000};
  // Require d*a + b < 2d+1 as well, so the parent area cannot cover 2d+1
  // unit planes.
  bool area_closure = true;
  std::optional<int> d;
  std::optional<PR> eps;
};

struct Regime {
  int n = 3;
  PR x, a, b;
  int d = 1;
  PR eps;
  std::vector<PR> delta;  // delta[0] is delta_1
  PR S;
  RegimeKnobs knobs;

  const PR& delta1() const { return delta.at(0); }
  PR budget() const { return PR(d) * a + b; }
};

// Human-readable list of violated invariants; empty when valid.
std::vector<std::string> regime_violations(const Regime& reg);
void check_regime(const Regime& reg);

std::vector<PR> default_deltas(int n, const PR& eps, const Rational& slack_delta);
int smallest_d(const PR& a, const PR& b, const RegimeKnobs& knobs);

Regime select_regime(int n, const PR& x, const PR& a, const PR& b, const RegimeKnobs& knobs = {});

Ellipsoid skinny_ellipsoid(const Regime& reg);
TorusBox torus_box(const Regime& reg);
bool ellipsoid_fits_box(const Ellipsoid& e, const TorusBox& u);

// (eps - delta_1)/((2d+1)(eps - delta_2))
PR regime_monodromy(const Regime& reg);

}  // namespace polystab
