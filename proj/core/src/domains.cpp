#include "polystab/domains.hpp"

#include <algorithm>

namespace polystab {

namespace {

void require_positive_sorted(std::vector<PR>& caps, const char* what) {
  if (caps.size() < 2) throw Error(ErrorCode::DomainError, std::string(what) + " needs n >= 2");
  for (const auto& c : caps)
    if (c.sign() <= 0) throw Error(ErrorCode::DomainError, std::string(what) + " capacity must be positive: " + c.str());
  std::sort(caps.begin(), caps.end());
}

}  // namespace

Ellipsoid::Ellipsoid(std::vector<PR> capacities) : caps_(std::move(capacities)) {
  require_positive_sorted(caps_, "ellipsoid");
  for (std::size_t i = 0; i < caps_.size(); ++i)
    for (std::size_t j = 0; j < caps_.size(); ++j)
      if (i != j && !ratio_is_generic(caps_[i], caps_[j]))
        throw Error(ErrorCode::DegenerateValue,
                    "resonant ellipsoid capacities " + caps_[i].str() + ", " + caps_[j].str());
}

Polydisc::Polydisc(std::vector<PR> capacities) : caps_(std::move(capacities)) {
  require_positive_sorted(caps_, "polydisc");
}

std::vector<std::string> regime_violations(const Regime& reg) {
  std::vector<std::string> out;
  auto fail = [&](std::string s) { out.push_back(std::move(s)); };
  const auto& k = reg.knobs;
  const PR two_d1(2 * reg.d + 1);

  if (reg.n < 2) fail("n >= 2");
  if (k.slack_d < 2) fail("slack_d >= 2");
  if (k.slack_S < 4) fail("slack_S >= 4");
  if (k.slack_delta < 100) fail("slack_delta >= 100");
  if (reg.d < 1) fail("d >= 1");
  if (reg.a.sign() <= 0 || reg.b.sign() <= 0 || reg.x.sign() <= 0) fail("x, a, b > 0");
  if (!(two_d1 > reg.b * PR(k.slack_d))) fail("2d+1 > b*slack_d");
  if (!(reg.S > reg.budget() * PR(k.slack_S))) fail("S > (d*a+b)*slack_S");
  if (reg.eps.sign() <= 0) fail("eps > 0");
  if (!(two_d1 * reg.eps / PR(2) < reg.x)) fail("(2d+1)*eps/2 < x");
  if (!(PR(1) - reg.eps > PR(0))) fail("box axis 1 lower bound 1-eps > 0");
  if (!(reg.x - two_d1 * reg.eps > PR(0))) fail("box axis 2 lower bound x-(2d+1)eps > 0");
  if (reg.a < PR(2) && !(PR(reg.d) * (PR(2) - reg.a) > reg.b - PR(2))) fail("d > (b-2)/(2-a)");
  if (k.area_closure && !(two_d1 - reg.budget() > PR(0))) fail("d*a+b < 2d+1");

  if (static_cast<int>(reg.delta.size()) != reg.n) {
    fail("one delta per axis");
    return out;
  }
  for (const auto& dl : reg.delta)
    if (dl.sign() <= 0) fail("delta_j > 0");
  for (int j = 1; j < reg.n; ++j)
    if (!(reg.delta[j] < reg.delta[0])) fail("delta_" + std::to_string(j + 1) + " < delta_1");
  if (!(reg.delta[0] < reg.eps / PR(100))) fail("delta_1 < eps/100");
  for (int i = 0; i < reg.n; ++i)
    for (int j = 0; j < reg.n; ++j) {
      if (i == j) continue;
      PR den = reg.eps - reg.delta[j];
      if (den.q() == 0 || !ratio_is_generic(reg.eps - reg.delta[i], den))
        fail("(eps-delta_" + std::to_string(i + 1) + ")/(eps-delta_" + std::to_string(j + 1) + ") generic");
    }
  return out;
}

void check_regime(const Regime& reg) {
  auto v = regime_violations(reg);
  if (v.empty()) return;
  std::string msg = "regime invariant violated:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw Error(ErrorCode::InvalidRegime, msg);
}

std::vector<PR> default_deltas(int n, const PR& eps, const Rational& slack_delta) {
  std::vector<PR> out;
  out.reserve(n);
  out.push_back(eps / PR(slack_delta) + PR::eta(1));
  for (int j = 2; j <= n; ++j) out.push_back(eps / PR(Rational(2) * slack_delta) + PR::eta(j));
  return out;
}

int smallest_d(const PR& a, const PR& b, const RegimeKnobs& knobs) {
  for (int d = 1; d < 1'000'000; ++d) {
    PR two_d1(2 * d + 1);
    if (!(two_d1 > b * PR(knobs.slack_d))) continue;
    if (a < PR(2) && !(PR(d) * (PR(2) - a) > b - PR(2))) continue;
    // the closure gap must be positive in its rational part, so that a
    // rational eps can be fitted under it
    if (knobs.area_closure && !((two_d1 - PR(d) * a - b).q() > 0)) continue;
    return d;
  }
  throw Error(ErrorCode::NoRegime, "no admissible d below 10^6");
}

Regime select_regime(int n, const PR& x, const PR& a, const PR& b, const RegimeKnobs& knobs) {
  if (n < 3) throw Error(ErrorCode::DomainError, "select_regime needs n >= 3");
  if (a < PR(1) || b < a) throw Error(ErrorCode::DomainError, "need 1 <= a <= b");
  if (!(a < PR(2))) throw Error(ErrorCode::NoRegime, "a >= 2: no obstruction regime");
  if (!(x > PR(2))) throw Error(ErrorCode::NoRegime, "x <= 2: reduce first");

  Regime reg;
  reg.n = n;
  reg.x = x;
  reg.a = a;
  reg.b = b;
  reg.knobs = knobs;
  reg.d = knobs.d ? *knobs.d : smallest_d(a, b, knobs);
  const Rational two_d1(2 * reg.d + 1);

  if (knobs.eps) {
    reg.eps = *knobs.eps;
  } else {
    // eps = min(1, gap)/(2(2d+1)), gap = 2d+1 - (da+b) when closure is on
    Rational cap(1);
    if (knobs.area_closure) {
      Rational gap = (PR(two_d1) - reg.budget()).q();
      if (gap > 0 && gap < cap) cap = gap;
    }
    reg.eps = PR(cap / (2 * two_d1));
  }
  reg.delta = default_deltas(n, reg.eps, knobs.slack_delta);
  reg.S = PR(Rational(floor_rational(reg.budget().q() * knobs.slack_S) + 1));
  check_regime(reg);
  return reg;
}

Ellipsoid skinny_ellipsoid(const Regime& reg) {
  std::vector<PR> caps;
  caps.reserve(reg.n);
  caps.push_back(reg.eps - reg.delta1());
  const PR two_d1(2 * reg.d + 1);
  for (int j = 1; j < reg.n; ++j) caps.push_back(two_d1 * (reg.eps - reg.delta[j]));
  return Ellipsoid(std::move(caps));
}

TorusBox torus_box(const Regime& reg) {
  TorusBox u;
  u.n = reg.n;
  const PR two_d1(2 * reg.d + 1);
  u.lower.push_back(PR(1) - reg.eps);
  u.upper.push_back(PR(1));
  u.torus_point.push_back(PR(1) - reg.eps / PR(2));
  u.lower.push_back(reg.x - two_d1 * reg.eps);
  u.upper.push_back(reg.x);
  u.torus_point.push_back(reg.x - two_d1 * reg.eps / PR(2));
  for (int j = 2; j < reg.n; ++j) {
    u.lower.push_back(reg.S / PR(2));
    u.upper.push_back(reg.S);
    u.torus_point.push_back(PR(3) * reg.S / PR(4));
  }
  return u;
}

bool ellipsoid_fits_box(const Ellipsoid& e, const TorusBox& u) {
  if (e.n() != u.n) throw Error(ErrorCode::DimensionMismatch, "ellipsoid and box dimensions differ");
  for (int i = 1; i <= e.n(); ++i)
    if (!(e.capacity(i) < u.width(i))) return false;
  return true;
}

PR regime_monodromy(const Regime& reg) {
  return (reg.eps - reg.delta1()) / (PR(2 * reg.d + 1) * (reg.eps - reg.delta.at(1)));
}

}  // namespace polystab
