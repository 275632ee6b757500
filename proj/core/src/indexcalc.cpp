#include "polystab/indexcalc.hpp"

#include <algorithm>
#include <set>

namespace polystab {

std::int64_t HalfInt::to_int() const {
  if (!is_integer()) throw Error(ErrorCode::DomainError, "half-integer " + str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt cz_rotation(const PR& T) {
  if (T.sign() <= 0) throw Error(ErrorCode::DomainError, "rotation angle must be positive");
  return HalfInt(2 * to_int64(floor_generic(T)) + 1);
}

std::int64_t cz_ellipsoid_cover(const Ellipsoid& e, int axis, int r) {
  if (axis < 1 || axis > e.n()) throw Error(ErrorCode::DomainError, "axis out of range");
  if (r < 1) throw Error(ErrorCode::DomainError, "cover multiplicity must be >= 1");
  std::int64_t cz = 2 * static_cast<std::int64_t>(r) + (e.n() - 1);
  const PR base = PR(r) * e.capacity(axis);
  for (int j = 1; j <= e.n(); ++j)
    if (j != axis) cz += 2 * to_int64(floor_generic(base / e.capacity(j)));
  return cz;
}

HalfInt cz_torus_class(const OrbitClass& c, int n) {
  if (!c.is_torus()) throw Error(ErrorCode::DomainError, "not a torus class");
  if (static_cast<int>(c.v.size()) != n) throw Error(ErrorCode::DimensionMismatch, "torus class length differs from n");
  std::int64_t sum = 0;
  for (auto x : c.v) sum += x;
  return HalfInt(2 * sum) + HalfInt::from_twice(n - 1);
}

std::int64_t cz_minus_halfdim(const OrbitClass& c, int n) {
  if (!c.m_zero()) throw Error(ErrorCode::NonzeroM, "class " + c.str() + " has m != 0");
  HalfInt v = cz_torus_class(c, n) - HalfInt::from_twice(c.family_dim(n));
  return v.to_int();
}

HalfInt cz_orbit(const OrbitClass& c, const CurveSpec& u) {
  if (c.is_torus()) return cz_torus_class(c, u.n);
  if (!u.ellipsoid) throw Error(ErrorCode::DomainError, "ellipsoid end without an ellipsoid");
  if (u.ellipsoid->n() != u.n) throw Error(ErrorCode::DimensionMismatch, "ellipsoid dimension differs from n");
  return HalfInt(cz_ellipsoid_cover(*u.ellipsoid, c.axis, c.multiplicity));
}

HalfInt fredholm_index(const CurveSpec& u) {
  if (u.d1 < 0 || u.d2 < 0) throw Error(ErrorCode::DomainError, "bidegree must be non-negative");
  const std::int64_t sp = static_cast<std::int64_t>(u.positive_ends.size());
  const std::int64_t sm = static_cast<std::int64_t>(u.negative_ends.size());
  HalfInt idx((u.n - 3) * (2 - sp - sm) + 2 * (2 * u.d1 + 2 * u.d2));
  for (const auto& g : u.positive_ends) idx += cz_orbit(g, u) + HalfInt::from_twice(g.family_dim(u.n));
  for (const auto& g : u.negative_ends) idx += -cz_orbit(g, u) + HalfInt::from_twice(g.family_dim(u.n));
  return idx;
}

std::int64_t closed_index(int d1, int d2, int n) {
  if (d1 < 0 || d2 < 0) throw Error(ErrorCode::DomainError, "bidegree must be non-negative");
  return 2 * (n - 3) + 2 * (2 * d1 + 2 * d2);
}

std::int64_t constrained_closed_index(int d1, int d2, int n, int points) {
  if (points < 0) throw Error(ErrorCode::DomainError, "point count must be non-negative");
  return closed_index(d1, d2, n) - 2 * points;
}

namespace {

const OrbitClass& end_of(const BuildingSpec& b, const EndRef& r) {
  if (r.component < 0 || r.component >= static_cast<int>(b.components.size()))
    throw Error(ErrorCode::MalformedMatching, "matching refers to a missing component");
  const auto& c = b.components[r.component];
  const auto& ends = r.positive ? c.positive_ends : c.negative_ends;
  if (r.end < 0 || r.end >= static_cast<int>(ends.size()))
    throw Error(ErrorCode::MalformedMatching, "matching refers to a missing end");
  return ends[r.end];
}

}  // namespace

HalfInt building_index(const BuildingSpec& b) {
  HalfInt total;
  for (const auto& c : b.components) total += fredholm_index(c);
  std::set<EndRef> used;
  for (const auto& m : b.matchings) {
    const auto& ga = end_of(b, m.a);
    const auto& gb = end_of(b, m.b);
    if (m.a.positive == m.b.positive)
      throw Error(ErrorCode::MalformedMatching, "a matching pairs a positive end with a negative end");
    if (m.a.component == m.b.component)
      throw Error(ErrorCode::MalformedMatching, "a matching must join two different components");
    if (!(ga == gb)) throw Error(ErrorCode::MalformedMatching, "matched ends carry different orbits");
    if (!used.insert(m.a).second || !used.insert(m.b).second)
      throw Error(ErrorCode::MalformedMatching, "an end is matched twice");
    const int n = b.components[m.a.component].n;
    if (b.components[m.b.component].n != n) throw Error(ErrorCode::MalformedMatching, "matched components differ in n");
    total -= HalfInt(ga.family_dim(n));
  }
  return total;
}

std::int64_t stabilization_shift(std::int64_t index, int s_minus) {
  if (s_minus < 0) throw Error(ErrorCode::DomainError, "s- must be non-negative");
  return 2 - 2 * static_cast<std::int64_t>(s_minus) + index;
}

bool cover_index_bound(int p, int s_tilde, int s) {
  if (p < 1 || s_tilde < 1 || s < 1) throw Error(ErrorCode::PreconditionFailed, "need p, s~, s >= 1");
  const std::int64_t ram = static_cast<std::int64_t>(p) * s_tilde - s;
  return ram >= 0 && ram <= 2 * static_cast<std::int64_t>(p) - 2;
}

std::int64_t cover_index(std::int64_t u_tilde_index, int p, int n, int s_tilde, int s) {
  // index(u~) = (n-3)(2-s~) + X, index(u) = (n-3)(2-s) + pX
  const std::int64_t x = u_tilde_index - static_cast<std::int64_t>(n - 3) * (2 - s_tilde);
  return static_cast<std::int64_t>(3 - n) * (s - 2) + p * x;
}

bool multiple_cover_nonneg(std::int64_t u_tilde_index, int p, int n, int s_tilde, int s) {
  if (n < 3 || u_tilde_index < 0 || !cover_index_bound(p, s_tilde, s))
    throw Error(ErrorCode::PreconditionFailed, "multiple cover data outside the lemma's hypotheses");
  const std::int64_t idx = cover_index(u_tilde_index, p, n, s_tilde, s);
  return idx >= p * u_tilde_index && p * u_tilde_index >= 0;
}

std::int64_t adjunction_defect(int d1, int d2) {
  if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0))
    throw Error(ErrorCode::DomainError, "adjunction needs a nonzero non-negative bidegree");
  const std::int64_t a = d1, b = d2;
  return 2 + 2 * a * b - 2 * a - 2 * b;
}

std::int64_t kunneth_dimension(int d1, int d2) {
  if (d1 < 0 || d2 < 0) throw Error(ErrorCode::DomainError, "bidegree must be non-negative");
  return static_cast<std::int64_t>(d1 + 1) * (d2 + 1);
}

std::int64_t kunneth_threshold(int d1, int d2) { return kunneth_dimension(d1, d2) - 1; }

bool partition_is_trivial(int m, const PR& theta) {
  if (m < 1 || theta.sign() <= 0) throw Error(ErrorCode::DomainError, "need m >= 1 and theta > 0");
  return floor_generic(PR(m) * theta) == 0;
}

std::int64_t symplectization_index(const std::vector<int>& positive_multiplicities, int neg_multiplicity,
                                   const Regime* reg) {
  if (positive_multiplicities.empty()) throw Error(ErrorCode::DomainError, "need at least one positive end");
  if (neg_multiplicity < 1) throw Error(ErrorCode::DomainError, "negative multiplicity must be >= 1");
  std::int64_t sum = 0;
  for (int a : positive_multiplicities) {
    if (a < 1) throw Error(ErrorCode::DomainError, "positive multiplicities must be >= 1");
    sum += a;
  }
  if (reg) {
    const PR two_d1(2 * reg->d + 1);
    std::vector<int> mults = positive_multiplicities;
    mults.push_back(neg_multiplicity);
    for (int a : mults)
      for (int j = 1; j < reg->n; ++j) {
        PR r = PR(a) * (reg->eps - reg->delta1()) / (two_d1 * (reg->eps - reg->delta[j]));
        if (floor_generic(r) != 0)
          throw Error(ErrorCode::FloorNotVanishing,
                      "floor term for multiplicity " + std::to_string(a) + " does not vanish");
      }
  }
  const std::int64_t sp = static_cast<std::int64_t>(positive_multiplicities.size());
  return 2 * (sp - 1) + 2 * (sum - neg_multiplicity);
}

}  // namespace polystab
