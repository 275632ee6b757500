#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polystab/reeb.hpp"

namespace polystab {

// Exact half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t v) : twice_(2 * v) {}
  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  std::int64_t to_int() const;
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt h) { return from_twice(k * h.twice_); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

struct CurveSpec {
  int n = 3;
  int d1 = 0;
  int d2 = 0;
  std::vector<OrbitClass> positive_ends;
  std::vector<OrbitClass> negative_ends;
  // Needed when any end lies on an ellipsoid boundary.
  std::optional<Ellipsoid> ellipsoid;
};

struct EndRef {
  int component = 0;
  bool positive = false;
  int end = 0;
  friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

struct Matching {
  EndRef a;
  EndRef b;
};

struct BuildingSpec {
  std::vector<CurveSpec> components;
  std::vector<Matching> matchings;
};

HalfInt cz_rotation(const PR& T);
std::int64_t cz_ellipsoid_cover(const Ellipsoid& e, int axis, int r);
HalfInt cz_torus_class(const OrbitClass& c, int n);
std::int64_t cz_minus_halfdim(const OrbitClass& c, int n);
HalfInt cz_orbit(const OrbitClass& c, const CurveSpec& u);

HalfInt fredholm_index(const CurveSpec& u);
std::int64_t closed_index(int d1, int d2, int n);
std::int64_t constrained_closed_index(int d1, int d2, int n, int points);
HalfInt building_index(const BuildingSpec& b);

std::int64_t stabilization_shift(std::int64_t index, int s_minus);
bool cover_index_bound(int p, int s_tilde, int s);
// Index of a p-fold cover u of a plane-type curve u~ with only negative
// torus ends, from the index of u~ and the end counts.
std::int64_t cover_index(std::int64_t u_tilde_index, int p, int n, int s_tilde, int s);
bool multiple_cover_nonneg(std::int64_t u_tilde_index, int p, int n, int s_tilde, int s);

std::int64_t adjunction_defect(int d1, int d2);
std::int64_t kunneth_dimension(int d1, int d2);
std::int64_t kunneth_threshold(int d1, int d2);
bool partition_is_trivial(int m, const PR& theta);
std::int64_t symplectization_index(const std::vector<int>& positive_multiplicities, int neg_multiplicity,
                                   const Regime* reg = nullptr);

}  // namespace polystab
