#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "polystab/errors.hpp"

namespace polystab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
Integer floor_rational(const Rational& r);
bool is_integral(const Rational& r);
std::int64_t to_int64(const Integer& v);

// q + c*eta, where eta is a formal positive infinitesimal. Products drop
// the eta^2 term, so callers must not multiply two values whose eta parts
// both matter.
class PerturbedRational {
 public:
  PerturbedRational() = default;
  PerturbedRational(Rational q, Rational c = Rational(0))
      : q_(std::move(q)), c_(std::move(c)) {}
  template <std::integral T>
  PerturbedRational(T v) : q_(v) {}
  PerturbedRational(const Integer& v) : q_(v) {}

  static PerturbedRational eta(Rational c = Rational(1)) {
    return PerturbedRational(Rational(0), std::move(c));
  }

  const Rational& q() const { return q_; }
  const Rational& c() const { return c_; }
  bool exact() const { return c_ == 0; }

  PerturbedRational operator-() const { return {-q_, -c_}; }
  PerturbedRational& operator+=(const PerturbedRational& o);
  PerturbedRational& operator-=(const PerturbedRational& o);
  PerturbedRational& operator*=(const PerturbedRational& o);
  PerturbedRational& operator/=(const PerturbedRational& o);

  friend PerturbedRational operator+(PerturbedRational a, const PerturbedRational& b) { return a += b; }
  friend PerturbedRational operator-(PerturbedRational a, const PerturbedRational& b) { return a -= b; }
  friend PerturbedRational operator*(PerturbedRational a, const PerturbedRational& b) { return a *= b; }
  friend PerturbedRational operator/(PerturbedRational a, const PerturbedRational& b) { return a /= b; }

  friend bool operator==(const PerturbedRational& a, const PerturbedRational& b) {
    return a.q_ == b.q_ && a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const PerturbedRational& a, const PerturbedRational& b);

  int sign() const;

  // "p/q", "p/q~+", "p/q~-"; a magnitude may follow the sign ("1/2~-3/4")
  // when the eta coefficient is not +-1. The bare sign form normalizes the
  // coefficient to +-1.
  static PerturbedRational parse(std::string_view text);
  std::string str() const;

 private:
  Rational q_{0};
  Rational c_{0};
};

std::ostream& operator<<(std::ostream& os, const PerturbedRational& v);

PerturbedRational abs(const PerturbedRational& v);

Integer floor_generic(const PerturbedRational& v);
Integer ceil_generic(const PerturbedRational& v);
bool ratio_is_generic(const PerturbedRational& p, const PerturbedRational& q);

}  // namespace polystab
