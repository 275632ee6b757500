#include "polystab/exactnum.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace polystab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateValue: return "DegenerateValue";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoRegime: return "NoRegime";
    case ErrorCode::InvalidRegime: return "InvalidRegime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonzeroM: return "NonzeroM";
    case ErrorCode::MalformedMatching: return "MalformedMatching";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::FloorNotVanishing: return "FloorNotVanishing";
    case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(ErrorCode::ParseError, "cannot parse number '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) parse_fail(whole);
  Integer v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) parse_fail(whole);
    v = v * 10 + (ch - '0');
  }
  return v;
}

// Unsigned decimal or integer, e.g. "12", "2.5".
Rational parse_unsigned(std::string_view s, std::string_view whole) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(s, whole));
  auto ip = s.substr(0, dot);
  auto fp = s.substr(dot + 1);
  if (ip.empty() && fp.empty()) parse_fail(whole);
  Integer whole_part = ip.empty() ? Integer(0) : parse_integer(ip, whole);
  Integer frac = fp.empty() ? Integer(0) : parse_integer(fp, whole);
  Integer scale = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
  return Rational(whole_part) + Rational(frac, scale);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    r = parse_unsigned(s, text);
  } else {
    Rational num = parse_unsigned(s.substr(0, slash), text);
    Rational den = parse_unsigned(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    r = num / den;
  }
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer floor_rational(const Rational& r) {
  Integer n = numerator(r);
  Integer d = denominator(r);  // always positive
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::DomainError, "integer out of 64-bit range: " + v.str());
  return static_cast<std::int64_t>(v);
}

PerturbedRational& PerturbedRational::operator+=(const PerturbedRational& o) {
  q_ += o.q_;
  c_ += o.c_;
  return *this;
}

PerturbedRational& PerturbedRational::operator-=(const PerturbedRational& o) {
  q_ -= o.q_;
  c_ -= o.c_;
  return *this;
}

PerturbedRational& PerturbedRational::operator*=(const PerturbedRational& o) {
  Rational c = q_ * o.c_ + o.q_ * c_;
  q_ *= o.q_;
  c_ = std::move(c);
  return *this;
}

PerturbedRational& PerturbedRational::operator/=(const PerturbedRational& o) {
  if (o.q_ == 0) throw Error(ErrorCode::DivisionByZero, "division by a value with zero rational part");
  // (q1 + c1 e)/(q2 + c2 e) = q1/q2 + (c1 q2 - q1 c2)/q2^2 e
  Rational c = (c_ * o.q_ - q_ * o.c_) / (o.q_ * o.q_);
  q_ /= o.q_;
  c_ = std::move(c);
  return *this;
}

std::strong_ordering operator<=>(const PerturbedRational& a, const PerturbedRational& b) {
  if (a.q_ < b.q_) return std::strong_ordering::less;
  if (a.q_ > b.q_) return std::strong_ordering::greater;
  if (a.c_ < b.c_) return std::strong_ordering::less;
  if (a.c_ > b.c_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int PerturbedRational::sign() const {
  if (q_ != 0) return q_ > 0 ? 1 : -1;
  if (c_ != 0) return c_ > 0 ? 1 : -1;
  return 0;
}

PerturbedRational PerturbedRational::parse(std::string_view text) {
  auto s = trim(text);
  auto tilde = s.find('~');
  if (tilde == std::string_view::npos) return PerturbedRational(parse_rational(s));
  Rational q = parse_rational(s.substr(0, tilde));
  auto tag = trim(s.substr(tilde + 1));
  if (tag.empty() || (tag.front() != '+' && tag.front() != '-')) parse_fail(text);
  bool neg = tag.front() == '-';
  tag.remove_prefix(1);
  Rational mag = tag.empty() ? Rational(1) : parse_rational(tag);
  if (mag <= 0) parse_fail(text);
  return PerturbedRational(q, neg ? Rational(-mag) : mag);
}

std::string PerturbedRational::str() const {
  std::string out = to_string(q_);
  if (c_ == 0) return out;
  out += c_ > 0 ? "~+" : "~-";
  Rational mag = c_ > 0 ? c_ : Rational(-c_);
  if (mag != 1) out += to_string(mag);
  return out;
}

std::ostream& operator<<(std::ostream& os, const PerturbedRational& v) { return os << v.str(); }

PerturbedRational abs(const PerturbedRational& v) { return v.sign() < 0 ? -v : v; }

Integer floor_generic(const PerturbedRational& v) {
  if (!is_integral(v.q())) return floor_rational(v.q());
  Integer base = numerator(v.q());
  if (v.c() > 0) return base;
  if (v.c() < 0) return base - 1;
  throw Error(ErrorCode::DegenerateValue, "floor of resonant value " + v.str());
}

Integer ceil_generic(const PerturbedRational& v) { return -floor_generic(-v); }

bool ratio_is_generic(const PerturbedRational& p, const PerturbedRational& q) {
  if (q.q() == 0) throw Error(ErrorCode::DivisionByZero, "ratio with zero denominator");
  PerturbedRational r = p / q;
  return r.c() != 0 || !is_integral(r.q());
}

}  // namespace polystab
