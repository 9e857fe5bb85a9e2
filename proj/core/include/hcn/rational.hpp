#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "hcn/integer.hpp"

namespace hcn {

// Exact fraction over hcn::Integer. Invariants: always in lowest terms,
// denominator > 0. No operation ever rounds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(Integer num, Integer den);
  static Rational parse(std::string_view s);  // "p" or "p/q"

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" when the value is an integer, else "p/q".
  std::string to_string() const;
  // Always "p/q", even for integers.
  std::string to_string_exact() const;
  double to_double() const;

 private:
  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace hcn
