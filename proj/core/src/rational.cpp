#include "hcn/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hcn {

namespace {

void reduce(Integer& num, Integer& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  if (num.is_zero()) {
    den = 1;
    return;
  }
  const Integer g = Integer::gcd(num, den);
  if (g != Integer(1)) {
    num = Integer::div_exact(num, g);
    den = Integer::div_exact(den, g);
  }
}

}  // namespace

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce(num_, den_);
}

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce(num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce(num_, den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce(num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce(num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num() * b.den() <=> b.num() * a.den();
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_string_exact() const {
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
  if (is_integer()) return num_.to_double();
  mpq_t q;
  mpq_init(q);
  mpq_set_num(q, num_.raw());
  mpq_set_den(q, den_.raw());
  const double d = mpq_get_d(q);
  mpq_clear(q);
  return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
  return os << v.to_string();
}

}  // namespace hcn
