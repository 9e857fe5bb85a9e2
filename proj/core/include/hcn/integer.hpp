#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace hcn {

// Arbitrary-precision signed integer (GMP mpz under the hood).
// Value semantics throughout; every operation is exact.
class Integer {
 public:
  Integer() { mpz_init(z_); }
  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      mpz_init_set_si(z_, static_cast<long>(v));
    } else {
      mpz_init_set_ui(z_, static_cast<unsigned long>(v));
    }
  }
  explicit Integer(std::string_view decimal);
  ~Integer() { mpz_clear(z_); }

  Integer& operator=(const Integer& o) {
    mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(z_) != 0; }
  bool is_even() const { return mpz_even_p(z_) != 0; }

  Integer& operator+=(const Integer& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) {
    Integer r;
    mpz_neg(r.z_, a.z_);
    return r;
  }

  // Truncated division (C semantics). Throws std::domain_error on zero divisor.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  // Quotient/remainder of floor division; remainder has the divisor's sign
  // stripped, i.e. mod_floor(a, m) lies in [0, m) for m > 0.
  static Integer mod_floor(const Integer& a, const Integer& m);
  // Exact division; it is the caller's job that b | a.
  static Integer div_exact(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = mpz_cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  static Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.z_, a.z_);
    return r;
  }
  static Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  static Integer pow(const Integer& base, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.z_, base.z_, static_cast<unsigned long>(e));
    return r;
  }

  bool fits_int64() const { return mpz_fits_slong_p(z_) != 0; }
  std::int64_t to_int64() const;  // throws std::overflow_error if too large
  double to_double() const { return mpz_get_d(z_); }
  std::string to_string() const;

  std::size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace hcn
