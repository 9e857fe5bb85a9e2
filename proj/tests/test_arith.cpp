#include <doctest.h>

#include <stdexcept>

#include <complex>
#include <numeric>

#include "hcn/arith.hpp"

using hcn::Integer;

namespace {

// Independent oracle: plain trial-division divisor scan.
std::int64_t sigma_oracle(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

}  // namespace

TEST_CASE("divisor_sum") {
  CHECK(hcn::divisor_sum(1) == Integer(1));
  CHECK(hcn::divisor_sum(6) == Integer(12));
  CHECK(hcn::divisor_sum(7) == Integer(8));
  CHECK_THROWS_AS(hcn::divisor_sum(0), std::domain_error);
  CHECK_THROWS_AS(hcn::divisor_sum(-3), std::domain_error);
  for (std::int64_t n = 1; n <= 10000; ++n)
    REQUIRE(hcn::divisor_sum(n) == Integer(sigma_oracle(n)));
}

TEST_CASE("divisor_power_sum_below_sqrt") {
  CHECK(hcn::divisor_power_sum_below_sqrt(1, 3) == Integer(0));
  CHECK(hcn::divisor_power_sum_below_sqrt(12, 1) == Integer(6));
  CHECK(hcn::divisor_power_sum_below_sqrt(4, 3) == Integer(1));
  CHECK(hcn::divisor_power_sum_below_sqrt(9, 0) == Integer(1));  // d=1 only
  CHECK_THROWS_AS(hcn::divisor_power_sum_below_sqrt(0, 1), std::domain_error);
}

TEST_CASE("min_divisor_sum") {
  CHECK(hcn::min_divisor_sum(1) == Integer(1));
  CHECK(hcn::min_divisor_sum(4) == Integer(4));
  CHECK(hcn::min_divisor_sum(6) == Integer(6));
  for (std::int64_t n = 1; n <= 500; ++n) {
    Integer s(0);
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += Integer(std::min(d, n / d));
    }
    REQUIRE(hcn::min_divisor_sum(n) == s);
  }
}

TEST_CASE("kronecker_symbol") {
  CHECK(hcn::kronecker_symbol(0, 1) == 1);
  CHECK(hcn::kronecker_symbol(2, 7) == 1);
  CHECK(hcn::kronecker_symbol(3, 5) == -1);
  CHECK(hcn::kronecker_symbol(4, 9) == 1);
  CHECK(hcn::kronecker_symbol(3, 9) == 0);

  // Euler-criterion oracle on odd primes.
  for (const std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    for (std::int64_t a = -2 * p; a <= 2 * p; ++a) {
      std::int64_t e = ((a % p) + p) % p;
      std::int64_t pow = 1;
      for (std::int64_t i = 0; i < (p - 1) / 2; ++i) pow = pow * e % p;
      const int expected = e == 0 ? 0 : (pow == 1 ? 1 : -1);
      REQUIRE(hcn::kronecker_symbol(a, p) == expected);
    }
  }

  // Multiplicativity in the lower argument for odd coprime m, n <= 100.
  for (std::int64_t m = 1; m <= 99; m += 2) {
    for (std::int64_t n = 1; n <= 99; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      for (const std::int64_t a : {-7, -2, 0, 1, 2, 3, 5, 10, 36}) {
        REQUIRE(hcn::kronecker_symbol(a, m * n) ==
                hcn::kronecker_symbol(a, m) * hcn::kronecker_symbol(a, n));
      }
    }
  }
}

TEST_CASE("mod_inverse") {
  CHECK(hcn::mod_inverse(1, 5) == 1);
  CHECK(hcn::mod_inverse(3, 7) == 5);
  CHECK(hcn::mod_inverse(4, 9) == 7);
  CHECK(hcn::mod_inverse(17, 1) == 0);
  CHECK_THROWS_AS(hcn::mod_inverse(2, 4), std::domain_error);
  for (std::int64_t b = 1; b <= 500; ++b) {
    for (std::int64_t a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const std::int64_t x = hcn::mod_inverse(a, b);
      REQUIRE(x >= 0);
      REQUIRE(x < b);
      if (b > 1) REQUIRE(a * x % b == 1);
    }
  }
  // negative a
  CHECK(hcn::mod_inverse(-3, 7) == 2);  // -3*2 = -6 = 1 (mod 7)
}

TEST_CASE("eps_unit") {
  const std::complex<double> one{1.0, 0.0}, i{0.0, 1.0};
  CHECK(hcn::eps_unit(1) == one);
  CHECK(hcn::eps_unit(3) == i);
  CHECK(hcn::eps_unit(-1) == i);
  CHECK(hcn::eps_unit(-3) == one);  // -3 = 1 (mod 4)
  CHECK(hcn::eps_unit(5) == one);
  CHECK_THROWS_AS(hcn::eps_unit(2), std::domain_error);
}

TEST_CASE("exact_sqrt") {
  CHECK(hcn::exact_sqrt(std::int64_t{0}) == 0);
  CHECK(hcn::exact_sqrt(std::int64_t{144}) == 12);
  CHECK(!hcn::exact_sqrt(std::int64_t{12}).has_value());
  CHECK_THROWS_AS(hcn::exact_sqrt(Integer(-4)), std::domain_error);
  for (std::int64_t k = 0; k <= 10000; ++k) {
    REQUIRE(hcn::exact_sqrt(k * k) == k);
    if (k >= 1) REQUIRE(!hcn::exact_sqrt(k * k + 1).has_value());
  }
}

TEST_CASE("divisors, primes, ord2") {
  CHECK(hcn::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(hcn::divisors(1) == std::vector<std::int64_t>{1});
  CHECK(hcn::is_prime(2));
  CHECK(hcn::is_prime(499));
  CHECK(!hcn::is_prime(1));
  CHECK(!hcn::is_prime(491 * 499));
  const auto ps = hcn::primes_up_to(100);
  CHECK(ps.size() == 25);
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 97);
  CHECK(hcn::ord2(12) == 2);
  CHECK(hcn::ord2(-12) == 2);
  CHECK(hcn::ord2(7) == 0);
  CHECK_THROWS_AS(hcn::ord2(0), std::domain_error);
}
