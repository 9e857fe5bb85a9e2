#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "hcn/arith.hpp"
#include "hcn/moments.hpp"

using hcn::HurwitzTable;
using hcn::Integer;
using hcn::MomentQuery;
using hcn::QSeries;
using hcn::Rational;

namespace {

Rational frac(std::int64_t p, std::int64_t q) {
  return Rational(Integer(p), Integer(q));
}

const HurwitzTable& table() {
  static const HurwitzTable t = HurwitzTable::build(8000);
  return t;
}

// Table-free moment oracle straight from per-discriminant enumeration.
Rational moment_oracle(std::int64_t kappa, std::int64_t m, std::int64_t M,
                       std::int64_t n) {
  Rational sum(0);
  for (std::int64_t t = -200; t <= 200; ++t) {
    if (t * t > 4 * n || (((t - m) % M) + M) % M != 0) continue;
    sum += Rational(Integer::pow(Integer(t),
                                 static_cast<std::uint64_t>(kappa))) *
           hcn::hurwitz_class_number(4 * n - t * t);
  }
  return sum;
}

}  // namespace

TEST_CASE("moment_brute examples") {
  CHECK(moment_brute(MomentQuery(0, 0, 1, 5), table()) == Rational(10));
  CHECK(moment_brute(MomentQuery(2, 1, 3, 2), table()) == Rational(3));
  CHECK(moment_brute(MomentQuery(2, 0, 3, 1), table()) == Rational(0));
  CHECK(moment_brute(MomentQuery(0, 1, 5, 11), table()) == Rational(4));
  CHECK_THROWS_AS(MomentQuery(0, 0, 1, 0), std::domain_error);
  CHECK_THROWS_AS(MomentQuery(-1, 0, 1, 5), std::domain_error);
  CHECK_THROWS_AS(moment_brute(MomentQuery(0, 0, 1, 5), HurwitzTable::build(4)),
                  std::out_of_range);
}

TEST_CASE("moment_brute agrees with the table-free oracle") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (const std::int64_t M : {1, 3, 5}) {
      for (std::int64_t m = 0; m < M; ++m) {
        for (std::int64_t kappa = 0; kappa <= 3; ++kappa) {
          REQUIRE(moment_brute(MomentQuery(kappa, m, M, n), table()) ==
                  moment_oracle(kappa, m, M, n));
        }
      }
    }
  }
}

TEST_CASE("moment symmetry, partition, decomposition invariants") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (const std::int64_t M : {3, 5}) {
      for (std::int64_t m = 0; m < M; ++m) {
        for (const std::int64_t kappa : {0, 1, 2, 3}) {
          const Rational a = moment_brute(MomentQuery(kappa, m, M, n), table());
          const Rational b =
              moment_brute(MomentQuery(kappa, M - m, M, n), table());
          if (kappa % 2 == 0) {
            REQUIRE(a == b);
          } else {
            REQUIRE(a == -b);
          }
        }
      }
      for (const std::int64_t kappa : {0, 1, 2}) {
        Rational sum(0);
        for (std::int64_t m = 0; m < M; ++m)
          sum += moment_brute(MomentQuery(kappa, m, M, n), table());
        REQUIRE(sum == moment_brute(MomentQuery(kappa, 0, 1, n), table()));
      }
    }
    for (const std::int64_t kappa : {0, 2}) {
      REQUIRE(moment_brute(MomentQuery(kappa, 0, 1, n), table()) ==
              moment_brute(MomentQuery(kappa, 0, 3, n), table()) +
                  Rational(2) *
                      moment_brute(MomentQuery(kappa, 1, 3, n), table()));
    }
  }
}

TEST_CASE("zeroth moment closed form for M=1") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    REQUIRE(hcn::zeroth_m1_closed(n) ==
            moment_brute(MomentQuery(0, 0, 1, n), table()));
  }
}

TEST_CASE("lambda_direct examples") {
  CHECK(hcn::lambda_direct(1, 0, 3, 12) == Rational(0));
  CHECK(hcn::lambda_direct(1, 0, 3, 36) == Rational(6));
  CHECK(hcn::lambda_direct(3, 1, 3, 16) == Rational(40));
  CHECK(hcn::lambda_direct(1, 1, 4, 5) == Rational(1));  // (t,s)=(3,2), -m only
  CHECK(hcn::lambda_direct(1, 0, 2, 4) == Rational(2));  // s=0 half weight, both signs
  CHECK_THROWS_AS(hcn::lambda_direct(0, 0, 3, 4), std::domain_error);
}

TEST_CASE("lambda closed forms match the direct sums") {
  CHECK(hcn::lambda_closed_4n(0, 4) == Rational(0));
  CHECK(hcn::lambda_closed_4n(1, 4) == Rational(40));
  CHECK(hcn::lambda_closed_4n(0, 1) == Rational(0));
  CHECK(hcn::lambda_closed_12n(1) == Rational(0));
  CHECK(hcn::lambda_closed_12n(3) == Rational(6));
  CHECK(hcn::lambda_closed_12n(12) == Rational(24));
  CHECK(hcn::lambda_closed_12n(12) == hcn::lambda_direct(1, 0, 3, 144));
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (int m = 0; m < 3; ++m)
      REQUIRE(hcn::lambda_closed_4n(m, n) == hcn::lambda_direct(3, m, 3, 4 * n));
    REQUIRE(hcn::lambda_closed_12n(n) == hcn::lambda_direct(1, 0, 3, 12 * n));
  }
}

TEST_CASE("lambda_series coefficients") {
  const QSeries lam = hcn::lambda_series(3, 1, 3, 20);
  CHECK(lam.coeff(16) == Rational(40));
  CHECK(lam.coeff(0) == Rational(0));
  for (std::int64_t n = 1; n < 20; ++n)
    REQUIRE(lam.coeff(n) == hcn::lambda_direct(3, 1, 3, n));
}

TEST_CASE("pk_poly recurrence and generating-function oracle") {
  CHECK(hcn::pk_poly(0, Integer(9), Integer(4)) == Integer(1));
  CHECK(hcn::pk_poly(1, Integer(5), Integer(2)) == Integer(5));
  CHECK(hcn::pk_poly(2, Integer(3), Integer(2)) == Integer(7));
  // (1 - tX + nX^2) * sum p_j X^j = 1, coefficient-wise
  for (const std::int64_t t : {-3, 0, 2, 5}) {
    for (const std::int64_t n : {1, 2, 7}) {
      for (std::int64_t j = 2; j <= 10; ++j) {
        const Integer lhs = hcn::pk_poly(j, Integer(t), Integer(n)) -
                            Integer(t) * hcn::pk_poly(j - 1, Integer(t),
                                                      Integer(n)) +
                            Integer(n) * hcn::pk_poly(j - 2, Integer(t),
                                                      Integer(n));
        REQUIRE(lhs == Integer(0));
      }
    }
  }
}

TEST_CASE("bracket normalization constants") {
  CHECK(hcn::bracket_norm(0) == Rational(1));
  CHECK(hcn::bracket_norm(1) == Rational(1));
  CHECK(hcn::bracket_norm(2) == Rational(6));
  CHECK(hcn::bracket_norm(3) == Rational(60));
}

TEST_CASE("g_bracket examples") {
  CHECK(hcn::g_bracket(0, 0, 1, 5, table()) == Rational(10));
  CHECK(hcn::g_bracket(1, 0, 3, 1, table()) == Rational(-1));
  CHECK(hcn::g_bracket(1, 1, 3, 2, table()) == Rational(0));
  CHECK_THROWS_AS(hcn::g_bracket(1, 0, 3, 5000, HurwitzTable::build(100)),
                  std::out_of_range);
}

TEST_CASE("second-moment recursion") {
  CHECK(hcn::moment_recursion_second(0, 3, 1, table()) == Rational(0));
  CHECK(hcn::moment_recursion_second(1, 3, 2, table()) == Rational(3));
  CHECK(hcn::moment_recursion_second(0, 1, 5, table()) ==
        moment_brute(MomentQuery(2, 0, 1, 5), table()));
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (const std::int64_t M : {1, 3, 5}) {
      for (std::int64_t m = 0; m < M; ++m) {
        REQUIRE(hcn::moment_recursion_second(m, M, n, table()) ==
                moment_brute(MomentQuery(2, m, M, n), table()));
      }
    }
  }
}

TEST_CASE("pk calibration ratios") {
  const auto c0 = hcn::calibrate_pk(0, 0, 1, 50, table());
  CHECK(c0.consistent);
  CHECK(c0.ratio == Rational(1));
  const auto c1 = hcn::calibrate_pk(1, 0, 1, 50, table());
  CHECK(c1.consistent);
  CHECK(c1.ratio == Rational(2));
  const auto c2 = hcn::calibrate_pk(2, 0, 1, 50, table());
  CHECK(c2.consistent);
  CHECK(c2.ratio == Rational(1));
  const auto c3 = hcn::calibrate_pk(3, 0, 1, 30, table());
  CHECK(c3.consistent);
  CHECK(c3.ratio == frac(1, 3));
  // restricted residue classes calibrate identically
  const auto c1m = hcn::calibrate_pk(1, 1, 3, 40, table());
  CHECK(c1m.consistent);
  CHECK(c1m.ratio == Rational(2));
}

TEST_CASE("zeroth closed forms for M=3") {
  CHECK(hcn::zeroth_m3_closed(0, 1) == frac(1, 2));
  CHECK(hcn::zeroth_m3_closed(1, 2) == frac(3, 2));
  CHECK(hcn::zeroth_m3_closed(0, 3) == Rational(2));
  for (std::int64_t n = 1; n <= 300; ++n) {
    for (int m = 0; m < 3; ++m) {
      REQUIRE(hcn::zeroth_m3_closed(m, n) ==
              moment_brute(MomentQuery(0, m, 3, n), table()));
    }
  }
  CHECK_THROWS_AS(hcn::zeroth_m3_closed(3, 5), std::domain_error);
}

TEST_CASE("second-moment closed forms for M=3") {
  const QSeries eta = hcn::eta_quotient_pow8_v3(400);
  CHECK(hcn::second_m3_closed(0, 1, eta) == Rational(0));
  CHECK(hcn::second_m3_closed(1, 2, eta) == Rational(3));
  CHECK(hcn::second_m3_closed(0, 3, eta) == Rational(6));
  CHECK(hcn::second_m3_closed(1, 3, eta) == Rational(5));
  CHECK(hcn::second_m3_closed(1, 9, eta) == Rational(71));
  for (std::int64_t n = 1; n <= 300; ++n) {
    for (int m = 0; m < 3; ++m) {
      REQUIRE(hcn::second_m3_closed(m, n, eta) ==
              moment_brute(MomentQuery(2, m, 3, n), table()));
    }
  }
  // precision error surfaces when eta is too short
  CHECK_THROWS_AS(hcn::second_m3_closed(0, 400, eta), std::out_of_range);
}

TEST_CASE("prime-power closed forms") {
  const QSeries eta = hcn::eta_quotient_pow8_v3(2100);
  CHECK(hcn::second_prime_power_closed(1, 2, 1, eta) == Rational(3));
  CHECK(hcn::second_prime_power_closed(0, 2, 2, eta) == Rational(18));
  CHECK(hcn::second_prime_power_closed(0, 3, 1, eta) == Rational(6));
  CHECK_THROWS_AS(hcn::second_prime_power_closed(0, 6, 1, eta),
                  std::domain_error);
  CHECK_THROWS_AS(hcn::second_prime_power_closed(0, 2, 0, eta),
                  std::domain_error);
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13, 43}) {
    std::int64_t n = p;
    for (std::int64_t r = 1; n <= 2048; ++r, n *= p) {
      for (int m = 0; m < 3; ++m) {
        REQUIRE(hcn::second_prime_power_closed(m, p, r, eta) ==
                hcn::second_m3_closed(m, n, eta));
      }
      if (n > 2048 / p) break;
    }
  }
}

TEST_CASE("moment CSV emitter") {
  std::ostringstream os;
  hcn::write_moment_csv(os, 2, 3, 2, 2, table());
  CHECK(os.str() ==
        "2,0,3,2,0,1\n"
        "2,1,3,2,3,1\n"
        "2,2,3,2,3,1\n");
}
