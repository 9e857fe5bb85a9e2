#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>
#include <random>

#include "hcn/gauss.hpp"

using hcn::CyclotomicSum;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("unity_root") {
  CHECK(close(hcn::unity_root(0, 5), {1.0, 0.0}));
  CHECK(close(hcn::unity_root(1, 4), {0.0, 1.0}));
  CHECK(close(hcn::unity_root(-1, 4), {0.0, -1.0}));
  CHECK(close(hcn::unity_root(7, 4), {0.0, -1.0}));
  CHECK_THROWS_AS(hcn::unity_root(1, 0), std::domain_error);
}

TEST_CASE("gauss_brute examples and invariants") {
  const CyclotomicSum trivial = hcn::gauss_brute(5, -3, 1);
  CHECK(trivial.mult == std::vector<std::int64_t>{1});
  CHECK(close(trivial.eval(), {1.0, 0.0}));

  CHECK(close(hcn::gauss_brute(1, 0, 4).eval(), {2.0, 2.0}));
  CHECK(close(hcn::gauss_brute(1, 0, 3).eval(), {0.0, std::sqrt(3.0)}));
  CHECK(close(hcn::gauss_brute(3, 0, 4).eval(), {2.0, -2.0}));
  CHECK_THROWS_AS(hcn::gauss_brute(1, 1, 0), std::domain_error);

  for (std::int64_t c = 1; c <= 20; ++c) {
    for (std::int64_t a = -c; a <= c; ++a) {
      for (std::int64_t b = -c; b <= c; ++b) {
        const CyclotomicSum s = hcn::gauss_brute(a, b, c);
        std::int64_t total = 0;
        for (const std::int64_t w : s.mult) total += w;
        REQUIRE(total == c);  // one root of unity per residue
        // periodicity in both arguments
        REQUIRE(close(s.eval(), hcn::gauss_brute(a + c, b + c, c).eval()));
      }
    }
  }
}

TEST_CASE("gauss_closed examples") {
  CHECK(close(hcn::gauss_closed(2, 1, 4), {0.0, 0.0}));  // gcd(2,4) divides 1? no
  CHECK(close(hcn::gauss_closed(1, 1, 2), {2.0, 0.0}));
  CHECK(close(hcn::gauss_closed(1, 0, 4), {2.0, 2.0}));
  CHECK(close(hcn::gauss_closed(3, 0, 4), {2.0, -2.0}));
  CHECK(close(hcn::gauss_closed(0, 0, 6), {6.0, 0.0}));
  CHECK(close(hcn::gauss_closed(0, 2, 6), {0.0, 0.0}));
  CHECK(close(hcn::gauss_closed(3, 0, 8),
              {-2.0 * std::sqrt(2.0), 2.0 * std::sqrt(2.0)}));
  CHECK_THROWS_AS(hcn::gauss_closed(1, 1, 0), std::domain_error);
}

TEST_CASE("gauss closed vs brute sweep") {
  for (std::int64_t c = 1; c <= 30; ++c) {
    const double tol = 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(c)));
    for (std::int64_t a = -c; a <= c; ++a) {
      for (std::int64_t b = -c; b <= c; ++b) {
        REQUIRE(std::abs(hcn::gauss_brute(a, b, c).eval() -
                         hcn::gauss_closed(a, b, c)) < tol);
      }
    }
  }
}

TEST_CASE("odd-modulus magnitude sqrt(c)") {
  for (std::int64_t c = 1; c <= 49; c += 2) {
    for (std::int64_t a = 1; a <= c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      REQUIRE(std::abs(hcn::gauss_brute(a, 0, c).eval()) ==
              doctest::Approx(std::sqrt(static_cast<double>(c))).epsilon(1e-9));
    }
  }
}

TEST_CASE("theta_growth_closed examples") {
  CHECK(close(hcn::theta_growth_closed(1, 0, 1, 1), {1.0, 0.0}));
  CHECK(close(hcn::theta_growth_closed(1, 1, 3, 2),
              hcn::unity_root(1, 2) * hcn::gauss_brute(9, 6, 2).eval()));
  CHECK(close(hcn::theta_growth_closed(1, 1, 3, 2), {0.0, 0.0}));
  CHECK(close(hcn::theta_growth_closed(1, 0, 3, 9),
              hcn::gauss_brute(81, 0, 9).eval()));  // g1*g2 = 9 branch
  CHECK(close(hcn::theta_growth_closed(3, 1, 1, 4), {2.0, -2.0}));
  CHECK_THROWS_AS(hcn::theta_growth_closed(2, 0, 1, 4), std::domain_error);
  CHECK_THROWS_AS(hcn::theta_growth_closed(1, 0, 1, 0), std::domain_error);
}

TEST_CASE("randomized closed vs brute at larger moduli") {
  std::mt19937 rng(12021);
  for (int trial = 0; trial < 4000; ++trial) {
    std::uniform_int_distribution<std::int64_t> cdist(1, 512);
    const std::int64_t c = cdist(rng);
    std::uniform_int_distribution<std::int64_t> coeff(-3 * c, 3 * c);
    const std::int64_t a = coeff(rng);
    const std::int64_t b = coeff(rng);
    const double tol = 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(c)));
    REQUIRE(std::abs(hcn::gauss_brute(a, b, c).eval() -
                     hcn::gauss_closed(a, b, c)) < tol);
  }
}

TEST_CASE("randomized theta growth at larger M and k") {
  std::mt19937 rng(40499);
  std::uniform_int_distribution<std::int64_t> Mdist(1, 16);
  std::uniform_int_distribution<std::int64_t> kdist(1, 96);
  int accepted = 0;
  while (accepted < 3000) {
    const std::int64_t M = Mdist(rng);
    const std::int64_t k = kdist(rng);
    std::uniform_int_distribution<std::int64_t> hdist(-k, k);
    std::uniform_int_distribution<std::int64_t> mdist(-2 * M, 2 * M);
    const std::int64_t h = hdist(rng);
    const std::int64_t m = mdist(rng);
    if (std::gcd(h == 0 ? k : h, k) != 1) continue;
    ++accepted;
    const std::int64_t g1 = std::gcd(M, k);
    const std::int64_t g2 = std::gcd(M, k / g1);
    const double tol =
        1e-9 * std::sqrt(static_cast<double>(g1) * static_cast<double>(g2) *
                         static_cast<double>(k));
    const std::complex<double> brute =
        hcn::unity_root(h * m * m, k) *
        hcn::gauss_brute(h * M * M, 2 * h * m * M, k).eval();
    REQUIRE(std::abs(hcn::theta_growth_closed(h, m, M, k) - brute) < tol);
  }
}

TEST_CASE("theta_growth_closed vs brute, including the alpha < gamma fallback") {
  for (std::int64_t M = 1; M <= 6; ++M) {
    for (std::int64_t k = 1; k <= 24; ++k) {
      const std::int64_t g1 = std::gcd(M, k);
      const std::int64_t g2 = std::gcd(M, k / g1);
      const double tol =
          1e-9 * std::sqrt(static_cast<double>(g1) * static_cast<double>(g2) *
                           static_cast<double>(k));
      for (std::int64_t h = -k; h <= k; ++h) {
        if (std::gcd(h == 0 ? k : h, k) != 1) continue;
        for (std::int64_t m = -M; m <= 2 * M; ++m) {  // includes ord2(m) > ord2(M)
          const std::complex<double> brute =
              hcn::unity_root(h * m * m % k, k) *
              hcn::gauss_brute((h * M * M) % k, (2 * h * m * M) % k, k).eval();
          REQUIRE(std::abs(hcn::theta_growth_closed(h, m, M, k) - brute) < tol);
        }
      }
    }
  }
}
