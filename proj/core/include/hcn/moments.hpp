#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "hcn/hurwitz.hpp"
#include "hcn/qseries.hpp"
#include "hcn/rational.hpp"

namespace hcn {

// Sum of t^kappa * H(4n - t^2) over integers t = m (mod M), t^2 <= 4n.
struct MomentQuery {
  std::int64_t kappa = 0;
  std::int64_t m = 0;  // stored reduced mod M
  std::int64_t M = 1;
  std::int64_t n = 1;

  MomentQuery(std::int64_t kappa_, std::int64_t m_, std::int64_t M_,
              std::int64_t n_);
};

// Exact brute-force moment; throws when the table does not cover 4n.
Rational moment_brute(const MomentQuery& q, const HurwitzTable& table);

// lambda_{ell,m,M}(n): over both sign choices and pairs 0 <= s < t with
// t^2 - s^2 = n and t = +-m (mod M), sum (t-s)^ell; s = 0 terms weigh 1/2.
Rational lambda_direct(std::int64_t ell, std::int64_t m, std::int64_t M,
                       std::int64_t n);

// Series with coefficient lambda_direct(ell, m, M, n) at q^n.
QSeries lambda_series(std::int64_t ell, std::int64_t m, std::int64_t M,
                      std::int64_t prec);

// Closed form of lambda_{3,m,3}(4n): half-weighted square term plus the
// divisor-cube sum over d | 4n, d^2 < 4n with d + 4n/d = +-2m (mod 6).
Rational lambda_closed_4n(int m, std::int64_t n);

// Closed form of lambda_{1,0,3}(12n) as a divisor sum plus square indicator.
Rational lambda_closed_12n(std::int64_t n);

// Coefficient of X^j in the Taylor expansion of (1 - tX + nX^2)^(-1):
// p_0 = 1, p_1 = t, p_j = t*p_{j-1} - n*p_{j-2}.
Integer pk_poly(std::int64_t j, const Integer& t, const Integer& n);

// Normalization constant dividing the n-th coefficient of the U4 bracket
// [H, theta_{0,m,M}]_k: 1 for k = 0, (2k)!/(2*k!) for k >= 1.
Rational bracket_norm(std::int64_t k);

// Series whose q^n coefficient is G_{k,m,M}(n), the normalized n-th
// coefficient of [H, theta_{0,m,M}]_k | U4. Needs table coverage 4*prec-4.
QSeries bracket_g_series(std::int64_t k, std::int64_t m, std::int64_t M,
                         std::int64_t prec, const HurwitzTable& table);

// Single G_{k,m,M}(n) through the bracket route.
Rational g_bracket(std::int64_t k, std::int64_t m, std::int64_t M,
                   std::int64_t n, const HurwitzTable& table);

// (1/2) G_{1,m,M}(n) + n * H_{0,m,M}(n); equals the brute second moment.
Rational moment_recursion_second(std::int64_t m, std::int64_t M,
                                 std::int64_t n, const HurwitzTable& table);

// Compares the Taylor-polynomial sum  sum p_{2k}(t,n) H(4n-t^2)  (t = m
// mod M) against G_{k,m,M}(n) over n <= max_n and reports the constant
// ratio when one exists. The ratio is reported, never applied.
struct PkCalibration {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t M = 1;
  std::int64_t samples = 0;        // n with a nonzero Taylor sum
  bool consistent = false;         // single ratio fits every n
  std::optional<Rational> ratio;   // G / Taylor when consistent
};
PkCalibration calibrate_pk(std::int64_t k, std::int64_t m, std::int64_t M,
                           std::int64_t max_n, const HurwitzTable& table);

// Closed zeroth moments H_{0,m,3}(n) by divisor sums, m in {0,1,2}.
Rational zeroth_m3_closed(int m, std::int64_t n);

// Closed zeroth moment for M = 1: 2*sigma(n) - sum min(d, n/d).
Rational zeroth_m1_closed(std::int64_t n);

// Closed second moments H_{2,m,3}(n); eta8v3 supplies the cusp-form
// coefficients a(n) (eta_quotient_pow8_v3 to precision > n).
Rational second_m3_closed(int m, std::int64_t n, const QSeries& eta8v3);

// Prime-power specialization of the second moment, p^r as the argument.
Rational second_prime_power_closed(int m, std::int64_t p, std::int64_t r,
                                   const QSeries& eta8v3);

// CSV rows "n,m,M,kappa,value_num,value_den" for n_lo..n_hi, all m mod M.
void write_moment_csv(std::ostream& os, std::int64_t kappa, std::int64_t M,
                      std::int64_t n_lo, std::int64_t n_hi,
                      const HurwitzTable& table);

}  // namespace hcn
