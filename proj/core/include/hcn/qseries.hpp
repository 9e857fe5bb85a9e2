#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hcn/hurwitz.hpp"
#include "hcn/rational.hpp"

namespace hcn {

// Truncated formal power series in q with exact Rational coefficients.
// Coefficients are valid for exponents 0..prec-1; zero coefficients are
// never stored. Values are immutable in spirit: every operator returns a
// fresh series, and binary operators truncate to the smaller precision.
class QSeries {
 public:
  explicit QSeries(std::int64_t prec);

  std::int64_t prec() const { return prec_; }
  const std::map<std::int64_t, Rational>& terms() const { return coeffs_; }

  // Throws std::out_of_range for n < 0 or n >= prec: coefficients beyond
  // the precision bound do not exist.
  Rational coeff(std::int64_t n) const;
  void set_coeff(std::int64_t n, Rational v);

  QSeries truncated(std::int64_t new_prec) const;

  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator-(const QSeries& f, const QSeries& g);
  friend bool operator==(const QSeries& f, const QSeries& g) {
    return f.prec_ == g.prec_ && f.coeffs_ == g.coeffs_;
  }

 private:
  std::int64_t prec_;
  std::map<std::int64_t, Rational> coeffs_;
};

// Cauchy product truncated at min(f.prec, g.prec).
QSeries series_mul(const QSeries& f, const QSeries& g);
QSeries series_scale(const QSeries& f, const Rational& s);

// q d/dq (equivalently (1/2*pi*i) d/dtau on q-expansions).
QSeries series_derive(const QSeries& f);

// Coefficient extraction c(d*n) -> c(n); precision ceil(prec/d).
QSeries u_operator(const QSeries& f, std::int64_t d);
// Exponent dilation q -> q^d; precision d*prec.
QSeries v_operator(const QSeries& f, std::int64_t d);

// theta_{kappa,m,M} = sum over integers n = m (mod M) of n^kappa q^(n^2),
// all terms with n^2 < prec.
QSeries theta_series(std::int64_t kappa, std::int64_t m, std::int64_t M,
                     std::int64_t prec);

// q * prod_{n>=1} (1 - q^(3n))^8; coefficients vanish except at 1 (mod 3).
QSeries eta_quotient_pow8_v3(std::int64_t prec);

// E_2 = 1 - 24 sum sigma(n) q^n.
QSeries e2_series(std::int64_t prec);

// sum_{n<prec} H(n) q^n from a table covering prec-1.
QSeries hurwitz_generating_series(const HurwitzTable& table,
                                  std::int64_t prec);

// Generalized binomial alpha*(alpha-1)*...*(alpha-j+1)/j! as an exact value.
Rational binomial(const Rational& alpha, std::int64_t j);

// Rankin-Cohen bracket of weights kappa1, kappa2:
//   sum_{j=0..ell} (-1)^j C(kappa1+ell-1, ell-j) C(kappa2+ell-1, j)
//                  * derive^j(f) * derive^(ell-j)(g).
QSeries rc_bracket(const QSeries& f, const QSeries& g, std::int64_t ell,
                   const Rational& kappa1, const Rational& kappa2);

// "c0 + c1*q + c2*q^2 + ... + O(q^prec)".
std::string to_display_string(const QSeries& f);
// {"prec":N,"coeffs":{"n":"p/q"}} with keys in increasing exponent order.
std::string to_json(const QSeries& f);

}  // namespace hcn
