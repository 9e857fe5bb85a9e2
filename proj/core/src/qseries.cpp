#include "hcn/qseries.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hcn/arith.hpp"

namespace hcn {

QSeries::QSeries(std::int64_t prec) : prec_(prec) {
  if (prec < 1) throw std::domain_error("QSeries: prec must be >= 1");
}

Rational QSeries::coeff(std::int64_t n) const {
  if (n < 0 || n >= prec_)
    throw std::out_of_range("QSeries: coefficient " + std::to_string(n) +
                            " beyond precision O(q^" + std::to_string(prec_) +
                            ")");
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QSeries::set_coeff(std::int64_t n, Rational v) {
  if (n < 0 || n >= prec_)
    throw std::out_of_range("QSeries: exponent outside [0, prec)");
  if (v.is_zero()) {
    coeffs_.erase(n);
  } else {
    coeffs_[n] = std::move(v);
  }
}

QSeries QSeries::truncated(std::int64_t new_prec) const {
  if (new_prec > prec_)
    throw std::out_of_range("QSeries: cannot raise precision by truncation");
  QSeries out(new_prec);
  for (const auto& [e, c] : coeffs_) {
    if (e >= new_prec) break;
    out.coeffs_.emplace(e, c);
  }
  return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  QSeries out(std::min(f.prec_, g.prec_));
  for (const auto& [e, c] : f.coeffs_) {
    if (e >= out.prec_) break;
    out.coeffs_.emplace(e, c);
  }
  for (const auto& [e, c] : g.coeffs_) {
    if (e >= out.prec_) break;
    auto [it, inserted] = out.coeffs_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

QSeries operator-(const QSeries& f, const QSeries& g) {
  return f + series_scale(g, Rational(-1));
}

QSeries series_mul(const QSeries& f, const QSeries& g) {
  const std::int64_t prec = std::min(f.prec(), g.prec());
  std::vector<Rational> acc(static_cast<std::size_t>(prec));
  for (const auto& [i, fc] : f.terms()) {
    if (i >= prec) break;
    for (const auto& [j, gc] : g.terms()) {
      if (i + j >= prec) break;
      acc[static_cast<std::size_t>(i + j)] += fc * gc;
    }
  }
  QSeries out(prec);
  for (std::int64_t e = 0; e < prec; ++e) {
    if (!acc[static_cast<std::size_t>(e)].is_zero())
      out.set_coeff(e, std::move(acc[static_cast<std::size_t>(e)]));
  }
  return out;
}

QSeries series_scale(const QSeries& f, const Rational& s) {
  QSeries out(f.prec());
  if (s.is_zero()) return out;
  for (const auto& [e, c] : f.terms()) out.set_coeff(e, c * s);
  return out;
}

QSeries series_derive(const QSeries& f) {
  QSeries out(f.prec());
  for (const auto& [e, c] : f.terms()) {
    if (e != 0) out.set_coeff(e, c * Rational(e));
  }
  return out;
}

QSeries u_operator(const QSeries& f, std::int64_t d) {
  if (d < 1) throw std::domain_error("u_operator: d must be >= 1");
  QSeries out((f.prec() + d - 1) / d);
  for (const auto& [e, c] : f.terms()) {
    if (e % d == 0) out.set_coeff(e / d, c);
  }
  return out;
}

QSeries v_operator(const QSeries& f, std::int64_t d) {
  if (d < 1) throw std::domain_error("v_operator: d must be >= 1");
  QSeries out(f.prec() * d);
  for (const auto& [e, c] : f.terms()) out.set_coeff(e * d, c);
  return out;
}

QSeries theta_series(std::int64_t kappa, std::int64_t m, std::int64_t M,
                     std::int64_t prec) {
  if (M < 1) throw std::domain_error("theta_series: M must be >= 1");
  if (kappa < 0) throw std::domain_error("theta_series: kappa must be >= 0");
  QSeries out(prec);
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) < prec) ++bound;
  for (std::int64_t n = -bound; n <= bound; ++n) {
    if (((n - m) % M + M) % M != 0) continue;
    const std::int64_t e = n * n;
    Rational c = out.coeff(e) + Rational(Integer::pow(
                                    Integer(n), static_cast<std::uint64_t>(kappa)));
    out.set_coeff(e, std::move(c));
  }
  return out;
}

namespace {

// Euler's pentagonal expansion of prod_{n>=1} (1 - x^n) mod x^px: the
// coefficient at k(3k-1)/2 and k(3k+1)/2 is (-1)^k, everything else 0.
// Seeding the power chain with this keeps every intermediate coefficient
// at its true (small) size; the partial products of the raw factor-by-
// factor route overflow 64 bits long before the cancellation completes.
std::vector<std::int64_t> pentagonal_product(std::int64_t px) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(px), 0);
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t e1 = k * (3 * k - 1) / 2;
    if (k > 0 && e1 >= px) break;
    const std::int64_t sign = k % 2 == 0 ? 1 : -1;
    if (e1 < px) a[static_cast<std::size_t>(e1)] += sign;
    const std::int64_t e2 = k * (3 * k + 1) / 2;
    if (k > 0 && e2 < px) a[static_cast<std::size_t>(e2)] += sign;
  }
  return a;
}

std::vector<std::int64_t> square_poly(const std::vector<std::int64_t>& a) {
  // 128-bit accumulation; only the final coefficients must fit int64.
  std::vector<__int128> acc(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      if (a[j] == 0) continue;
      acc[i + j] += static_cast<__int128>(a[i]) * a[j];
    }
  }
  std::vector<std::int64_t> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (acc[i] > std::numeric_limits<std::int64_t>::max() ||
        acc[i] < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("eta coefficient overflow");
    out[i] = static_cast<std::int64_t>(acc[i]);
  }
  return out;
}

}  // namespace

QSeries eta_quotient_pow8_v3(std::int64_t prec) {
  if (prec < 2) throw std::domain_error("eta_quotient_pow8_v3: prec must be >= 2");
  // Work in x = q^3: need prod (1-x^n)^8 mod x^px, then map x^j -> q^(3j+1).
  const std::int64_t px = (prec + 1) / 3;
  const auto a = pentagonal_product(px);
  const auto a2 = square_poly(a);
  const auto a4 = square_poly(a2);
  const auto a8 = square_poly(a4);
  QSeries out(prec);
  for (std::int64_t j = 0; j < px; ++j) {
    if (3 * j + 1 < prec && a8[static_cast<std::size_t>(j)] != 0)
      out.set_coeff(3 * j + 1, Rational(a8[static_cast<std::size_t>(j)]));
  }
  return out;
}

QSeries e2_series(std::int64_t prec) {
  QSeries out(prec);
  out.set_coeff(0, Rational(1));
  for (std::int64_t n = 1; n < prec; ++n)
    out.set_coeff(n, Rational(divisor_sum(n) * Integer(-24)));
  return out;
}

QSeries hurwitz_generating_series(const HurwitzTable& table,
                                  std::int64_t prec) {
  if (!table.covers(prec - 1))
    throw std::out_of_range(
        "hurwitz_generating_series: table covers only 0.." +
        std::to_string(table.max_n()) + ", need " + std::to_string(prec - 1));
  QSeries out(prec);
  for (std::int64_t n = 0; n < prec; ++n) {
    const std::int64_t v = table.twelve_times(n);
    if (v != 0) out.set_coeff(n, Rational(Integer(v), Integer(12)));
  }
  return out;
}

Rational binomial(const Rational& alpha, std::int64_t j) {
  if (j < 0) throw std::domain_error("binomial: j must be >= 0");
  Rational num(1);
  Integer fact(1);
  for (std::int64_t i = 0; i < j; ++i) {
    num *= alpha - Rational(i);
    fact *= Integer(i + 1);
  }
  return num / Rational(fact);
}

QSeries rc_bracket(const QSeries& f, const QSeries& g, std::int64_t ell,
                   const Rational& kappa1, const Rational& kappa2) {
  if (ell < 0) throw std::domain_error("rc_bracket: ell must be >= 0");
  std::vector<QSeries> df{f}, dg{g};
  for (std::int64_t j = 1; j <= ell; ++j) {
    df.push_back(series_derive(df.back()));
    dg.push_back(series_derive(dg.back()));
  }
  QSeries out(std::min(f.prec(), g.prec()));
  for (std::int64_t j = 0; j <= ell; ++j) {
    Rational w = binomial(kappa1 + Rational(ell - 1), ell - j) *
                 binomial(kappa2 + Rational(ell - 1), j);
    if (j % 2 == 1) w = -w;
    if (w.is_zero()) continue;
    out = out + series_scale(series_mul(df[static_cast<std::size_t>(j)],
                                        dg[static_cast<std::size_t>(ell - j)]),
                             w);
  }
  return out;
}

std::string to_display_string(const QSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit_coeff = mag == Rational(1) && e != 0;
    if (!unit_coeff) os << mag.to_string();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << f.prec() << ")";
  return os.str();
}

std::string to_json(const QSeries& f) {
  std::ostringstream os;
  os << "{\"prec\":" << f.prec() << ",\"coeffs\":{";
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << ",";
    first = false;
    os << "\"" << e << "\":\"" << c.to_string_exact() << "\"";
  }
  os << "}}";
  return os.str();
}

}  // namespace hcn
