#include "hcn/moments.hpp"

#include <ostream>
#include <stdexcept>

#include "hcn/arith.hpp"

namespace hcn {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer cube(std::int64_t d) { return Integer::pow(Integer(d), 3); }

}  // namespace

MomentQuery::MomentQuery(std::int64_t kappa_, std::int64_t m_, std::int64_t M_,
                         std::int64_t n_)
    : kappa(kappa_), M(M_), n(n_) {
  if (kappa_ < 0) throw std::domain_error("MomentQuery: kappa must be >= 0");
  if (M_ < 1) throw std::domain_error("MomentQuery: M must be >= 1");
  if (n_ < 1) throw std::domain_error("MomentQuery: n must be >= 1");
  m = ((m_ % M_) + M_) % M_;
}

Rational moment_brute(const MomentQuery& q, const HurwitzTable& table) {
  if (!table.covers(4 * q.n))
    throw std::out_of_range("moment_brute: table does not cover 4n = " +
                            std::to_string(4 * q.n));
  const std::int64_t tmax = isqrt_floor(4 * q.n);
  Integer twelve_sum(0);
  for (std::int64_t t = -tmax; t <= tmax; ++t) {
    if (((t - q.m) % q.M + q.M) % q.M != 0) continue;
    const std::int64_t h12 = table.twelve_times(4 * q.n - t * t);
    if (h12 == 0) continue;
    twelve_sum += Integer::pow(Integer(t),
                               static_cast<std::uint64_t>(q.kappa)) *
                  Integer(h12);
  }
  return Rational(twelve_sum, Integer(12));
}

Rational lambda_direct(std::int64_t ell, std::int64_t m, std::int64_t M,
                       std::int64_t n) {
  if (ell < 1) throw std::domain_error("lambda_direct: ell must be >= 1");
  if (M < 1) throw std::domain_error("lambda_direct: M must be >= 1");
  if (n < 1) throw std::domain_error("lambda_direct: n must be >= 1");
  // Pairs 0 <= s < t with t^2 - s^2 = n correspond to d = t - s running
  // over divisors of n with d^2 <= n and d = n/d (mod 2).
  Integer doubled(0);
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t e = n / d;
    if ((e - d) % 2 != 0) continue;
    const std::int64_t t = (d + e) / 2;
    const std::int64_t s = (e - d) / 2;
    const Integer dpow = Integer::pow(Integer(d), static_cast<std::uint64_t>(ell));
    for (const int sign : {1, -1}) {
      if (((t - sign * m) % M + M) % M != 0) continue;
      doubled += s == 0 ? dpow : dpow * Integer(2);
    }
  }
  return Rational(doubled, Integer(2));
}

QSeries lambda_series(std::int64_t ell, std::int64_t m, std::int64_t M,
                      std::int64_t prec) {
  QSeries out(prec);
  for (std::int64_t n = 1; n < prec; ++n)
    out.set_coeff(n, lambda_direct(ell, m, M, n));
  return out;
}

Rational lambda_closed_4n(int m, std::int64_t n) {
  if (m < 0 || m > 2) throw std::domain_error("lambda_closed_4n: m in {0,1,2}");
  if (n < 1) throw std::domain_error("lambda_closed_4n: n must be >= 1");
  Integer doubled(0);
  if (const auto root = exact_sqrt(n)) {
    const std::int64_t t0 = 2 * *root;  // (4n)^{3/2} = t0^3
    for (const int sign : {1, -1}) {
      if (((t0 - sign * m) % 3 + 3) % 3 == 0) doubled += cube(t0);
    }
  }
  for (std::int64_t d = 1; d * d < 4 * n; ++d) {
    if ((4 * n) % d != 0) continue;
    const std::int64_t rem = d + 4 * n / d;
    for (const int sign : {1, -1}) {
      if (((rem - sign * 2 * m) % 6 + 6) % 6 == 0)
        doubled += cube(d) * Integer(2);
    }
  }
  return Rational(doubled, Integer(2));
}

Rational lambda_closed_12n(std::int64_t n) {
  if (n < 1) throw std::domain_error("lambda_closed_12n: n must be >= 1");
  Integer total(0);
  if (n % 3 == 0)
    total += Integer(12) * divisor_power_sum_below_sqrt(n / 3, 1);
  if (const auto root = exact_sqrt(12 * n)) total += Integer(*root);
  return Rational(total);
}

Integer pk_poly(std::int64_t j, const Integer& t, const Integer& n) {
  if (j < 0) throw std::domain_error("pk_poly: j must be >= 0");
  Integer prev(1);  // p_0
  if (j == 0) return prev;
  Integer cur = t;  // p_1
  for (std::int64_t i = 2; i <= j; ++i) {
    Integer next = t * cur - n * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational bracket_norm(std::int64_t k) {
  if (k < 0) throw std::domain_error("bracket_norm: k must be >= 0");
  if (k == 0) return Rational(1);
  Integer two_k_fact(1);
  for (std::int64_t i = 2; i <= 2 * k; ++i) two_k_fact *= Integer(i);
  Integer k_fact(1);
  for (std::int64_t i = 2; i <= k; ++i) k_fact *= Integer(i);
  return Rational(two_k_fact, Integer(2) * k_fact);
}

QSeries bracket_g_series(std::int64_t k, std::int64_t m, std::int64_t M,
                         std::int64_t prec, const HurwitzTable& table) {
  if (k < 0) throw std::domain_error("bracket_g_series: k must be >= 0");
  const std::int64_t inner_prec = 4 * prec - 3;
  const QSeries h = hurwitz_generating_series(table, inner_prec);
  const QSeries theta = theta_series(0, m, M, inner_prec);
  const QSeries bracket =
      rc_bracket(h, theta, k, Rational(Integer(3), Integer(2)),
                 Rational(Integer(1), Integer(2)));
  return series_scale(u_operator(bracket, 4), Rational(1) / bracket_norm(k));
}

Rational g_bracket(std::int64_t k, std::int64_t m, std::int64_t M,
                   std::int64_t n, const HurwitzTable& table) {
  if (n < 1) throw std::domain_error("g_bracket: n must be >= 1");
  return bracket_g_series(k, m, M, n + 1, table).coeff(n);
}

Rational moment_recursion_second(std::int64_t m, std::int64_t M,
                                 std::int64_t n, const HurwitzTable& table) {
  return Rational(Integer(1), Integer(2)) * g_bracket(1, m, M, n, table) +
         Rational(n) * moment_brute(MomentQuery(0, m, M, n), table);
}

PkCalibration calibrate_pk(std::int64_t k, std::int64_t m, std::int64_t M,
                           std::int64_t max_n, const HurwitzTable& table) {
  PkCalibration cal;
  cal.k = k;
  cal.m = ((m % M) + M) % M;
  cal.M = M;
  const QSeries g = bracket_g_series(k, m, M, max_n + 1, table);
  cal.consistent = true;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    Integer twelve_taylor(0);
    const std::int64_t tmax = isqrt_floor(4 * n);
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
      if (((t - cal.m) % M + M) % M != 0) continue;
      const std::int64_t h12 = table.twelve_times(4 * n - t * t);
      if (h12 == 0) continue;
      twelve_taylor += pk_poly(2 * k, Integer(t), Integer(n)) * Integer(h12);
    }
    const Rational taylor(twelve_taylor, Integer(12));
    const Rational bracket = g.coeff(n);
    if (taylor.is_zero()) {
      if (!bracket.is_zero()) cal.consistent = false;
      continue;
    }
    ++cal.samples;
    const Rational r = bracket / taylor;
    if (!cal.ratio) {
      cal.ratio = r;
    } else if (*cal.ratio != r) {
      cal.consistent = false;
    }
  }
  return cal;
}

Rational zeroth_m3_closed(int m, std::int64_t n) {
  if (m < 0 || m > 2) throw std::domain_error("zeroth_m3_closed: m in {0,1,2}");
  if (n < 1) throw std::domain_error("zeroth_m3_closed: n must be >= 1");
  const Rational half(Integer(1), Integer(2));
  if (n % 3 != 0) {
    const Rational sigma(divisor_sum(n));
    if (m == 0) {
      if (n % 3 == 1) return half * sigma;
      return sigma - Rational(Integer(2) * divisor_power_sum_below_sqrt(n, 1));
    }
    if (n % 3 == 1)
      return Rational(Integer(3), Integer(4)) * sigma -
             half * Rational(min_divisor_sum(n));
    return half * sigma;
  }
  const std::int64_t u = n / 3;
  Rational res(0);
  if (m == 0) {
    res += Rational(Integer(2) * divisor_sum(u));
    if (u % 3 == 0)
      res -= Rational(Integer(6) * divisor_power_sum_below_sqrt(u / 3, 1));
    if (const auto root = exact_sqrt(12 * u)) res -= Rational(*root / 2);
  } else {
    res += Rational(divisor_sum(3 * u)) - Rational(divisor_sum(u));
    res -= half * Rational(min_divisor_sum(3 * u));
    if (u % 3 == 0)
      res += Rational(Integer(3) * divisor_power_sum_below_sqrt(u / 3, 1));
    if (const auto root = exact_sqrt(12 * u))
      res += Rational(Integer(*root), Integer(4));
  }
  return res;
}

Rational zeroth_m1_closed(std::int64_t n) {
  return Rational(Integer(2) * divisor_sum(n)) - Rational(min_divisor_sum(n));
}

Rational second_m3_closed(int m, std::int64_t n, const QSeries& eta8v3) {
  if (m < 0 || m > 2) throw std::domain_error("second_m3_closed: m in {0,1,2}");
  if (n < 1) throw std::domain_error("second_m3_closed: n must be >= 1");
  const Rational half(Integer(1), Integer(2));
  const Rational quarter(Integer(1), Integer(4));
  const Rational nr{Integer(n)};
  const auto root = exact_sqrt(n);
  const Integer n32 = root ? Integer::pow(Integer(*root), 3) : Integer(0);

  Rational res(0);
  if (n % 3 != 0) {
    if (m != 0 && root) res -= half * Rational(n32);
    const Integer s3 = divisor_power_sum_below_sqrt(n, 3);
    if (m == 0 && n % 3 == 2) res -= Rational(Integer(2) * s3);
    if (m != 0 && n % 3 == 1) res -= Rational(s3);
    const Rational sigma(divisor_sum(n));
    if (m == 0 && n % 3 == 1) {
      res += half * nr * sigma - half * eta8v3.coeff(n);
    } else if (m == 0) {
      res += nr * sigma -
             Rational(Integer(2)) * nr *
                 Rational(divisor_power_sum_below_sqrt(n, 1));
    } else if (n % 3 == 1) {
      res += Rational(Integer(3), Integer(4)) * nr * sigma -
             half * nr * Rational(min_divisor_sum(n)) +
             quarter * eta8v3.coeff(n);
    } else {
      res += half * nr * sigma;
    }
    return res;
  }

  // 3 | n
  if (m == 0 && root) res -= Rational(n32);
  if (m == 0) {
    if (n % 9 == 0)
      res -= Rational(Integer(54) * divisor_power_sum_below_sqrt(n / 9, 3));
    res += Rational(Integer(2)) * nr * Rational(divisor_sum(n / 3));
    if (n % 9 == 0)
      res -= Rational(Integer(6)) * nr *
             Rational(divisor_power_sum_below_sqrt(n / 9, 1));
    if (root) res -= Rational(n32);
  } else {
    Integer s3 = divisor_power_sum_below_sqrt(n, 3);
    Integer s3_both(0);  // divisors with 3 | d and 3 | n/d
    for (std::int64_t d = 1; d * d < n; ++d) {
      if (n % d == 0 && d % 3 == 0 && (n / d) % 3 == 0) s3_both += cube(d);
    }
    res -= Rational(s3 - s3_both);
    res += nr * (Rational(divisor_sum(n)) - Rational(divisor_sum(n / 3)));
    res -= half * nr * Rational(min_divisor_sum(n));
    if (n % 9 == 0)
      res += Rational(Integer(3)) * nr *
             Rational(divisor_power_sum_below_sqrt(n / 9, 1));
    if (root) res += half * Rational(n32);
  }
  return res;
}

Rational second_prime_power_closed(int m, std::int64_t p, std::int64_t r,
                                   const QSeries& eta8v3) {
  if (m < 0 || m > 2)
    throw std::domain_error("second_prime_power_closed: m in {0,1,2}");
  if (!is_prime(p))
    throw std::domain_error("second_prime_power_closed: p must be prime");
  if (r < 1) throw std::domain_error("second_prime_power_closed: r must be >= 1");

  const auto ppow = [&](std::int64_t e) {
    return Integer::pow(Integer(p), static_cast<std::uint64_t>(e));
  };
  const Rational half(Integer(1), Integer(2));
  const Rational quarter(Integer(1), Integer(4));

  if (p == 3) {
    const auto tpow = [&](std::int64_t e) {
      return Rational(Integer::pow(Integer(3), static_cast<std::uint64_t>(e)));
    };
    if (m == 0) {
      Rational res(0);
      if (r % 2 == 0) res -= Rational(Integer(2)) * tpow(3 * r / 2);
      res -= Rational(Integer(27), Integer(13)) *
             (tpow(3 * ((r - 1) / 2)) - Rational(1));
      res += tpow(r) * (tpow(r) - Rational(1));
      res -= tpow(r + 1) * (tpow((r - 1) / 2) - Rational(1));
      return res;
    }
    Rational res = Rational(-1) + tpow(2 * r);
    res -= half * tpow(r) * (tpow((r + 1) / 2) - Rational(1));
    res += half * tpow(r + 1) * (tpow((r - 1) / 2) - Rational(1));
    return res;
  }

  const std::int64_t n = Integer::pow(Integer(p), static_cast<std::uint64_t>(r))
                             .to_int64();
  const Rational sigma_r =
      Rational(ppow(r + 1) - Integer(1), Integer(p) - Integer(1));
  const Rational prn{ppow(r)};
  // geometric pieces of the displayed case formulas
  const Rational low_divs =
      Rational(ppow((r + 1) / 2) - Integer(1), Integer(p) - Integer(1));
  const Rational cube_divs =
      Rational(ppow(3 * (r / 2) + 3) - Integer(1), ppow(3) - Integer(1));

  const bool even_r = r % 2 == 0;
  if (m == 0) {
    if (p % 3 == 1 || even_r)
      return half * prn * sigma_r - half * eta8v3.coeff(n);
    return Rational(-2) *
               Rational(ppow((3 * r + 3) / 2) - Integer(1),
                        ppow(3) - Integer(1)) +
           prn * sigma_r - Rational(2) * prn * low_divs;
  }
  if (p % 3 == 1 || even_r)
    return -cube_divs + Rational(Integer(3), Integer(4)) * prn * sigma_r -
           prn * low_divs + quarter * eta8v3.coeff(n);
  return half * prn * sigma_r;
}

void write_moment_csv(std::ostream& os, std::int64_t kappa, std::int64_t M,
                      std::int64_t n_lo, std::int64_t n_hi,
                      const HurwitzTable& table) {
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t m = 0; m < M; ++m) {
      const Rational v = moment_brute(MomentQuery(kappa, m, M, n), table);
      os << n << "," << m << "," << M << "," << kappa << ","
         << v.num().to_string() << "," << v.den().to_string() << "\n";
    }
  }
}

}  // namespace hcn
