#include "hcn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hcn/arith.hpp"
#include "hcn/cusp.hpp"
#include "hcn/gauss.hpp"
#include "hcn/moments.hpp"

namespace hcn::verify {

namespace {

constexpr double kTol = 1e-9;

struct ParamSpec {
  const char* key;
  std::int64_t def;
  std::int64_t ci;
};

const std::map<std::string, std::vector<ParamSpec>>& param_specs() {
  static const std::map<std::string, std::vector<ParamSpec>> specs = {
      {"kronecker", {{"max", 500, 100}}},
      {"brown_calkin", {{"max", 500, 100}}},
      {"zeroth_m3", {{"max", 2000, 300}}},
      {"theorem1", {{"max", 2000, 300}}},
      {"primepower", {{"max", 20000, 300}}},
      {"recursion", {{"max", 2000, 300}, {"calib_max", 50, 50}}},
      {"lambda_forms", {{"max", 2000, 300}}},
      {"g1m3", {{"prec", 200, 60}}},
      {"e2_identity", {{"prec", 200, 60}}},
      {"gauss_closed", {{"max", 60, 24}}},
      {"theta_growth", {{"kmax", 48, 24}, {"mmax", 6, 6}}},
      {"cusp_consistency", {{"kmax", 36, 16}}},
      {"eis03_constant", {{"kmax", 24, 24}, {"count", 50, 50}, {"seed", 1, 1}}},
  };
  return specs;
}

std::int64_t resolve(const std::string& check_id, const Params& p,
                     const std::string& key) {
  if (const auto it = p.find(key); it != p.end()) return std::stoll(it->second);
  const bool ci = [&] {
    const auto it = p.find("profile");
    return it != p.end() && it->second == "ci";
  }();
  for (const ParamSpec& s : param_specs().at(check_id)) {
    if (key == s.key) return ci ? s.ci : s.def;
  }
  throw std::invalid_argument("verify: unknown parameter " + key);
}

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

struct Failure {
  Counterexample ce;
};

using MaybeFailure = std::optional<Failure>;

MaybeFailure fail(std::string input, std::string lhs, std::string rhs) {
  return Failure{Counterexample{std::move(input), std::move(lhs), std::move(rhs)}};
}

// ---- individual checks -------------------------------------------------

MaybeFailure check_kronecker(std::int64_t max, const HurwitzTable& t,
                             std::string& range) {
  const auto primes = primes_up_to(max);
  range = "primes p <= " + std::to_string(max) + " (" +
          std::to_string(primes.size()) + " primes), exact";
  for (const std::int64_t p : primes) {
    const Rational lhs = moment_brute(MomentQuery(0, 0, 1, p), t);
    const Rational rhs(2 * p);
    if (lhs != rhs)
      return fail("p=" + std::to_string(p), lhs.to_string(), rhs.to_string());
  }
  return std::nullopt;
}

MaybeFailure check_brown_calkin(std::int64_t max, const HurwitzTable& t,
                                std::string& range) {
  std::map<int, std::int64_t> per_residue;
  for (const std::int64_t p : primes_up_to(max)) {
    if (p == 5) continue;
    Rational expected;
    switch (p % 5) {
      case 1:
      case 2:
        expected = Rational(Integer(p + 1), Integer(3));
        break;
      case 3:
        expected = Rational(Integer(p - 1), Integer(2));
        break;
      default:
        expected = Rational(Integer(5) * Integer(p + 1), Integer(12));
        break;
    }
    const Rational got = moment_brute(MomentQuery(0, 1, 5, p), t);
    if (got != expected)
      return fail("p=" + std::to_string(p) + " (p%5=" + std::to_string(p % 5) +
                      ")",
                  got.to_string(), expected.to_string());
    ++per_residue[static_cast<int>(p % 5)];
  }
  std::ostringstream os;
  os << "primes p <= " << max << ", p != 5, exact; residues";
  for (const auto& [r, c] : per_residue) os << " " << r << "mod5:" << c;
  range = os.str();
  return std::nullopt;
}

MaybeFailure check_zeroth_m3(std::int64_t max, const HurwitzTable& t,
                             std::string& range) {
  range = "n <= " + std::to_string(max) + ", m in {0,1,2}, exact";
  for (std::int64_t n = 1; n <= max; ++n) {
    for (int m = 0; m < 3; ++m) {
      const Rational closed = zeroth_m3_closed(m, n);
      const Rational brute = moment_brute(MomentQuery(0, m, 3, n), t);
      if (closed != brute)
        return fail("n=" + std::to_string(n) + ", m=" + std::to_string(m),
                    closed.to_string(), brute.to_string());
    }
  }
  return std::nullopt;
}

MaybeFailure check_theorem1(std::int64_t max, const HurwitzTable& t,
                            std::string& range) {
  range = "n <= " + std::to_string(max) + ", m in {0,1,2}, exact";
  const QSeries eta = eta_quotient_pow8_v3(max + 1);
  for (std::int64_t n = 1; n <= max; ++n) {
    for (int m = 0; m < 3; ++m) {
      const Rational closed = second_m3_closed(m, n, eta);
      const Rational brute = moment_brute(MomentQuery(2, m, 3, n), t);
      if (closed != brute)
        return fail("n=" + std::to_string(n) + ", m=" + std::to_string(m),
                    closed.to_string(), brute.to_string());
    }
  }
  return std::nullopt;
}

MaybeFailure check_primepower(std::int64_t max, std::string& range) {
  const QSeries eta = eta_quotient_pow8_v3(max + 1);
  std::int64_t tuples = 0;
  for (const std::int64_t p : primes_up_to(max)) {
    std::int64_t n = p;
    for (std::int64_t r = 1; n <= max; ++r, n *= p) {
      for (int m = 0; m < 3; ++m) {
        const Rational corollary = second_prime_power_closed(m, p, r, eta);
        const Rational theorem = second_m3_closed(m, n, eta);
        if (corollary != theorem)
          return fail("p=" + std::to_string(p) + ", r=" + std::to_string(r) +
                          ", m=" + std::to_string(m),
                      corollary.to_string(), theorem.to_string());
        ++tuples;
      }
      if (n > max / p) break;  // next n would overflow the bound anyway
    }
  }
  range = "prime powers p^r <= " + std::to_string(max) + " (" +
          std::to_string(tuples) + " comparisons), exact";
  return std::nullopt;
}

MaybeFailure check_recursion(std::int64_t max, std::int64_t calib_max,
                             const HurwitzTable& t, std::string& range) {
  for (const std::int64_t M : {1, 3, 5}) {
    for (std::int64_t m = 0; m < M; ++m) {
      const QSeries g1 = bracket_g_series(1, m, M, max + 1, t);
      for (std::int64_t n = 1; n <= max; ++n) {
        const Rational lhs =
            Rational(Integer(1), Integer(2)) * g1.coeff(n) +
            Rational(n) * moment_brute(MomentQuery(0, m, M, n), t);
        const Rational rhs = moment_brute(MomentQuery(2, m, M, n), t);
        if (lhs != rhs)
          return fail("M=" + std::to_string(M) + ", m=" + std::to_string(m) +
                          ", n=" + std::to_string(n),
                      lhs.to_string(), rhs.to_string());
      }
    }
  }
  std::ostringstream os;
  os << "n <= " << max << ", M in {1,3,5}, all m, exact; calibration G/Taylor";
  for (const std::int64_t k : {0, 1, 2}) {
    const PkCalibration cal = calibrate_pk(k, 0, 1, calib_max, t);
    if (!cal.consistent)
      return fail("calibration k=" + std::to_string(k),
                  "ratio not constant over n <= " + std::to_string(calib_max),
                  "single constant");
    os << " k=" << k << ":"
       << (cal.ratio ? cal.ratio->to_string() : std::string("n/a"));
  }
  os << " stable over n <= " << calib_max;
  range = os.str();
  return std::nullopt;
}

MaybeFailure check_lambda_forms(std::int64_t max, std::string& range) {
  range = "n <= " + std::to_string(max) +
          ": lambda_{3,m,3}(4n) m in {0,1,2} and lambda_{1,0,3}(12n), exact";
  for (std::int64_t n = 1; n <= max; ++n) {
    for (int m = 0; m < 3; ++m) {
      const Rational closed = lambda_closed_4n(m, n);
      const Rational direct = lambda_direct(3, m, 3, 4 * n);
      if (closed != direct)
        return fail("lambda_{3," + std::to_string(m) + ",3}(4*" +
                        std::to_string(n) + ")",
                    closed.to_string(), direct.to_string());
    }
    const Rational closed12 = lambda_closed_12n(n);
    const Rational direct12 = lambda_direct(1, 0, 3, 12 * n);
    if (closed12 != direct12)
      return fail("lambda_{1,0,3}(12*" + std::to_string(n) + ")",
                  closed12.to_string(), direct12.to_string());
  }
  return std::nullopt;
}

MaybeFailure check_g1m3(std::int64_t prec, const HurwitzTable& t,
                        std::string& range) {
  range = "q-expansions to O(q^" + std::to_string(prec) +
          "), m in {0,1,2}, exact";
  const QSeries eta = eta_quotient_pow8_v3(prec);
  const QSeries g0 = g1m3_series(0, prec, t);
  if (g0 != series_scale(eta, Rational(-1)))
    return fail("g_{1,0,3} vs -eta8|V3 to O(q^" + std::to_string(prec) + ")",
                to_display_string(g0.truncated(std::min<std::int64_t>(prec, 8))),
                to_display_string(series_scale(eta, Rational(-1))
                                      .truncated(std::min<std::int64_t>(prec, 8))));
  const QSeries half_eta = series_scale(eta, Rational(Integer(1), Integer(2)));
  for (int m = 1; m <= 2; ++m) {
    const QSeries gm = g1m3_series(m, prec, t);
    if (gm != half_eta)
      return fail("g_{1," + std::to_string(m) + ",3} vs eta8|V3/2",
                  to_display_string(gm.truncated(std::min<std::int64_t>(prec, 8))),
                  to_display_string(half_eta.truncated(
                      std::min<std::int64_t>(prec, 8))));
  }
  if (prec > 19) {
    const std::pair<std::int64_t, std::int64_t> spots[] = {
        {1, -1}, {4, 8}, {7, -20}, {13, 70}, {16, -64}, {19, -56}};
    for (const auto& [n, expected] : spots) {
      if (g0.coeff(n) != Rational(expected))
        return fail("coefficient n=" + std::to_string(n),
                    g0.coeff(n).to_string(), std::to_string(expected));
    }
  }
  return std::nullopt;
}

MaybeFailure check_e2_identity(std::int64_t prec, const HurwitzTable& t,
                               std::string& range) {
  range = "q-expansions to O(q^" + std::to_string(prec) + "), exact";
  const QSeries lhs = e2_identity_lhs(prec, t);
  const QSeries rhs =
      series_scale(e2_series(prec), Rational(Integer(-1), Integer(12)));
  if (lhs != rhs)
    return fail("series equality to O(q^" + std::to_string(prec) + ")",
                to_display_string(lhs.truncated(std::min<std::int64_t>(prec, 6))),
                to_display_string(rhs.truncated(std::min<std::int64_t>(prec, 6))));
  for (std::int64_t n = 1; n < prec; ++n) {
    if (lhs.coeff(n) != Rational(Integer(2) * divisor_sum(n)))
      return fail("coefficient n=" + std::to_string(n),
                  lhs.coeff(n).to_string(),
                  (Integer(2) * divisor_sum(n)).to_string());
  }
  return std::nullopt;
}

MaybeFailure check_gauss_closed(std::int64_t max, std::string& range) {
  range = "c <= " + std::to_string(max) +
          ", |a|,|b| <= c, tol 1e-9*max(1,sqrt(c))";
  for (std::int64_t c = 1; c <= max; ++c) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(c));
    for (std::int64_t j = 0; j < c; ++j)
      roots[static_cast<std::size_t>(j)] = unity_root(j, c);
    const double tol = kTol * std::max(1.0, std::sqrt(static_cast<double>(c)));
    for (std::int64_t a = -c; a <= c; ++a) {
      for (std::int64_t b = -c; b <= c; ++b) {
        const CyclotomicSum s = gauss_brute(a, b, c);
        std::complex<double> brute{0.0, 0.0};
        for (std::int64_t j = 0; j < c; ++j) {
          if (s.mult[static_cast<std::size_t>(j)] != 0)
            brute += static_cast<double>(s.mult[static_cast<std::size_t>(j)]) *
                     roots[static_cast<std::size_t>(j)];
        }
        const std::complex<double> closed = gauss_closed(a, b, c);
        if (std::abs(brute - closed) >= tol)
          return fail("G(" + std::to_string(a) + "," + std::to_string(b) +
                          ";" + std::to_string(c) + ")",
                      fmt_complex(closed), fmt_complex(brute));
      }
    }
  }
  return std::nullopt;
}

MaybeFailure check_theta_growth(std::int64_t kmax, std::int64_t mmax,
                                std::string& range) {
  range = "M <= " + std::to_string(mmax) + ", k <= " + std::to_string(kmax) +
          ", |h| <= k coprime, m mod M, tol 1e-9*sqrt(g1*g2*k)";
  for (std::int64_t M = 1; M <= mmax; ++M) {
    for (std::int64_t k = 1; k <= kmax; ++k) {
      const std::int64_t g1 = std::gcd(M, k);
      const std::int64_t g2 = std::gcd(M, k / g1);
      const double tol =
          kTol * std::sqrt(static_cast<double>(g1 * g2 * k));
      for (std::int64_t h = -k; h <= k; ++h) {
        if (std::gcd(h == 0 ? k : h, k) != 1) continue;
        for (std::int64_t m = 0; m < M; ++m) {
          const std::complex<double> closed = theta_growth_closed(h, m, M, k);
          const std::int64_t a = (((h * M * M) % k) + k) % k;
          const std::int64_t b = (((2 * h * m * M) % k) + k) % k;
          const std::complex<double> brute =
              unity_root(h * m * m % k, k) * gauss_brute(a, b, k).eval();
          if (std::abs(closed - brute) >= tol)
            return fail("h=" + std::to_string(h) + ", m=" + std::to_string(m) +
                            ", M=" + std::to_string(M) +
                            ", k=" + std::to_string(k),
                        fmt_complex(closed), fmt_complex(brute));
        }
      }
    }
  }
  return std::nullopt;
}

MaybeFailure check_cusp_consistency(std::int64_t kmax, std::string& range) {
  range = "k <= " + std::to_string(kmax) +
          ", |h| <= k coprime, m in {0,1,2}, M=3, tol 1e-9";
  for (std::int64_t k = 1; k <= kmax; ++k) {
    for (std::int64_t h = -k; h <= k; ++h) {
      if (std::gcd(h == 0 ? k : h, k) != 1) continue;
      const CuspPoint p(h, k);
      for (std::int64_t m = 0; m < 3; ++m) {
        const std::complex<double> closed = c_mM(p, m, 3);
        const std::complex<double> pushed = push_u(
            4,
            [m](const CuspPoint& q) { return product_growth(q, m, 3); }, p);
        if (std::abs(closed - pushed) >= kTol)
          return fail("h=" + std::to_string(h) + ", k=" + std::to_string(k) +
                          ", m=" + std::to_string(m),
                      fmt_complex(closed), fmt_complex(pushed));
      }
    }
  }
  return std::nullopt;
}

MaybeFailure check_eis03_constant(std::int64_t kmax, std::int64_t count,
                                  std::uint64_t seed, std::string& range) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<std::int64_t, std::int64_t>> points;
  std::uniform_int_distribution<std::int64_t> kdist(1, kmax);
  while (std::ssize(points) < count) {
    const std::int64_t k = kdist(rng);
    std::uniform_int_distribution<std::int64_t> hdist(-k, k);
    const std::int64_t h = hdist(rng);
    if (std::gcd(h == 0 ? k : h, k) != 1) continue;
    points.emplace(h, k);
  }
  range = std::to_string(points.size()) + " cusp points, k <= " +
          std::to_string(kmax) + ", seed " + std::to_string(seed) +
          ", tol 1e-9";
  const std::complex<double> target(-1.0 / 12.0, 0.0);
  for (const auto& [h, k] : points) {
    const std::complex<double> val = push_u(
        3, [](const CuspPoint& q) { return c_mM(q, 0, 3); }, CuspPoint(h, k));
    if (std::abs(val - target) >= kTol)
      return fail("h=" + std::to_string(h) + ", k=" + std::to_string(k),
                  fmt_complex(val), "-1/12");
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> ids = {
      "kronecker",    "brown_calkin",     "zeroth_m3",
      "theorem1",     "primepower",       "recursion",
      "lambda_forms", "g1m3",             "e2_identity",
      "gauss_closed", "theta_growth",     "cusp_consistency",
      "eis03_constant"};
  return ids;
}

bool is_registered(const std::string& check_id) {
  const auto& ids = registered_checks();
  return std::find(ids.begin(), ids.end(), check_id) != ids.end();
}

QSeries g1m3_series(int m, std::int64_t prec, const HurwitzTable& table) {
  if (m < 0 || m > 2) throw std::domain_error("g1m3_series: m in {0,1,2}");
  const std::int64_t inner = 4 * prec - 3;
  const QSeries h = hurwitz_generating_series(table, inner);
  const QSeries theta = theta_series(0, m, 3, inner);
  const QSeries bracket =
      rc_bracket(h, theta, 1, Rational(Integer(3), Integer(2)),
                 Rational(Integer(1), Integer(2)));
  const QSeries lam = lambda_series(3, m, 3, inner);
  return u_operator(
      bracket + series_scale(lam, Rational(Integer(1), Integer(4))), 4);
}

QSeries e2_identity_lhs(std::int64_t prec, const HurwitzTable& table) {
  const std::int64_t inner = 12 * prec - 11;
  const QSeries h = hurwitz_generating_series(table, inner);
  const QSeries theta = theta_series(0, 0, 3, inner);
  const QSeries lam = lambda_series(1, 0, 3, inner);
  return u_operator(
      series_mul(h, theta) + series_scale(lam, Rational(Integer(1), Integer(2))),
      12);
}

std::int64_t table_requirement(const std::string& check_id, const Params& p) {
  if (!is_registered(check_id))
    throw std::invalid_argument("verify: unknown check " + check_id);
  if (check_id == "kronecker" || check_id == "brown_calkin" ||
      check_id == "zeroth_m3" || check_id == "theorem1")
    return 4 * resolve(check_id, p, "max");
  if (check_id == "recursion")
    return 4 * std::max(resolve(check_id, p, "max"),
                        resolve(check_id, p, "calib_max"));
  if (check_id == "g1m3") return 4 * resolve(check_id, p, "prec") - 4;
  if (check_id == "e2_identity") return 12 * resolve(check_id, p, "prec") - 12;
  return 0;
}

CheckReport run_check(const std::string& check_id, const Params& p) {
  const std::int64_t need = table_requirement(check_id, p);
  const HurwitzTable table = HurwitzTable::load_or_build(need);
  return run_check(check_id, p, table);
}

CheckReport run_check(const std::string& check_id, const Params& p,
                      const HurwitzTable& table) {
  if (!is_registered(check_id))
    throw std::invalid_argument("verify: unknown check " + check_id);
  CheckReport report;
  report.check_id = check_id;
  const auto start = std::chrono::steady_clock::now();

  MaybeFailure failure;
  if (check_id == "kronecker") {
    failure = check_kronecker(resolve(check_id, p, "max"), table, report.range);
  } else if (check_id == "brown_calkin") {
    failure =
        check_brown_calkin(resolve(check_id, p, "max"), table, report.range);
  } else if (check_id == "zeroth_m3") {
    failure = check_zeroth_m3(resolve(check_id, p, "max"), table, report.range);
  } else if (check_id == "theorem1") {
    failure = check_theorem1(resolve(check_id, p, "max"), table, report.range);
  } else if (check_id == "primepower") {
    failure = check_primepower(resolve(check_id, p, "max"), report.range);
  } else if (check_id == "recursion") {
    failure = check_recursion(resolve(check_id, p, "max"),
                              resolve(check_id, p, "calib_max"), table,
                              report.range);
  } else if (check_id == "lambda_forms") {
    failure = check_lambda_forms(resolve(check_id, p, "max"), report.range);
  } else if (check_id == "g1m3") {
    failure = check_g1m3(resolve(check_id, p, "prec"), table, report.range);
  } else if (check_id == "e2_identity") {
    failure =
        check_e2_identity(resolve(check_id, p, "prec"), table, report.range);
  } else if (check_id == "gauss_closed") {
    failure = check_gauss_closed(resolve(check_id, p, "max"), report.range);
  } else if (check_id == "theta_growth") {
    failure = check_theta_growth(resolve(check_id, p, "kmax"),
                                 resolve(check_id, p, "mmax"), report.range);
  } else if (check_id == "cusp_consistency") {
    failure = check_cusp_consistency(resolve(check_id, p, "kmax"), report.range);
  } else {
    failure = check_eis03_constant(
        resolve(check_id, p, "kmax"), resolve(check_id, p, "count"),
        static_cast<std::uint64_t>(resolve(check_id, p, "seed")), report.range);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report.passed = !failure.has_value();
  if (failure) report.counterexample = std::move(failure->ce);
  return report;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& ids,
                                   const SuiteOptions& opts) {
  std::int64_t need = 0;
  for (const auto& id : ids)
    need = std::max(need, table_requirement(id, opts.params));
  HurwitzTable::BuildOptions build_opts;
  build_opts.jobs = std::max(1, opts.jobs);
  const HurwitzTable table = HurwitzTable::load_or_build(need, build_opts);

  std::vector<CheckReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < ids.size();
         i = next.fetch_add(1)) {
      try {
        reports[i] = run_check(ids[i], opts.params, table);
      } catch (const std::exception& e) {
        reports[i].check_id = ids[i];
        reports[i].range = "aborted";
        reports[i].passed = false;
        reports[i].counterexample =
            Counterexample{"exception", e.what(), "completed run"};
      }
    }
  };
  const int jobs =
      std::clamp<int>(opts.jobs, 1, static_cast<int>(ids.size()) + 1);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    nlohmann::json item{{"check", r.check_id},
                        {"range", r.range},
                        {"passed", r.passed},
                        {"elapsed_seconds", r.elapsed_seconds}};
    if (r.counterexample) {
      item["counterexample"] = {{"input", r.counterexample->input},
                                {"lhs", r.counterexample->lhs},
                                {"rhs", r.counterexample->rhs}};
    } else {
      item["counterexample"] = nullptr;
    }
    arr.push_back(std::move(item));
  }
  return arr.dump(2);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "check,range,passed,elapsed_seconds,counterexample\n";
  for (const CheckReport& r : reports) {
    std::string ce;
    if (r.counterexample) {
      ce = "input " + r.counterexample->input + ": lhs " +
           r.counterexample->lhs + " vs rhs " + r.counterexample->rhs;
    }
    os << r.check_id << "," << csv_escape(r.range) << ","
       << (r.passed ? "true" : "false") << "," << r.elapsed_seconds << ","
       << csv_escape(ce) << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed; });
}

}  // namespace hcn::verify
