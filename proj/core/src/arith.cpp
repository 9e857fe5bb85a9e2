#include "hcn/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace hcn {

namespace {

void require_positive(std::int64_t n, const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": n must be >= 1");
}

}  // namespace

Integer divisor_sum(std::int64_t n) {
  require_positive(n, "divisor_sum");
  Integer total(0);
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += Integer(d);
    const std::int64_t q = n / d;
    if (q != d) total += Integer(q);
  }
  return total;
}

Integer divisor_power_sum_below_sqrt(std::int64_t n, std::int64_t e) {
  require_positive(n, "divisor_power_sum_below_sqrt");
  if (e < 0)
    throw std::domain_error("divisor_power_sum_below_sqrt: e must be >= 0");
  Integer total(0);
  for (std::int64_t d = 1; d * d < n; ++d) {
    if (n % d == 0) total += Integer::pow(Integer(d), static_cast<std::uint64_t>(e));
  }
  return total;
}

Integer min_divisor_sum(std::int64_t n) {
  require_positive(n, "min_divisor_sum");
  Integer total(0);
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    // d <= n/d here, so min(d, n/d) = d; the cofactor q = n/d >= d
    // contributes min(q, n/q) = d as well, except when q == d.
    total += Integer(d);
    if (d != n / d) total += Integer(d);
  }
  return total;
}

int kronecker_symbol(const Integer& a, const Integer& n) {
  return mpz_kronecker(a.raw(), n.raw());
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  return kronecker_symbol(Integer(a), Integer(n));
}

Integer mod_inverse(const Integer& a, const Integer& b) {
  if (b.sign() < 1) throw std::domain_error("mod_inverse: b must be >= 1");
  if (b == Integer(1)) return Integer(0);
  Integer r;
  if (mpz_invert(r.raw(), a.raw(), b.raw()) == 0)
    throw std::domain_error("mod_inverse: gcd(a, b) != 1");
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t b) {
  return mod_inverse(Integer(a), Integer(b)).to_int64();
}

std::complex<double> eps_unit(const Integer& d) {
  if (d.is_even()) throw std::domain_error("eps_unit: d must be odd");
  const Integer m = Integer::mod_floor(d, Integer(4));
  return m == Integer(1) ? std::complex<double>(1.0, 0.0)
                         : std::complex<double>(0.0, 1.0);
}

std::complex<double> eps_unit(std::int64_t d) { return eps_unit(Integer(d)); }

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n.sign() < 0) throw std::domain_error("exact_sqrt: n must be >= 0");
  if (mpz_perfect_square_p(n.raw()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.raw(), n.raw());
  return r;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  const auto r = exact_sqrt(Integer(n));
  if (!r) return std::nullopt;
  return r->to_int64();
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (!sieve[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q <= n; q += p)
      sieve[static_cast<std::size_t>(q)] = false;
  }
  return out;
}

int ord2(std::int64_t n) {
  if (n == 0) throw std::domain_error("ord2: n must be nonzero");
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

}  // namespace hcn
