#include "hcn/cusp.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hcn/arith.hpp"
#include "hcn/gauss.hpp"
#include "hcn/integer.hpp"

namespace hcn {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> i_pow(std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// i^(3/2) and i^(-1/2), principal branch.
const std::complex<double> kI32 = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
const std::complex<double> kIm12 = std::polar(1.0, -std::numbers::pi / 4.0);

std::int64_t mod_floor64(const Integer& x, std::int64_t m) {
  return Integer::mod_floor(x, Integer(m)).to_int64();
}

std::complex<double> gauss_reduced(const Integer& a, const Integer& b,
                                   std::int64_t c) {
  return gauss_closed(mod_floor64(a, c), mod_floor64(b, c), c);
}

}  // namespace

CuspPoint::CuspPoint(std::int64_t h_, std::int64_t k_) : h(h_), k(k_) {
  if (k < 1) throw std::domain_error("CuspPoint: k must be >= 1");
  if (std::gcd(h, k) != 1)
    throw std::domain_error("CuspPoint: gcd(h, k) must be 1");
}

CuspPoint CuspPoint::reduced(std::int64_t h_, std::int64_t k_) {
  if (k_ == 0) throw std::domain_error("CuspPoint: k must be nonzero");
  if (k_ < 0) {
    h_ = -h_;
    k_ = -k_;
  }
  const std::int64_t g = h_ == 0 ? k_ : std::gcd(h_, k_);
  return CuspPoint(h_ / g, k_ / g);
}

std::complex<double> hhat_growth(const CuspPoint& p) {
  if (p.k % 2 == 1) {
    return (1.0 / (48.0 * std::numbers::sqrt2)) *
           static_cast<double>(kronecker_symbol(p.h, p.k)) *
           std::conj(eps_unit(p.k));
  }
  if (p.k % 4 == 2) return {0.0, 0.0};
  return (kIm12 / 12.0) * eps_unit(p.h) *
         static_cast<double>(kronecker_symbol(p.k, p.h));
}

std::complex<double> theta_growth(const CuspPoint& p, std::int64_t m,
                                  std::int64_t M) {
  return theta_growth_closed(p.h, m, M, p.k) /
         (static_cast<double>(M) * std::sqrt(2.0 * static_cast<double>(p.k)));
}

std::complex<double> product_growth(const CuspPoint& p, std::int64_t m,
                                    std::int64_t M) {
  return -theta_growth(p, m, M) * hhat_growth(p);
}

std::complex<double> push_u(
    std::int64_t d,
    const std::function<std::complex<double>(const CuspPoint&)>& growth,
    const CuspPoint& p) {
  if (d < 1) throw std::domain_error("push_u: d must be >= 1");
  std::complex<double> total{0.0, 0.0};
  for (std::int64_t j = 0; j < d; ++j) {
    const std::int64_t hj = p.h + p.k * j;
    const std::int64_t g = hj == 0 ? d : std::gcd(hj, d);
    total += static_cast<double>(g) * static_cast<double>(g) *
             growth(CuspPoint::reduced(hj / g, p.k * d / g));
  }
  return total / static_cast<double>(d);
}

std::complex<double> c_mM(const CuspPoint& p, std::int64_t m, std::int64_t M) {
  if (M < 1) throw std::domain_error("c_mM: M must be >= 1");
  const std::int64_t h = p.h;
  const std::int64_t k = p.k;
  const double Md = static_cast<double>(M);

  if (k % 2 == 0) {
    const std::complex<double> pref =
        kI32 / (96.0 * Md * std::sqrt(2.0 * static_cast<double>(k)));
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t j = 0; j < 4; ++j) {
      const Integer hj = Integer(h) + Integer(k) * Integer(j);
      // e_{4k}((h+kj) m^2), the theta exponential at the inner cusp
      const std::complex<double> ej = unity_root(
          mod_floor64(hj * Integer(m) * Integer(m), 4 * k), 4 * k);
      sum += eps_unit(hj) *
             static_cast<double>(kronecker_symbol(Integer(k), hj)) * ej *
             gauss_reduced(hj * Integer(M) * Integer(M),
                           Integer(2) * hj * Integer(m) * Integer(M), 4 * k);
    }
    return pref * sum;
  }

  // k odd. B := (h - h k^2)/4 is integral since k^2 = 1 (mod 8).
  const Integer hmk2 = Integer(h) - Integer(h) * Integer(k) * Integer(k);
  if (mod_floor64(hmk2, 4) != 0)
    throw std::logic_error("c_mM: (h - h k^2)/4 not integral");
  const Integer B = Integer::div_exact(hmk2, Integer(4));
  const std::int64_t inv4 = mod_inverse(((4 % k) + k) % k, k);
  const std::complex<double> e1 = unity_root(
      mod_floor64(Integer(inv4) * Integer(h) * Integer(m) * Integer(m), k), k);

  const std::complex<double> first =
      -(e1 / (24.0 * Md * std::sqrt(static_cast<double>(k)))) *
      static_cast<double>(kronecker_symbol(h, k)) * std::conj(eps_unit(k)) *
      gauss_reduced(B * Integer(M) * Integer(M),
                    Integer(2) * B * Integer(m) * Integer(M), k);

  const std::complex<double> pref =
      kI32 * e1 / (96.0 * Md * std::sqrt(2.0 * static_cast<double>(k)));
  std::complex<double> sum{0.0, 0.0};
  for (const std::int64_t j : {std::int64_t{1}, std::int64_t{3}}) {
    const Integer arg =
        hmk2 + Integer(k) * Integer(k) * Integer(j);  // h - h k^2 + k^2 j
    const std::complex<double> gj =
        gauss_reduced(arg * Integer(M) * Integer(M),
                      Integer(2) * arg * Integer(m) * Integer(M), 4 * k);
    if (k % 4 == 1) {
      sum += i_pow(m * m * j) * eps_unit(j) * gj;
    } else {
      sum += i_pow(-m * m * j) * std::conj(eps_unit(j)) * gj;
    }
  }
  const double symbol = k % 4 == 1
                            ? static_cast<double>(kronecker_symbol(k, h))
                            : static_cast<double>(kronecker_symbol(-k, h));
  return first + pref * symbol * sum;
}

}  // namespace hcn
