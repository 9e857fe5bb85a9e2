#pragma once

#include <complex>
#include <cstdint>
#include <functional>

namespace hcn {

// A rational cusp h/k with gcd(h,k) = 1 and k >= 1.
struct CuspPoint {
  std::int64_t h;
  std::int64_t k;

  CuspPoint(std::int64_t h_, std::int64_t k_);  // validates the invariant
  // Reduce an arbitrary fraction to a valid cusp point.
  static CuspPoint reduced(std::int64_t h_, std::int64_t k_);
};

// lim_{z->0+} z^(3/2) Hhat(h/k + iz/k):
//   k odd:          (h|k) eps_k^{-1} / (48 sqrt 2)
//   k = 2 (mod 4):  0
//   4 | k:          i^(-1/2) eps_h (k|h) / 12      (principal branch)
std::complex<double> hhat_growth(const CuspPoint& p);

// lim_{z->0+} sqrt(z) theta_{m,M}(h/k + iz/k)
//   = e_k(h m^2) G(h M^2, 2 h m M; k) / (M sqrt(2k)).
std::complex<double> theta_growth(const CuspPoint& p, std::int64_t m,
                                  std::int64_t M);

// C_f(h/k) := -lim z^2 f(h/k + iz/k) for f = theta_{m,M} * Hhat; the
// z-powers 1/2 and 3/2 combine to weight two.
std::complex<double> product_growth(const CuspPoint& p, std::int64_t m,
                                    std::int64_t M);

// Growth constant of f|U_d from the constants of a translation-invariant f:
// (1/d) sum_{j mod d} g_j^2 C((h+kj)/g_j / (kd/g_j)), g_j = gcd(h+kj, d).
std::complex<double> push_u(
    std::int64_t d,
    const std::function<std::complex<double>(const CuspPoint&)>& growth,
    const CuspPoint& p);

// The three-case closed form c_{m,M}(h,k) for the growth constant of
// (theta_{m,M} Hhat)|U_4, split on k even / k = 1 (mod 4) / k = 3 (mod 4).
// i^(3/2) = e^(3 pi i/4) on the principal branch throughout.
std::complex<double> c_mM(const CuspPoint& p, std::int64_t m, std::int64_t M);

}  // namespace hcn
