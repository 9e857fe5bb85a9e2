#include "hcn/gauss.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hcn/arith.hpp"
#include "hcn/integer.hpp"

namespace hcn {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::int64_t mod_floor64(const Integer& x, std::int64_t m) {
  return Integer::mod_floor(x, Integer(m)).to_int64();
}

std::complex<double> conj_unit(std::complex<double> z) { return std::conj(z); }

}  // namespace

std::complex<double> unity_root(std::int64_t x, std::int64_t c) {
  if (c < 1) throw std::domain_error("unity_root: c must be >= 1");
  const std::int64_t r = ((x % c) + c) % c;
  const double angle = 2.0 * std::numbers::pi *
                       (static_cast<double>(r) / static_cast<double>(c));
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> CyclotomicSum::eval() const {
  std::complex<double> total{0.0, 0.0};
  for (std::int64_t j = 0; j < modulus; ++j) {
    const std::int64_t w = mult[static_cast<std::size_t>(j)];
    if (w != 0) total += static_cast<double>(w) * unity_root(j, modulus);
  }
  return total;
}

CyclotomicSum gauss_brute(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (c < 1) throw std::domain_error("gauss_brute: c must be >= 1");
  CyclotomicSum s;
  s.modulus = c;
  s.mult.assign(static_cast<std::size_t>(c), 0);
  const std::int64_t ar = ((a % c) + c) % c;
  const std::int64_t br = ((b % c) + c) % c;
  for (std::int64_t l = 0; l < c; ++l) {
    const __int128 e = (static_cast<__int128>(ar) * l * l +
                        static_cast<__int128>(br) * l) %
                       c;
    ++s.mult[static_cast<std::size_t>(e)];
  }
  return s;
}

std::complex<double> gauss_closed(std::int64_t a, std::int64_t b,
                                  std::int64_t c) {
  if (c < 1) throw std::domain_error("gauss_closed: c must be >= 1");
  const std::int64_t g = std::gcd(a == 0 ? c : (a < 0 ? -a : a), c);
  if (b % g != 0) return {0.0, 0.0};
  const double scale = static_cast<double>(g);
  const std::int64_t a1 = a / g;
  const std::int64_t b1 = b / g;
  const std::int64_t c1 = c / g;
  if (c1 == 1) return {scale, 0.0};
  // gcd(a1, c1) = 1 from here on.
  const int beta = ord2(c1);
  const std::int64_t c_odd = c1 >> beta;

  std::complex<double> odd_part{1.0, 0.0};
  if (c_odd > 1) {
    // G(a1*2^beta, b1; c_odd) with the odd-modulus closed form.
    const Integer aa = Integer(a1) * Integer(std::int64_t{1} << beta);
    const std::int64_t inv4a = mod_inverse(mod_floor64(aa * Integer(4), c_odd),
                                           c_odd);
    const std::int64_t b_red = ((b1 % c_odd) + c_odd) % c_odd;
    const std::int64_t expo =
        mod_floor64(Integer(-inv4a) * Integer(b_red) * Integer(b_red), c_odd);
    odd_part = eps_unit(c_odd) *
               static_cast<double>(kronecker_symbol(aa, Integer(c_odd))) *
               unity_root(expo, c_odd) *
               std::sqrt(static_cast<double>(c_odd));
  }

  std::complex<double> two_part{1.0, 0.0};
  if (beta >= 1) {
    const std::int64_t pw = std::int64_t{1} << beta;
    const Integer aa2 = Integer(a1) * Integer(c_odd);  // odd
    if (b1 % 2 != 0) {
      two_part = beta == 1 ? std::complex<double>{2.0, 0.0}
                           : std::complex<double>{0.0, 0.0};
    } else if (beta == 1) {
      two_part = {0.0, 0.0};  // G(odd, 0; 2) = 0
    } else {
      const std::int64_t inv = mod_inverse(mod_floor64(aa2, pw), pw);
      const std::int64_t half_b = ((b1 / 2) % pw + pw) % pw;
      const std::int64_t expo =
          mod_floor64(Integer(-inv) * Integer(half_b) * Integer(half_b), pw);
      two_part = unity_root(expo, pw) * (1.0 + kI) * conj_unit(eps_unit(aa2)) *
                 static_cast<double>(kronecker_symbol(Integer(pw), aa2)) *
                 std::pow(2.0, static_cast<double>(beta) / 2.0);
    }
  }
  return scale * odd_part * two_part;
}

std::complex<double> theta_growth_closed(std::int64_t h, std::int64_t m,
                                         std::int64_t M, std::int64_t k) {
  if (k < 1) throw std::domain_error("theta_growth_closed: k must be >= 1");
  if (M < 1) throw std::domain_error("theta_growth_closed: M must be >= 1");
  if (std::gcd(h == 0 ? k : (h < 0 ? -h : h), k) != 1)
    throw std::domain_error("theta_growth_closed: gcd(h, k) must be 1");

  const auto generic = [&]() {
    const Integer a = Integer(h) * Integer(M) * Integer(M);
    const Integer b = Integer(2) * Integer(h) * Integer(m) * Integer(M);
    const Integer e = Integer(h) * Integer(m) * Integer(m);
    return unity_root(mod_floor64(e, k), k) *
           gauss_closed(mod_floor64(a, k), mod_floor64(b, k), k);
  };

  if (m == 0) return generic();
  const int alpha = ord2(M);
  const int gamma = ord2(m);
  if (alpha < gamma) return generic();  // outside the lemma's hypothesis

  const std::int64_t g1 = std::gcd(M, k);
  const std::int64_t g2 = std::gcd(M, k / g1);
  if ((2 * m) % g2 != 0) return {0.0, 0.0};

  const std::int64_t q = k / (g1 * g2);
  const int beta = ord2(q);
  const std::int64_t k0 = q >> beta;
  const Integer A = Integer::div_exact(Integer(h) * Integer(M) * Integer(M),
                                       Integer(g1) * Integer(g2));
  const double root = std::sqrt(static_cast<double>(g1) *
                                static_cast<double>(g2) *
                                static_cast<double>(k));

  if (beta == 0) {
    const std::int64_t den = 4 * g1 / g2;
    const std::int64_t invk0 = mod_inverse(k0 % den, den);
    const std::int64_t u = (2 * m / g2) % den;
    const std::int64_t expo =
        mod_floor64(Integer(h) * Integer(u) * Integer(u) * Integer(invk0), den);
    return root * eps_unit(k0) *
           static_cast<double>(kronecker_symbol(A, Integer(k0))) *
           unity_root(expo, den);
  }

  assert(gamma == alpha || gamma == alpha - 1);
  if (beta == 1 && gamma == alpha) return {0.0, 0.0};
  if (beta >= 2 && gamma == alpha - 1) return {0.0, 0.0};

  if (beta == 1) {  // gamma == alpha - 1
    const std::int64_t den = 8 * g1 / g2;
    const std::int64_t invk0 = mod_inverse(k0 % den, den);
    const std::int64_t u = (2 * m / g2) % den;
    const std::int64_t expo =
        mod_floor64(Integer(h) * Integer(u) * Integer(u) * Integer(invk0), den);
    return root * std::numbers::sqrt2 * eps_unit(k0) *
           static_cast<double>(
               kronecker_symbol(Integer(2) * A, Integer(k0))) *
           unity_root(expo, den);
  }

  // beta >= 2 and gamma == alpha: the 2-power part contributes
  // (1+i) eps^{-1} and Kronecker factors on top of the odd part.
  const Integer pw = Integer::pow(Integer(2), static_cast<std::uint64_t>(beta));
  const std::int64_t den = g1 / g2;  // odd
  std::complex<double> expo_factor{1.0, 0.0};
  if (den > 1) {
    const std::int64_t invq = mod_inverse(mod_floor64(pw * Integer(k0), den),
                                          den);
    const std::int64_t u = (m / g2) % den;
    const std::int64_t expo =
        mod_floor64(Integer(h) * Integer(u) * Integer(u) * Integer(invq), den);
    expo_factor = unity_root(expo, den);
  }
  return root * (1.0 + kI) * eps_unit(k0) *
         conj_unit(eps_unit(Integer(k0) * A)) *
         static_cast<double>(kronecker_symbol(pw * A, Integer(k0))) *
         static_cast<double>(kronecker_symbol(pw, Integer(k0) * A)) *
         expo_factor;
}

}  // namespace hcn
