#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hcn {

// e^(2 pi i x / c), with x reduced mod c in exact arithmetic first.
std::complex<double> unity_root(std::int64_t x, std::int64_t c);

// A sum of c-th roots of unity held exactly: mult[j] counts e_c(j).
// This is the ground truth the closed forms are compared against.
struct CyclotomicSum {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> mult;

  std::complex<double> eval() const;
};

// G(a,b;c) = sum over l mod c of e_c(a l^2 + b l), tallied exactly.
CyclotomicSum gauss_brute(std::int64_t a, std::int64_t b, std::int64_t c);

// Closed-form G(a,b;c): gcd extraction, CRT split into odd and 2-power
// parts, then the odd-modulus and 2-power evaluations. Total function.
std::complex<double> gauss_closed(std::int64_t a, std::int64_t b,
                                  std::int64_t c);

// Closed form of e_k(h m^2) * G(h M^2, 2 h m M; k), the quantity
// controlling the growth of theta_{m,M} at the cusp h/k. Five-case
// evaluation keyed on the 2-adic splitting of M, m and k/(g1 g2) with
// g1 = gcd(M, k), g2 = gcd(M, k/g1). Throws unless gcd(h, k) = 1.
// Inputs with ord2(m) > ord2(M) fall back to the generic pipeline.
std::complex<double> theta_growth_closed(std::int64_t h, std::int64_t m,
                                         std::int64_t M, std::int64_t k);

}  // namespace hcn
