#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcn/integer.hpp"

namespace hcn {

// Number-theoretic scalar kernels. All functions are pure and re-entrant.

// Sum of divisors sigma(n). Throws std::domain_error for n <= 0.
Integer divisor_sum(std::int64_t n);

// Sum of d^e over divisors d | n with d^2 < n (d = sqrt(n) excluded).
Integer divisor_power_sum_below_sqrt(std::int64_t n, std::int64_t e);

// Sum of min(d, n/d) over divisors d | n.
Integer min_divisor_sum(std::int64_t n);

// Kronecker symbol (a|n), the standard extension of the Jacobi symbol
// to all integer lower arguments.
int kronecker_symbol(const Integer& a, const Integer& n);
int kronecker_symbol(std::int64_t a, std::int64_t n);

// Multiplicative inverse of a mod b, in [0, b). b = 1 gives 0.
// Throws std::domain_error when gcd(a, b) != 1 or b < 1.
Integer mod_inverse(const Integer& a, const Integer& b);
std::int64_t mod_inverse(std::int64_t a, std::int64_t b);

// The unit eps_d: 1 for d = 1 (mod 4), i for d = 3 (mod 4).
// Throws std::domain_error on even d.
std::complex<double> eps_unit(const Integer& d);
std::complex<double> eps_unit(std::int64_t d);

// sqrt(n) when n is a perfect square, nullopt otherwise. Integer-only.
std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<std::int64_t> exact_sqrt(std::int64_t n);

// All divisors of n in increasing order (trial division; desk scale).
std::vector<std::int64_t> divisors(std::int64_t n);

// Trial-division primality, adequate for the sweep ranges used here.
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Largest e with 2^e | n (n != 0).
int ord2(std::int64_t n);

}  // namespace hcn
