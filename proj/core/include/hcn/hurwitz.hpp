#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hcn/rational.hpp"

namespace hcn {

// Positive-definite integral binary quadratic form a*x^2 + b*xy + c*y^2.
struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  // Reduced: |b| <= a <= c, with b >= 0 whenever |b| == a or a == c.
  bool is_reduced() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Exactly one representative per SL2(Z)-class of positive-definite forms of
// discriminant D. Throws std::domain_error unless D < 0 and D = 0, 1 (mod 4).
std::vector<QuadraticForm> reduced_forms(std::int64_t D);

// Hurwitz class number H(n): class count for discriminant -n weighted by
// 1/2 for forms proportional to (1,0,1) and 1/3 for (1,1,1).
// H(0) = -1/12; H(n) = 0 for n = 1, 2 (mod 4). Throws on n < 0.
Rational hurwitz_class_number(std::int64_t n);

struct TableBuildOptions {
  int jobs = 1;
  std::int64_t max_cap = 20000000;  // memory guard
};

// Immutable table of H(0..max_n), built by one sweep over (a, b, c) triples.
// 12*H(n) is an integer for every n; that integer is what is stored.
class HurwitzTable {
 public:
  using BuildOptions = TableBuildOptions;

  static HurwitzTable build(std::int64_t max_n,
                            TableBuildOptions opts = TableBuildOptions());

  // Honors HCN_CACHE_DIR: load a valid cache file when present, otherwise
  // build and (when the env var is set) write one. Unset means no caching.
  static HurwitzTable load_or_build(std::int64_t max_n,
                                    TableBuildOptions opts = TableBuildOptions());

  std::int64_t max_n() const { return max_n_; }
  bool covers(std::int64_t n) const { return n >= 0 && n <= max_n_; }

  Rational value(std::int64_t n) const;  // throws when n is out of range
  std::int64_t twelve_times(std::int64_t n) const;

  // Cache format: header "HURWITZ v1 max=<N>", then one "<n>,<12*H(n)>"
  // line per n in order.
  void write(std::ostream& os) const;
  static HurwitzTable read(std::istream& is);  // validates invariants

 private:
  HurwitzTable() = default;
  void validate() const;

  std::int64_t max_n_ = -1;
  std::vector<std::int64_t> twelve_h_;
};

}  // namespace hcn
