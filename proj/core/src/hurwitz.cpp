#include "hcn/hurwitz.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hcn {

bool QuadraticForm::is_reduced() const {
  if (a <= 0 || discriminant() >= 0) return false;
  const std::int64_t ab = b < 0 ? -b : b;
  if (ab > a || a > c) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t D) {
  if (D >= 0) throw std::domain_error("reduced_forms: D must be negative");
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1)
    throw std::domain_error("reduced_forms: D must be 0 or 1 (mod 4)");
  std::vector<QuadraticForm> out;
  const std::int64_t absd = -D;
  for (std::int64_t b = (r == 0 ? 0 : 1); 3 * b * b <= absd; b += 2) {
    const std::int64_t m = (b * b + absd) / 4;  // = a*c
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= m; ++a) {
      if (m % a != 0) continue;
      const std::int64_t c = m / a;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  return out;
}

Rational hurwitz_class_number(std::int64_t n) {
  if (n < 0) throw std::domain_error("hurwitz_class_number: n must be >= 0");
  if (n == 0) return Rational(Integer(-1), Integer(12));
  if (n % 4 == 1 || n % 4 == 2) return Rational(0);
  Rational total(0);
  for (const QuadraticForm& f : reduced_forms(-n)) {
    if (f.a == f.b && f.b == f.c) {
      total += Rational(Integer(1), Integer(3));
    } else if (f.b == 0 && f.a == f.c) {
      total += Rational(Integer(1), Integer(2));
    } else {
      total += Rational(1);
    }
  }
  return total;
}

namespace {

// Accumulates 12*H over every reduced form whose b lies in a residue class,
// so the sweep splits cleanly across workers. Any reduced form satisfies
// 4ac - b^2 >= 3b^2, which bounds the b loop.
void sweep_b_class(std::int64_t max_n, int stride, int offset,
                   std::vector<std::int64_t>& acc) {
  for (std::int64_t b = offset; 3 * b * b <= max_n; b += stride) {
    for (std::int64_t a = std::max<std::int64_t>(b, 1);
         4 * a * a - b * b <= max_n; ++a) {
      for (std::int64_t c = a;; ++c) {
        const std::int64_t n = 4 * a * c - b * b;
        if (n > max_n) break;
        std::int64_t w;
        if (a == b && b == c) {
          w = 4;  // stabilizer of order 6
        } else if (b == 0 && a == c) {
          w = 6;  // stabilizer of order 4
        } else if (b == 0 || b == a || a == c) {
          w = 12;
        } else {
          w = 24;  // (a, b, c) and (a, -b, c) are distinct classes
        }
        acc[static_cast<std::size_t>(n)] += w;
      }
    }
  }
}

std::filesystem::path cache_path(std::int64_t max_n) {
  const char* dir = std::getenv("HCN_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) /
         ("hurwitz-" + std::to_string(max_n) + ".cache");
}

}  // namespace

HurwitzTable HurwitzTable::build(std::int64_t max_n, TableBuildOptions opts) {
  if (max_n < 0) throw std::domain_error("HurwitzTable: max_n must be >= 0");
  if (max_n > opts.max_cap)
    throw std::length_error("HurwitzTable: max_n exceeds configured cap");
  HurwitzTable t;
  t.max_n_ = max_n;
  t.twelve_h_.assign(static_cast<std::size_t>(max_n) + 1, 0);
  t.twelve_h_[0] = -1;

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || max_n < 4096) {
    sweep_b_class(max_n, 1, 0, t.twelve_h_);
  } else {
    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      partial[static_cast<std::size_t>(j)].assign(
          static_cast<std::size_t>(max_n) + 1, 0);
      workers.emplace_back(sweep_b_class, max_n, jobs, j,
                           std::ref(partial[static_cast<std::size_t>(j)]));
    }
    for (auto& w : workers) w.join();
    for (const auto& p : partial)
      for (std::size_t i = 0; i <= static_cast<std::size_t>(max_n); ++i)
        t.twelve_h_[i] += p[i];
  }
  return t;
}

HurwitzTable HurwitzTable::load_or_build(std::int64_t max_n,
                                         TableBuildOptions opts) {
  const auto path = cache_path(max_n);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      HurwitzTable t = read(in);
      if (t.max_n() == max_n) return t;
    } catch (const std::exception&) {
      // fall through and rebuild over the bad cache file
    }
  }
  HurwitzTable t = build(max_n, opts);
  if (!path.empty()) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (out) t.write(out);
  }
  return t;
}

Rational HurwitzTable::value(std::int64_t n) const {
  return Rational(Integer(twelve_times(n)), Integer(12));
}

std::int64_t HurwitzTable::twelve_times(std::int64_t n) const {
  if (!covers(n))
    throw std::out_of_range("HurwitzTable: n=" + std::to_string(n) +
                            " outside table range 0.." +
                            std::to_string(max_n_));
  return twelve_h_[static_cast<std::size_t>(n)];
}

void HurwitzTable::write(std::ostream& os) const {
  os << "HURWITZ v1 max=" << max_n_ << "\n";
  for (std::int64_t n = 0; n <= max_n_; ++n)
    os << n << "," << twelve_h_[static_cast<std::size_t>(n)] << "\n";
}

HurwitzTable HurwitzTable::read(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("HURWITZ v1 max=", 0) != 0)
    throw std::runtime_error("HurwitzTable: bad cache header");
  HurwitzTable t;
  t.max_n_ = std::stoll(header.substr(15));
  if (t.max_n_ < 0) throw std::runtime_error("HurwitzTable: bad max");
  t.twelve_h_.assign(static_cast<std::size_t>(t.max_n_) + 1, 0);
  std::string line;
  for (std::int64_t n = 0; n <= t.max_n_; ++n) {
    if (!std::getline(is, line))
      throw std::runtime_error("HurwitzTable: truncated cache file");
    const auto comma = line.find(',');
    if (comma == std::string::npos || std::stoll(line.substr(0, comma)) != n)
      throw std::runtime_error("HurwitzTable: malformed cache line");
    t.twelve_h_[static_cast<std::size_t>(n)] = std::stoll(line.substr(comma + 1));
  }
  t.validate();
  return t;
}

void HurwitzTable::validate() const {
  if (twelve_h_.empty() || twelve_h_[0] != -1)
    throw std::runtime_error("HurwitzTable: H(0) != -1/12");
  for (std::int64_t n = 1; n <= max_n_; ++n) {
    const std::int64_t v = twelve_h_[static_cast<std::size_t>(n)];
    if (n % 4 == 1 || n % 4 == 2) {
      if (v != 0)
        throw std::runtime_error("HurwitzTable: H(n) != 0 at n = 1,2 (mod 4)");
    } else if (v <= 0) {
      throw std::runtime_error("HurwitzTable: H(n) <= 0 at n > 0");
    }
  }
}

}  // namespace hcn
