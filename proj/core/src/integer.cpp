#include "hcn/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace hcn {

Integer::Integer(std::string_view decimal) {
  mpz_init(z_);
  if (mpz_set_str(z_, std::string(decimal).c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("Integer: cannot parse \"" +
                                std::string(decimal) + "\"");
  }
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer: division by zero");
  Integer r;
  mpz_tdiv_q(r.z_, a.z_, b.z_);
  return r;
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer: division by zero");
  Integer r;
  mpz_tdiv_r(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::mod_floor(const Integer& a, const Integer& m) {
  if (m.sign() <= 0) throw std::domain_error("Integer: mod_floor needs m > 0");
  Integer r;
  mpz_fdiv_r(r.z_, a.z_, m.z_);
  return r;
}

Integer Integer::div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer: division by zero");
  Integer r;
  mpz_divexact(r.z_, a.z_, b.z_);
  return r;
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("Integer: does not fit int64");
  return static_cast<std::int64_t>(mpz_get_si(z_));
}

std::string Integer::to_string() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) {
  return os << v.to_string();
}

}  // namespace hcn
