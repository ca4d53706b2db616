#include "askw/exactalg/prime_field.hpp"

#include <stdexcept>

#include "askw/error.hpp"

namespace askw {

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("Fp: modulus must be at least 2");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_) throw std::logic_error("Fp: mixed moduli");
}

Fp& Fp::operator+=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t(v_) + o.v_) % p_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t(v_) + p_ - o.v_) % p_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
  return *this;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp out(1, p_);
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorKind::NotDivisible, "Fp: inverse of zero");
  return pow(p_ - 2);
}

Fp fp_from_rational(const Rational& r, std::uint32_t p) {
  Integer num = r.get_num() % p;
  Integer den = r.get_den() % p;
  if (den == 0) {
    throw Error(ErrorKind::NonIntegralInput,
                "rational " + r.get_str() + " has a denominator divisible by " + std::to_string(p));
  }
  return Fp(num.get_si(), p) / Fp(den.get_si(), p);
}

std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace askw
