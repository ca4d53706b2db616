#pragma once

#include <cstdint>
#include <string>

#include "askw/exactalg/rational.hpp"

namespace askw {

/// Element of the prime field of size p. The modulus travels with the value so
/// that arithmetic needs no external context; mixing moduli is a logic error.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(p_ - v_, p_); }

  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  void check_same(const Fp& o) const;

  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }

/// Image of a p-integral rational in the prime field.
Fp fp_from_rational(const Rational& r, std::uint32_t p);

std::string to_string(const Fp& a);

}  // namespace askw
