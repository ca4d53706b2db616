#pragma once

#include <cstdint>

#include "askw/exactalg/cyclo.hpp"
#include "askw/exactalg/prime_field.hpp"
#include "askw/exactalg/rational.hpp"

namespace askw {

/// Uniform construction of constants in the three coefficient rings used by
/// the library. `p` is the characteristic-or-cyclotomic prime of the family.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational from_rational(const Rational& r, int) { return r; }
  static Rational zero(int) { return Rational(0); }
  static Rational one(int) { return Rational(1); }
  static Rational inverse(const Rational& a) { return 1 / a; }
};

template <>
struct RingTraits<Cyclo> {
  static Cyclo from_rational(const Rational& r, int p) { return Cyclo::from_rational(p, r); }
  static Cyclo zero(int p) { return Cyclo(p); }
  static Cyclo one(int p) { return Cyclo::one(p); }
  static Cyclo inverse(const Cyclo& a) { return a.inverse(); }
};

template <>
struct RingTraits<Fp> {
  static Fp from_rational(const Rational& r, int p) {
    return fp_from_rational(r, static_cast<std::uint32_t>(p));
  }
  static Fp zero(int p) { return Fp(0, static_cast<std::uint32_t>(p)); }
  static Fp one(int p) { return Fp(1, static_cast<std::uint32_t>(p)); }
  static Fp inverse(const Fp& a) { return a.inverse(); }
};

}  // namespace askw
