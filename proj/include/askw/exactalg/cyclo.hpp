#pragma once

#include <optional>
#include <string>
#include <vector>

#include "askw/exactalg/prime_field.hpp"
#include "askw/exactalg/rational.hpp"

namespace askw {

template <class R>
class SparsePoly;

/// Element of Q(zeta_p) written in the power basis 1, lambda, ..., lambda^(p-2)
/// where lambda = zeta - 1. Elements with integer coordinates are exactly the
/// ring Z[zeta_p] = Z[lambda].
///
/// lambda satisfies sum_{i=1}^{p} C(p,i) lambda^(i-1) = 0, a monic integer
/// polynomial of degree p-1.
class Cyclo {
 public:
  /// Zero of Q(zeta_p).
  explicit Cyclo(int p);
  /// Takes coordinates of any length; higher powers of lambda are reduced.
  Cyclo(int p, std::vector<Rational> coeffs);

  static Cyclo from_rational(int p, const Rational& r);
  static Cyclo one(int p) { return from_rational(p, 1); }
  static Cyclo lambda(int p);
  static Cyclo zeta(int p);
  /// lambda^k for any integer k (negative powers live in Q(zeta_p)).
  static Cyclo lambda_power(int p, long k);

  int prime() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;

  Cyclo inverse() const;
  Cyclo pow(unsigned long e) const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  void check_same(const Cyclo& o) const;

  int p_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclo& a) { return a.is_zero(); }

std::string to_string(const Cyclo& a);

/// The minimal polynomial of lambda over Q as a univariate polynomial
/// (single variable "lambda"); monic of degree p-1.
SparsePoly<Rational> cyclo_min_poly(int p);

/// Largest v with e = lambda^v * (integral). std::nullopt stands for e = 0.
std::optional<int> lambda_valuation(const Cyclo& e);

/// Exact quotient e / lambda^v; throws NotDivisible if it leaves Z[lambda].
Cyclo divide_by_lambda_power(const Cyclo& e, int v);

/// Image in Z[lambda]/(lambda), the prime field of size p.
Fp reduce_mod_lambda(const Cyclo& e);

}  // namespace askw
