#pragma once

#include <gmpxx.h>

#include <string>

namespace askw {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "a", "-a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

Integer binomial(unsigned long n, unsigned long k);

bool is_prime(long n);

}  // namespace askw
