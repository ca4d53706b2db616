#include "askw/exactalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace askw {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace askw
