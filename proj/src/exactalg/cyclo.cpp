#include "askw/exactalg/cyclo.hpp"

#include <unordered_map>

#include "askw/error.hpp"
#include "askw/exactalg/sparse_poly.hpp"

namespace askw {

namespace {

// C(p, i) for i = 0..p, cached per thread.
const std::vector<Rational>& binomial_row(int p) {
  thread_local std::unordered_map<int, std::vector<Rational>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::vector<Rational> row;
  row.reserve(p + 1);
  for (int i = 0; i <= p; ++i) row.emplace_back(binomial(p, i));
  return cache.emplace(p, std::move(row)).first->second;
}

void check_prime(int p) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
}

// Reduces a coordinate vector of any length modulo the minimal polynomial of
// lambda, using lambda^(p-1) = -sum_{i=1}^{p-1} C(p,i) lambda^(i-1).
void reduce_in_place(int p, std::vector<Rational>& c) {
  const std::size_t n = static_cast<std::size_t>(p - 1);
  const auto& binom = binomial_row(p);
  for (std::size_t k = c.size(); k-- > n;) {
    if (is_zero(c[k])) continue;
    const Rational top = c[k];
    for (std::size_t i = 1; i <= n; ++i) c[k - n + i - 1] -= top * binom[i];
    c[k] = 0;
  }
  c.resize(n);
}

}  // namespace

Cyclo::Cyclo(int p) : p_(p) {
  check_prime(p);
  c_.assign(static_cast<std::size_t>(p - 1), Rational(0));
}

Cyclo::Cyclo(int p, std::vector<Rational> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_prime(p);
  if (c_.size() < static_cast<std::size_t>(p - 1)) c_.resize(p - 1, Rational(0));
  reduce_in_place(p, c_);
}

Cyclo Cyclo::from_rational(int p, const Rational& r) {
  Cyclo out(p);
  out.c_[0] = r;
  return out;
}

Cyclo Cyclo::lambda(int p) { return Cyclo(p, {Rational(0), Rational(1)}); }

Cyclo Cyclo::zeta(int p) { return Cyclo(p, {Rational(1), Rational(1)}); }

Cyclo Cyclo::lambda_power(int p, long k) {
  if (k >= 0) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return Cyclo(p, std::move(c));
  }
  // lambda^{-1} = -(1/p) sum_{i=2}^{p} C(p,i) lambda^{i-2}
  const auto& binom = binomial_row(p);
  std::vector<Rational> c(static_cast<std::size_t>(p - 1), Rational(0));
  for (int i = 2; i <= p; ++i) c[i - 2] = -binom[i] / p;
  return Cyclo(p, std::move(c)).pow(static_cast<unsigned long>(-k));
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_) {
    if (!askw::is_zero(x)) return false;
  }
  return true;
}

bool Cyclo::is_integral() const {
  for (const auto& x : c_) {
    if (!is_integer(x)) return false;
  }
  return true;
}

void Cyclo::check_same(const Cyclo& o) const {
  if (p_ != o.p_) throw std::logic_error("Cyclo: mixed primes");
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  check_same(o);
  const std::size_t n = c_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (askw::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (askw::is_zero(o.c_[j])) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_in_place(p_, prod);
  c_ = std::move(prod);
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclo Cyclo::pow(unsigned long e) const {
  Cyclo base = *this;
  Cyclo out = one(p_);
  while (e > 0) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return out;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotDivisible, "Cyclo: inverse of zero");
  // Solve (this * x) = 1 with the multiplication matrix in the lambda basis.
  const std::size_t n = c_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  Cyclo basis = one(p_);
  const Cyclo lam = lambda(p_);
  for (std::size_t j = 0; j < n; ++j) {
    const Cyclo col = *this * basis;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    basis *= lam;
  }
  m[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && askw::is_zero(m[piv][col])) ++piv;
    if (piv == n) throw std::logic_error("Cyclo: singular multiplication matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k <= n; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || askw::is_zero(m[r][col])) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return Cyclo(p_, std::move(x));
}

std::string to_string(const Cyclo& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    if (!out.empty()) out += " + ";
    out += c[i].get_str();
    if (i == 1) out += "*lambda";
    if (i > 1) out += "*lambda^" + std::to_string(i);
  }
  return out;
}

SparsePoly<Rational> cyclo_min_poly(int p) {
  // Defined for every prime, including 2 (lambda = -2).
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  SparsePoly<Rational> f(1);
  for (int i = 1; i <= p; ++i) {
    Exponents e;
    e.e[0] = static_cast<std::uint16_t>(i - 1);
    f.add_term(e, Rational(binomial(p, i)));
  }
  return f;
}

std::optional<int> lambda_valuation(const Cyclo& e) {
  if (!e.is_integral()) throw Error(ErrorKind::NonIntegralInput, "lambda_valuation needs an integral element");
  if (e.is_zero()) return std::nullopt;
  const int p = e.prime();
  const Cyclo inv_lambda = Cyclo::lambda_power(p, -1);
  Cyclo cur = e;
  int v = 0;
  // e lies in (lambda) exactly when its constant coordinate is divisible by p.
  while (reduce_mod_lambda(cur).is_zero()) {
    cur *= inv_lambda;
    ++v;
  }
  return v;
}

Cyclo divide_by_lambda_power(const Cyclo& e, int v) {
  if (!e.is_integral()) throw Error(ErrorKind::NonIntegralInput, "divide_by_lambda_power needs an integral element");
  if (v < 0) throw std::invalid_argument("divide_by_lambda_power: negative exponent");
  Cyclo q = e * Cyclo::lambda_power(e.prime(), -static_cast<long>(v));
  if (!q.is_integral()) {
    throw Error(ErrorKind::NotDivisible,
                to_string(e) + " is not divisible by lambda^" + std::to_string(v));
  }
  return q;
}

Fp reduce_mod_lambda(const Cyclo& e) {
  if (!e.is_integral()) throw Error(ErrorKind::NonIntegralInput, "reduce_mod_lambda needs an integral element");
  const int p = e.prime();
  Integer r = e.coeffs()[0].get_num() % p;
  return Fp(r.get_si(), static_cast<std::uint32_t>(p));
}

}  // namespace askw
