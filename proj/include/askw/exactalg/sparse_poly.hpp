#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "askw/error.hpp"
#include "askw/exactalg/rational.hpp"

namespace askw {

inline constexpr std::size_t kMaxPolyVars = 8;

namespace detail {
template <class R>
bool coeff_is_zero(const R& c) {
  return is_zero(c);
}
}  // namespace detail

/// Exponent vector over a declared variable list of at most kMaxPolyVars
/// variables; unused slots stay zero.
struct Exponents {
  std::array<std::uint16_t, kMaxPolyVars> e{};

  unsigned total() const {
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  Exponents& operator+=(const Exponents& o) {
    for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
      const unsigned s = unsigned(e[i]) + o.e[i];
      if (s > 0xFFFFu) throw Error(ErrorKind::Unsupported, "exponent overflow");
      e[i] = static_cast<std::uint16_t>(s);
    }
    return *this;
  }
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded-lex: total degree first, then the earlier variable dominates.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.e < b.e;
  }
};

/// Sparse multivariate polynomial with coefficients in a commutative ring R.
/// Zero coefficients are never stored, so structural equality is equality.
template <class R>
class SparsePoly {
 public:
  using Coeff = R;
  using TermMap = std::map<Exponents, R, GrlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxPolyVars) {
      throw Error(ErrorKind::Unsupported,
                  "at most " + std::to_string(kMaxPolyVars) + " polynomial variables are supported");
    }
  }

  static SparsePoly constant(std::size_t nvars, const R& c) {
    SparsePoly f(nvars);
    f.add_term(Exponents{}, c);
    return f;
  }

  static SparsePoly term(std::size_t nvars, const Exponents& e, const R& c) {
    SparsePoly f(nvars);
    f.add_term(e, c);
    return f;
  }

  /// var^power scaled by `one`.
  static SparsePoly variable(std::size_t nvars, std::size_t var, const R& one, unsigned power = 1) {
    Exponents e;
    e.e.at(var) = static_cast<std::uint16_t>(power);
    return term(nvars, e, one);
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e.e[var]);
    return d;
  }

  void add_term(const Exponents& e, const R& c) {
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  SparsePoly operator-() const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }

  SparsePoly scaled(const R& s) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  /// Multiplies by var^k.
  SparsePoly shifted(std::size_t var, unsigned k) const {
    Exponents s;
    s.e.at(var) = static_cast<std::uint16_t>(k);
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
    return out;
  }

  /// Replaces `var` by the constant `value`.
  SparsePoly substitute(std::size_t var, const R& value) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      R v = c;
      for (unsigned k = 0; k < e.e[var]; ++k) v *= value;
      Exponents f = e;
      f.e[var] = 0;
      out.add_term(f, v);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> SparsePoly<decltype(f(std::declval<const R&>()))> {
    SparsePoly<decltype(f(std::declval<const R&>()))> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_coeff(const R& c) { return detail::coeff_is_zero(c); }

  void adopt_nvars(const SparsePoly& o) { nvars_ = std::max(nvars_, o.nvars_); }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class R>
SparsePoly<R> pow(const SparsePoly<R>& f, unsigned n, const R& one) {
  SparsePoly<R> result = SparsePoly<R>::constant(f.nvars(), one);
  SparsePoly<R> base = f;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

/// Division by a divisor that is monic in `var` (its top `var`-power appears in
/// a single term with coefficient one). Returns {quotient, remainder} with the
/// remainder of `var`-degree below that of the divisor.
template <class R>
std::pair<SparsePoly<R>, SparsePoly<R>> divmod_monic(const SparsePoly<R>& f,
                                                     const SparsePoly<R>& divisor,
                                                     std::size_t var) {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  const unsigned d = divisor.degree_in(var);
  {
    int top_terms = 0;
    for (const auto& [e, c] : divisor.terms()) {
      if (e.e[var] != d) continue;
      ++top_terms;
      Exponents pure;
      pure.e[var] = static_cast<std::uint16_t>(d);
      if (!(e == pure) || !(c * c == c)) top_terms = -1000;
    }
    if (top_terms != 1) throw std::invalid_argument("divmod_monic: divisor is not monic");
  }

  SparsePoly<R> quotient(f.nvars());
  SparsePoly<R> rem = f;
  while (!rem.is_zero()) {
    const unsigned top = rem.degree_in(var);
    if (top < d) break;
    SparsePoly<R> slice(f.nvars());
    for (const auto& [e, c] : rem.terms()) {
      if (e.e[var] != top) continue;
      Exponents lowered = e;
      lowered.e[var] = static_cast<std::uint16_t>(top - d);
      slice.add_term(lowered, c);
    }
    quotient += slice;
    rem -= slice * divisor;
  }
  return {std::move(quotient), std::move(rem)};
}

/// Human-readable rendering, highest grlex term first.
template <class R>
std::string to_string(const SparsePoly<R>& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")";
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      const unsigned k = it->first.e[v];
      if (k == 0) continue;
      out += "*" + (v < names.size() ? names[v] : "v" + std::to_string(v));
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace askw
