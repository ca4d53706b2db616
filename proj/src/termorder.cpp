#include "askw/termorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace askw {

std::string_view to_string(TieBreak t) { return t == TieBreak::Default ? "default" : "alt"; }

TieBreak parse_tie_break(std::string_view s) {
  if (s == "default") return TieBreak::Default;
  if (s == "alt") return TieBreak::Alt;
  throw std::invalid_argument("unknown tie-break '" + std::string(s) + "'");
}

Monomial::Monomial(std::vector<IndexPair> factors) : f_(std::move(factors)) {
  std::sort(f_.begin(), f_.end());
}

Monomial::Monomial(IndexPair a, IndexPair b) : Monomial(std::vector<IndexPair>{a, b}) {}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<IndexPair> f;
  f.reserve(a.f_.size() + b.f_.size());
  std::merge(a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end(), std::back_inserter(f));
  Monomial out;
  out.f_ = std::move(f);
  return out;
}

MultiDegree mdeg(const Monomial& m) {
  MultiDegree out;
  out.d = m.degree();
  for (const auto& v : m.factors()) {
    out.sumN += v.N;
    out.sumMu += v.mu;
  }
  return out;
}

bool variable_less(const IndexPair& a, const IndexPair& b, TieBreak t) {
  return t == TieBreak::Default ? a < b : b < a;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, TieBreak t) {
  const MultiDegree da = mdeg(a), db = mdeg(b);
  if (auto c = da.d <=> db.d; c != 0) return c;
  if (auto c = db.sumMu <=> da.sumMu; c != 0) return c;
  if (auto c = da.sumN <=> db.sumN; c != 0) return c;
  // Lex: compare the factor lists from the largest variable downwards.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = fa.size();
  for (std::size_t k = 0; k < n; ++k) {
    const IndexPair& va = t == TieBreak::Default ? fa[n - 1 - k] : fa[k];
    const IndexPair& vb = t == TieBreak::Default ? fb[n - 1 - k] : fb[k];
    if (va == vb) continue;
    return variable_less(va, vb, t) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (const auto& v : m.factors()) {
    if (!out.empty()) out += "*";
    out += "z[" + std::to_string(v.N) + "," + std::to_string(v.mu) + "]";
  }
  return out;
}

}  // namespace askw
