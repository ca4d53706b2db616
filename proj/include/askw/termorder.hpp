#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "askw/error.hpp"

namespace askw {

/// The indexed variable z_{N,mu}. Ordering of the struct itself is the
/// canonical storage order (mu, N).
struct IndexPair {
  int N = 0;
  int mu = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend std::strong_ordering operator<=>(const IndexPair& a, const IndexPair& b) {
    if (auto c = a.mu <=> b.mu; c != 0) return c;
    return a.N <=> b.N;
  }
};

/// Final tie-break among equal-(d, sumN, sumMu) monomials. Default: z_{N,mu}
/// is smaller than z_{N',mu'} iff (mu, N) < (mu', N'); Alt reverses it.
enum class TieBreak { Default, Alt };

std::string_view to_string(TieBreak t);
TieBreak parse_tie_break(std::string_view s);

struct MultiDegree {
  int d = 0;
  long sumN = 0;
  long sumMu = 0;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  MultiDegree& operator+=(const MultiDegree& o) {
    d += o.d;
    sumN += o.sumN;
    sumMu += o.sumMu;
    return *this;
  }
};

/// Product of indexed variables, stored sorted ascending by (mu, N).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<IndexPair> factors);
  Monomial(IndexPair a, IndexPair b);

  const std::vector<IndexPair>& factors() const { return f_; }
  int degree() const { return static_cast<int>(f_.size()); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Storage order only; use compare() for the term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

 private:
  std::vector<IndexPair> f_;
};

MultiDegree mdeg(const Monomial& m);

/// The term order: smaller degree first; at equal degree a larger sum of mu
/// is smaller; then a smaller sum of N is smaller; then lex via the tie-break.
std::strong_ordering compare(const Monomial& a, const Monomial& b, TieBreak t = TieBreak::Default);

/// Variable order used by the tie-break.
bool variable_less(const IndexPair& a, const IndexPair& b, TieBreak t = TieBreak::Default);

/// "z[N,mu]*z[N',mu']" in storage order; "1" for the empty monomial.
std::string to_string(const Monomial& m);

template <class C>
struct Term {
  C coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorts terms by the term order, largest first.
template <class C>
void sort_descending(std::vector<Term<C>>& terms, TieBreak t) {
  std::sort(terms.begin(), terms.end(), [t](const Term<C>& a, const Term<C>& b) {
    return compare(a.mono, b.mono, t) > 0;
  });
}

template <class C>
const Term<C>& leading_term(const std::vector<Term<C>>& terms, TieBreak t = TieBreak::Default) {
  if (terms.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  const Term<C>* best = &terms.front();
  for (const auto& term : terms) {
    if (compare(term.mono, best->mono, t) > 0) best = &term;
  }
  return *best;
}

}  // namespace askw
