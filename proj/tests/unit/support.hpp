#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "askw/exactalg/cyclo.hpp"
#include "askw/exactalg/prime_field.hpp"
#include "askw/exactalg/rational.hpp"

namespace testsupport {

/// p in {3,5,7}, q in {1,2,3}, 1 <= ell <= p-1.
inline std::vector<std::tuple<int, int, int>> sweep() {
  std::vector<std::tuple<int, int, int>> out;
  for (int p : {3, 5, 7}) {
    for (int q : {1, 2, 3}) {
      for (int l = 1; l < p; ++l) out.emplace_back(p, q, l);
    }
  }
  return out;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  askw::Rational rational() {
    const int den = small(1, 6);
    askw::Rational r(small(-20, 20), den);
    r.canonicalize();
    return r;
  }

  askw::Cyclo cyclo(int p, bool integral = false) {
    std::vector<askw::Rational> c;
    for (int i = 0; i < p - 1; ++i) c.push_back(integral ? askw::Rational(small(-9, 9)) : rational());
    return askw::Cyclo(p, c);
  }

  askw::Fp fp(int p) { return askw::Fp(small(0, p - 1), static_cast<std::uint32_t>(p)); }
};

/// Brute-force index set: (N, mu) with floor(mu*ell/p) <= N <= mu*q-2,
/// enumerated from a wide box.
inline std::set<std::pair<int, int>> brute_A(int p, int q, int ell) {
  std::set<std::pair<int, int>> out;
  for (int mu = 1; mu < p; ++mu) {
    for (int N = 0; N <= 3 * p * q; ++N) {
      if (N * p >= mu * ell - (mu * ell) % p && N <= mu * q - 2) out.insert({N, mu});
    }
  }
  return out;
}

inline std::set<std::pair<int, int>> brute_AA(int p, int q, int ell) {
  const auto A = brute_A(p, q, ell);
  std::set<std::pair<int, int>> out;  // (rho, T)
  for (const auto& a : A) {
    for (const auto& b : A) out.insert({a.first + b.first, a.second + b.second});
  }
  return out;
}

}  // namespace testsupport
