#include <doctest.h>

#include "askw/error.hpp"
#include "askw/termorder.hpp"
#include "support.hpp"

using namespace askw;

namespace {

Monomial z(std::vector<std::pair<int, int>> f) {
  std::vector<IndexPair> v;
  for (auto [N, mu] : f) v.push_back({N, mu});
  return Monomial(v);
}

}  // namespace

TEST_CASE("mdeg") {
  CHECK(mdeg(z({{0, 1}, {2, 2}})) == MultiDegree{2, 2, 3});
  CHECK(mdeg(Monomial()) == MultiDegree{0, 0, 0});
  CHECK(mdeg(z({{1, 2}, {1, 2}, {1, 2}})) == MultiDegree{3, 3, 6});
  const auto a = z({{0, 1}, {3, 4}}), b = z({{2, 2}});
  MultiDegree sum = mdeg(a);
  sum += mdeg(b);
  CHECK(mdeg(a * b) == sum);
}

TEST_CASE("compare examples") {
  CHECK(compare(z({{0, 2}}), z({{0, 1}, {0, 1}})) < 0);
  CHECK(compare(z({{0, 4}, {0, 4}}), z({{0, 1}, {0, 1}})) < 0);
  const auto m = z({{1, 2}, {0, 3}});
  CHECK(compare(m, m) == 0);
  // equal degree and sum of mu: smaller sum of N is smaller
  CHECK(compare(z({{0, 2}, {0, 2}}), z({{1, 2}, {0, 2}})) < 0);
  // equal multidegree: lex on (mu, N) from the largest variable
  CHECK(compare(z({{0, 2}, {2, 2}}), z({{1, 2}, {1, 2}})) > 0);
  // on quadrics with equal multidegree both tie-breaks agree
  CHECK(compare(z({{0, 2}, {2, 2}}), z({{1, 2}, {1, 2}}), TieBreak::Alt) > 0);
  const auto c1 = z({{0, 2}, {3, 2}, {3, 2}}), c2 = z({{1, 2}, {1, 2}, {4, 2}});
  CHECK(compare(c1, c2) < 0);
  CHECK(compare(c1, c2, TieBreak::Alt) > 0);
  CHECK(to_string(z({{2, 2}, {0, 1}})) == "z[0,1]*z[2,2]");
  CHECK(to_string(Monomial()) == "1");
}

TEST_CASE("compare is a total order, randomized") {
  testsupport::Gen gen(5);
  auto random_mono = [&] {
    std::vector<IndexPair> f;
    const int d = gen.small(1, 3);
    for (int k = 0; k < d; ++k) f.push_back({gen.small(0, 3), gen.small(1, 3)});
    return Monomial(f);
  };
  for (TieBreak t : {TieBreak::Default, TieBreak::Alt}) {
    for (int trial = 0; trial < 3000; ++trial) {
      const auto a = random_mono(), b = random_mono(), c = random_mono();
      const auto ab = compare(a, b, t), ba = compare(b, a, t);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
      if (ab < 0 && compare(b, c, t) < 0) CHECK(compare(a, c, t) < 0);
    }
  }
}

TEST_CASE("leading_term") {
  std::vector<Term<int>> terms{{-1, z({{1, 2}, {1, 2}})}, {1, z({{0, 2}, {2, 2}})}};
  const auto& lt = leading_term(terms);
  CHECK(lt.coeff == 1);
  CHECK(lt.mono == z({{0, 2}, {2, 2}}));
  std::vector<Term<int>> constant{{7, Monomial()}};
  CHECK(leading_term(constant).mono.degree() == 0);
  std::vector<Term<int>> empty;
  CHECK_THROWS_AS(leading_term(empty), Error);
  sort_descending(terms, TieBreak::Default);
  CHECK(terms.front().coeff == 1);
}
