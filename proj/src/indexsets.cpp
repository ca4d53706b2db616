#include "askw/indexsets.hpp"

#include <algorithm>

#include "askw/error.hpp"

namespace askw {

std::string to_string(const MinkowskiPoint& pt) {
  return "(" + std::to_string(pt.rho) + "," + std::to_string(pt.T) + ")";
}

namespace {

int floor_div(int a, int b) { return a / b; }  // both operands nonnegative here

}  // namespace

std::vector<IndexPair> build_A(const FamilyParams& params) {
  std::vector<IndexPair> out;
  for (int mu = 1; mu <= params.p - 1; ++mu) {
    for (int N = floor_div(mu * params.ell, params.p); N <= mu * params.q - 2; ++N) {
      out.push_back({N, mu});
    }
  }
  return out;
}

bool in_A(const FamilyParams& params, const IndexPair& v) {
  return v.mu >= 1 && v.mu <= params.p - 1 && v.N >= floor_div(v.mu * params.ell, params.p) &&
         v.N <= v.mu * params.q - 2;
}

PointSet minkowski_brute(const std::vector<IndexPair>& A) {
  PointSet out;
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = a; b < A.size(); ++b) out.insert({A[a].N + A[b].N, A[a].mu + A[b].mu});
  }
  return out;
}

int b_of_T(const FamilyParams& params, int T) {
  const int p = params.p;
  if (T < 2 || T > 2 * (p - 1)) {
    throw Error(ErrorKind::TOutOfRange, "T must lie in [2, 2(p-1)], got " + std::to_string(T));
  }
  const int full = floor_div(T * params.ell, p);
  // Decompositions T = mu + mu' with 1 <= mu, mu' <= p-1.
  for (int mu = std::max(1, T - (p - 1)); mu <= std::min(p - 1, T - 1); ++mu) {
    const int s = floor_div(mu * params.ell, p) + floor_div((T - mu) * params.ell, p);
    if (s < full) return full - 1;
  }
  return full;
}

PointSet minkowski_closed(const FamilyParams& params) {
  PointSet out;
  for (int T = 2; T <= 2 * (params.p - 1); ++T) {
    for (int rho = b_of_T(params, T); rho <= T * params.q - 4; ++rho) out.insert({rho, T});
  }
  return out;
}

PointSet description_C_closed(const FamilyParams& params) {
  PointSet out;
  for (int T = 2; T <= params.p - 2; ++T) {
    for (int rho = b_of_T(params, T); rho <= T * params.q - 4; ++rho) out.insert({rho, T});
  }
  return out;
}

IndexData::IndexData(const FamilyParams& params, TieBreak tie_break)
    : params_(params), tie_(tie_break), A_(build_A(params)) {
  for (std::size_t a = 0; a < A_.size(); ++a) {
    for (std::size_t b = a; b < A_.size(); ++b) {
      const MinkowskiPoint pt{A_[a].N + A_[b].N, A_[a].mu + A_[b].mu};
      AA_.insert(pt);
      Monomial m(A_[a], A_[b]);
      B_[pt].push_back(m);
      all2_.push_back(std::move(m));
    }
  }
  for (auto& [pt, list] : B_) {
    std::sort(list.begin(), list.end(), [this](const Monomial& x, const Monomial& y) {
      return compare(x, y, tie_) < 0;
    });
  }
  std::sort(all2_.begin(), all2_.end());

  const int p = params_.p;
  C_.resize(static_cast<std::size_t>(p) + 1);
  for (int i = 0; i <= p; ++i) {
    const int lo = j_min(params_, i);
    const int hi = (p - i) * params_.q;
    for (const auto& pt : AA_) {
      bool ok = contains({pt.rho + params_.ell, pt.T + p});
      for (int j = lo; ok && j <= hi; ++j) ok = contains({pt.rho + j, pt.T + p - i});
      if (ok) C_[i].insert(pt);
    }
  }
}

const PointSet& IndexData::C(int i) const {
  if (i < 0 || i > params_.p) {
    throw Error(ErrorKind::IOutOfRange, "i must lie in [0, p], got " + std::to_string(i));
  }
  return C_[static_cast<std::size_t>(i)];
}

const std::vector<Monomial>& IndexData::B(const MinkowskiPoint& pt) const {
  auto it = B_.find(pt);
  if (it == B_.end()) {
    throw Error(ErrorKind::PointNotInMinkowskiSum, to_string(pt) + " is not in A+A");
  }
  return it->second;
}

PointSet build_C(const FamilyParams& params, int i) {
  if (i < 0 || i > params.p) {
    throw Error(ErrorKind::IOutOfRange, "i must lie in [0, p], got " + std::to_string(i));
  }
  return IndexData(params).C(i);
}

std::vector<Monomial> B_set(const FamilyParams& params, const MinkowskiPoint& pt, TieBreak t) {
  return IndexData(params, t).B(pt);
}

Monomial sigma(const FamilyParams& params, const MinkowskiPoint& pt, TieBreak t) {
  return IndexData(params, t).sigma(pt);
}

CountReport check_counting_lemmas(const FamilyParams& params) {
  return check_counting_lemmas(IndexData(params));
}

CountReport check_counting_lemmas(const IndexData& data) {
  const FamilyParams& params = data.params();
  CountReport r;
  r.params = params;
  r.size_A = static_cast<long>(data.A().size());
  r.size_AA = static_cast<long>(data.AA().size());
  for (int i = 0; i <= params.p; ++i) r.size_C.push_back(static_cast<long>(data.C(i).size()));
  r.outside_C0 = r.size_AA - r.size_C[0];
  r.bound = 3 * (params.genus - 1);
  r.genus_matches_A = r.size_A == params.genus;
  r.minkowski_closed_ok = minkowski_closed(params) == minkowski_brute(data.A());

  const PointSet closed = description_C_closed(params);
  const PointSet& brute = data.C(0);
  std::set_difference(closed.begin(), closed.end(), brute.begin(), brute.end(),
                      std::back_inserter(r.closed_C_minus_brute));
  std::set_difference(brute.begin(), brute.end(), closed.begin(), closed.end(),
                      std::back_inserter(r.brute_C_minus_closed));
  r.description_C_ok = r.closed_C_minus_brute.empty() && r.brute_C_minus_closed.empty();

  r.bound_ok = r.outside_C0 <= r.bound;
  r.equality = r.outside_C0 == r.bound;

  r.b_subadditive_ok = true;
  const int top = 2 * (params.p - 1);
  for (int T = 2; T <= top; ++T) {
    for (int alpha = 1; T + alpha <= top; ++alpha) {
      if (b_of_T(params, T + alpha) > b_of_T(params, T) + alpha) r.b_subadditive_ok = false;
    }
  }

  r.inclusion_ok = true;
  for (int i = 0; i <= params.p; ++i) {
    if (!std::includes(data.C(i).begin(), data.C(i).end(), brute.begin(), brute.end())) {
      r.inclusion_ok = false;
    }
  }
  const PointSet& c1 = data.C(1);
  std::set_difference(c1.begin(), c1.end(), brute.begin(), brute.end(),
                      std::back_inserter(r.C1_minus_C0));

  for (const auto& pt : data.AA()) r.b_total += static_cast<long>(data.B(pt).size());
  r.B_total_ok = r.b_total == params.genus * (params.genus + 1) / 2;
  return r;
}

}  // namespace askw
