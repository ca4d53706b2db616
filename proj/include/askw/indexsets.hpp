#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "askw/family.hpp"
#include "askw/termorder.hpp"

namespace askw {

/// A point (rho, T) of A+A; sets of points are ordered by (T, rho).
struct MinkowskiPoint {
  int rho = 0;
  int T = 0;

  friend bool operator==(const MinkowskiPoint&, const MinkowskiPoint&) = default;
  friend std::strong_ordering operator<=>(const MinkowskiPoint& a, const MinkowskiPoint& b) {
    if (auto c = a.T <=> b.T; c != 0) return c;
    return a.rho <=> b.rho;
  }
};

using PointSet = std::set<MinkowskiPoint>;

std::string to_string(const MinkowskiPoint& pt);

/// A sorted by (mu, N).
std::vector<IndexPair> build_A(const FamilyParams& params);

bool in_A(const FamilyParams& params, const IndexPair& v);

PointSet minkowski_brute(const std::vector<IndexPair>& A);

int b_of_T(const FamilyParams& params, int T);

PointSet minkowski_closed(const FamilyParams& params);

/// The closed-form candidate for C(0): b(T) <= rho <= Tq-4, 2 <= T <= p-2.
PointSet description_C_closed(const FamilyParams& params);

/// Enumerations shared by every consumer of one (params, tie-break) pair.
/// Immutable after construction.
class IndexData {
 public:
  IndexData(const FamilyParams& params, TieBreak tie_break = TieBreak::Default);

  const FamilyParams& params() const { return params_; }
  TieBreak tie_break() const { return tie_; }
  const std::vector<IndexPair>& A() const { return A_; }
  const PointSet& AA() const { return AA_; }
  bool contains(const MinkowskiPoint& pt) const { return AA_.count(pt) > 0; }

  /// C(i) by brute-force membership tests against A+A.
  const PointSet& C(int i) const;

  /// Degree-2 monomials of multidegree (2, rho, T), ascending in the term order.
  const std::vector<Monomial>& B(const MinkowskiPoint& pt) const;
  const Monomial& sigma(const MinkowskiPoint& pt) const { return B(pt).front(); }

  /// All degree-2 monomials in the storage order of their factors.
  const std::vector<Monomial>& degree2_monomials() const { return all2_; }

 private:
  FamilyParams params_;
  TieBreak tie_;
  std::vector<IndexPair> A_;
  PointSet AA_;
  std::map<MinkowskiPoint, std::vector<Monomial>> B_;
  std::vector<Monomial> all2_;
  std::vector<PointSet> C_;
};

PointSet build_C(const FamilyParams& params, int i);

std::vector<Monomial> B_set(const FamilyParams& params, const MinkowskiPoint& pt,
                            TieBreak t = TieBreak::Default);

Monomial sigma(const FamilyParams& params, const MinkowskiPoint& pt, TieBreak t = TieBreak::Default);

struct CountReport {
  FamilyParams params;
  long size_A = 0;
  long size_AA = 0;
  /// |C(i)| for i = 0..p.
  std::vector<long> size_C;
  long outside_C0 = 0;
  long bound = 0;
  long b_total = 0;

  bool genus_matches_A = false;
  bool minkowski_closed_ok = false;
  bool description_C_ok = false;
  bool bound_ok = false;
  bool equality = false;
  bool b_subadditive_ok = false;
  bool inclusion_ok = false;
  bool B_total_ok = false;
  /// C(1) minus C(0), reported for the special-fibre anchor question.
  std::vector<MinkowskiPoint> C1_minus_C0;
  std::vector<MinkowskiPoint> closed_C_minus_brute;
  std::vector<MinkowskiPoint> brute_C_minus_closed;

  bool all_pass() const {
    return genus_matches_A && minkowski_closed_ok && description_C_ok && bound_ok &&
           b_subadditive_ok && inclusion_ok && B_total_ok;
  }
};

CountReport check_counting_lemmas(const FamilyParams& params);
CountReport check_counting_lemmas(const IndexData& data);

}  // namespace askw
