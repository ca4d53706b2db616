#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "askw/exactalg/rational.hpp"
#include "askw/exactalg/sparse_poly.hpp"

namespace askw {

/// Heuristic warnings about the hypotheses of Petri's theorem. They never
/// block a computation.
struct Applicability {
  bool hyperelliptic_risk = false;
  bool trigonal_risk = false;
  bool plane_quintic_risk = false;

  bool any() const { return hyperelliptic_risk || trigonal_risk || plane_quintic_risk; }
};

struct FamilyParams {
  int p = 0;
  int q = 0;
  int ell = 0;
  int m = 0;
  long genus = 0;
  Applicability flags;

  /// Number of deformation symbols x_1..x_k: q when ell = 1, q - 1 otherwise.
  int num_deformation_params() const { return ell == 1 ? q : q - 1; }

  /// Polynomial variable layout used throughout: index 0 is x, index s is x_s.
  std::size_t poly_vars() const { return static_cast<std::size_t>(num_deformation_params()) + 1; }

  std::vector<std::string> variable_names() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Largest q for which the polynomial layer (one slot for x plus the
/// deformation symbols) fits in kMaxPolyVars.
inline constexpr int kMaxPolyQ = static_cast<int>(kMaxPolyVars) - 1;

FamilyParams validate_params(long p, long q, long ell);

long genus(const FamilyParams& params);

int j_min(const FamilyParams& params, int i);

using ZPoly = SparsePoly<Rational>;

/// a(x) = x^q + x_1 x^(q-1) + ... (+ x_q when ell = 1).
struct APolynomial {
  int q = 0;
  bool has_constant_term = false;
  /// Names of the coefficients of x^q, x^(q-1), ..., x^0; "1" for the leading
  /// one and "0" for an absent constant term.
  std::vector<std::string> coefficients;
  /// a(x) over the variable layout of FamilyParams::poly_vars().
  ZPoly poly;
};

APolynomial a_polynomial(const FamilyParams& params);

/// Throws Unsupported when q exceeds the polynomial layer.
void require_polynomial_support(const FamilyParams& params);

/// Coefficients c_{j,p-i} of a(x)^(p-i) by repeated multiplication. Keys are
/// the exponents j; values are polynomials in x_1..x_k over the standard
/// layout (with zero x-exponent).
std::map<int, ZPoly> a_power_coeffs(const FamilyParams& params, int i);

/// Same table from the multinomial expansion, constrained by
/// t_0 + ... + t_q = p - i and sum_s t_s (q - s) = j.
std::map<int, ZPoly> a_power_coeffs_multinomial(const FamilyParams& params, int i);

}  // namespace askw
