#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "askw/exactalg/cyclo.hpp"
#include "askw/exactalg/prime_field.hpp"
#include "askw/exactalg/sparse_poly.hpp"
#include "askw/indexsets.hpp"
#include "askw/termorder.hpp"

namespace askw {

enum class Fibre { Generic, Special, Relative };
enum class Provenance { G1, G2 };

std::string_view to_string(Fibre f);
Fibre parse_fibre(std::string_view s);
std::string_view to_string(Provenance p);

/// Homogeneous quadric in the z-variables. Coefficients are polynomials in
/// the deformation symbols over the layout of FamilyParams::poly_vars() (the
/// x slot is always zero). Terms are kept sorted by the term order, largest
/// first.
template <class R>
struct GeneratorPoly {
  Fibre fibre = Fibre::Generic;
  Provenance provenance = Provenance::G1;
  std::optional<MinkowskiPoint> anchor;
  TieBreak tie_break = TieBreak::Default;
  std::vector<Term<SparsePoly<R>>> terms;

  friend bool operator==(const GeneratorPoly&, const GeneratorPoly&) = default;
};

using CycloGen = GeneratorPoly<Cyclo>;
using FpGen = GeneratorPoly<Fp>;

/// Spanning binomials m - sigma(rho,T) for every non-minimal m in B_{rho,T};
/// with all_pairs, every difference of two elements of one class instead.
template <class R>
std::vector<GeneratorPoly<R>> build_G1(const IndexData& data, Fibre fibre, bool all_pairs = false);

/// Anchored on C(0).
std::vector<CycloGen> build_G2_generic(const IndexData& data);

/// Anchored on C(1).
std::vector<FpGen> build_G2_special(const IndexData& data);

/// Special-fibre trinomials on an explicit anchor set (each anchor must lie in
/// C(1)).
std::vector<FpGen> build_G2_special_on(const IndexData& data, const PointSet& anchors);

/// Anchored on C(0); coefficients lambda^(i-p) C(p,i) c_{j,p-i} by exact
/// division.
std::vector<CycloGen> build_G2_relative(const IndexData& data);

/// Coefficientwise reduction modulo lambda.
std::vector<FpGen> reduce_relative_to_special(const std::vector<CycloGen>& gens);

/// Copies of g in which each term's monomial is replaced by any monomial of
/// the same multidegree; at most `limit` variants, the canonical one first.
template <class R>
std::vector<GeneratorPoly<R>> enumerate_representatives(const IndexData& data,
                                                        const GeneratorPoly<R>& g,
                                                        std::size_t limit);

/// Negative control: adds one to the coefficient of the last term.
template <class R>
GeneratorPoly<R> perturb_one(const GeneratorPoly<R>& g, int p);

template <class R>
const Monomial& leading_monomial(const GeneratorPoly<R>& g) {
  return leading_term(g.terms, g.tie_break).mono;
}

/// Number of distinct monomial slots.
template <class R>
std::size_t term_count(const GeneratorPoly<R>& g) {
  return g.terms.size();
}

}  // namespace askw
