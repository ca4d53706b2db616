#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "askw/exactalg/localized.hpp"
#include "askw/exactalg/ring_traits.hpp"
#include "askw/generators.hpp"
#include "askw/indexsets.hpp"

namespace askw {

/// sum_i coeffs[i] * V^i with V the fibre variable (Y or X) and i < p after
/// reduction.
template <class R>
struct FunctionFieldElement {
  std::vector<LocalizedElement<R>> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Componentwise comparison by cross-multiplication.
  bool equals(const FunctionFieldElement& o) const;
};

/// How relative-curve images are produced.
enum class RelativeRoute {
  /// X-model with relation X^p = x^ell a^-p - sum lambda^(i-p) C(p,i) X^i.
  Direct,
  /// Generic Y-model with Y = a(lambda X + 1).
  ViaGeneric,
};

/// One fibre of the family: the curve relation V^p = sum_{i<p} rhs[i] V^i and
/// the images of degree-2 monomials under the canonical map, with the shared
/// clearing factor of the fibre (generic Y^(3p); special and relative
/// (aX)^p after the common (a(lambda X+1))^(2(p-1)) denominator is cancelled;
/// via the generic route lambda^(2(p-1)) Y^(2(p-1))).
template <class R>
class FibreModel {
 public:
  FibreModel(const FamilyParams& params, Fibre fibre, RelativeRoute route,
             std::optional<std::vector<Rational>> specialization);

  const FamilyParams& params() const { return params_; }
  Fibre fibre() const { return fibre_; }
  RelativeRoute route() const { return route_; }
  bool specialized() const { return spec_.has_value(); }
  const std::optional<std::vector<Rational>>& specialization() const { return spec_; }
  const std::shared_ptr<const Localization<R>>& localization() const { return loc_; }
  const SparsePoly<R>& a() const { return loc_->a(); }
  const std::vector<LocalizedElement<R>>& relation_rhs() const { return rhs_; }
  std::size_t nvars() const { return params_.poly_vars(); }

  LocalizedElement<R> zero() const { return LocalizedElement<R>(loc_, SparsePoly<R>(nvars()), 0); }
  LocalizedElement<R> element(SparsePoly<R> num, unsigned a_power = 0) const {
    return LocalizedElement<R>(loc_, std::move(num), a_power);
  }
  SparsePoly<R> constant(const R& c) const { return SparsePoly<R>::constant(nvars(), c); }
  R ring(const Rational& r) const { return RingTraits<R>::from_rational(r, params_.p); }

  /// Replaces the deformation symbols by the specialization (identity when
  /// unspecialized).
  SparsePoly<R> specialize(const SparsePoly<R>& f) const;

  /// Reduces a polynomial in V of any degree to degree below p.
  FunctionFieldElement<R> reduce_normal_form(std::vector<LocalizedElement<R>> v) const;

  /// Cached image of the point (rho, T) of A+A.
  const FunctionFieldElement<R>& image_of_point(const MinkowskiPoint& pt) const;

  FunctionFieldElement<R> phi_image(const Monomial& m) const;

  /// sum coeff * phi_image(mono), reduced. Coefficients are specialized first.
  FunctionFieldElement<R> evaluate(const GeneratorPoly<R>& g) const;

 private:
  std::vector<LocalizedElement<R>> raw_image(const MinkowskiPoint& pt) const;

  FamilyParams params_;
  Fibre fibre_;
  RelativeRoute route_;
  std::optional<std::vector<Rational>> spec_;
  std::shared_ptr<const Localization<R>> loc_;
  std::vector<LocalizedElement<R>> rhs_;
  mutable std::mutex cache_mu_;
  mutable std::map<MinkowskiPoint, FunctionFieldElement<R>> cache_;
};

using GenericModel = FibreModel<Cyclo>;
using SpecialModel = FibreModel<Fp>;
using RelativeModel = FibreModel<Cyclo>;

std::unique_ptr<GenericModel> make_generic_model(const FamilyParams& params,
                                                 std::optional<std::vector<Rational>> spec = std::nullopt);
std::unique_ptr<SpecialModel> make_special_model(const FamilyParams& params,
                                                 std::optional<std::vector<Rational>> spec = std::nullopt);
std::unique_ptr<RelativeModel> make_relative_model(const FamilyParams& params,
                                                   std::optional<std::vector<Rational>> spec = std::nullopt,
                                                   RelativeRoute route = RelativeRoute::Direct);

struct RelationConsistency {
  /// a^p (lambda X+1)^p - lambda^p x^ell - a^p == lambda^p a^p (X^p - RHS_rel).
  bool polynomial_identity = false;
  /// RHS_rel reduced modulo lambda equals RHS_special.
  bool reduction_matches_special = false;
  /// NF_rel((a(lambda X+1))^p) == NF_rel(lambda^p x^ell + a^p).
  bool binomial_substitution = false;

  bool all() const { return polynomial_identity && reduction_matches_special && binomial_substitution; }
};

RelationConsistency relation_consistency(const FamilyParams& params);

}  // namespace askw
