#include "askw/fibrealg.hpp"

#include <string>

#include "askw/error.hpp"
#include "askw/family.hpp"

namespace askw {

template <class R>
bool FunctionFieldElement<R>::equals(const FunctionFieldElement& o) const {
  const std::size_t n = std::max(coeffs.size(), o.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool have_a = i < coeffs.size(), have_b = i < o.coeffs.size();
    if (have_a && have_b) {
      if (!coeffs[i].equals_cross(o.coeffs[i])) return false;
    } else if (have_a ? !coeffs[i].is_zero() : !o.coeffs[i].is_zero()) {
      return false;
    }
  }
  return true;
}

namespace {

template <class R>
SparsePoly<R> lift_z(const ZPoly& f, int p) {
  return f.map_coefficients([p](const Rational& c) { return RingTraits<R>::from_rational(c, p); });
}

void check_specialization(const FamilyParams& params, Fibre fibre, const std::vector<Rational>& spec) {
  const auto k = static_cast<std::size_t>(params.num_deformation_params());
  if (spec.size() != k) {
    throw Error(ErrorKind::BadSpecialization, "specialization needs " + std::to_string(k) +
                                                  " values, got " + std::to_string(spec.size()));
  }
  if (fibre == Fibre::Special) {
    for (const auto& v : spec) {
      if (v.get_den() % params.p == 0) {
        throw Error(ErrorKind::BadSpecialization,
                    "value " + v.get_str() + " has no image in the residue field");
      }
    }
  }
}

}  // namespace

template <class R>
FibreModel<R>::FibreModel(const FamilyParams& params, Fibre fibre, RelativeRoute route,
                          std::optional<std::vector<Rational>> specialization)
    : params_(params), fibre_(fibre), route_(route), spec_(std::move(specialization)) {
  require_polynomial_support(params_);
  const int p = params_.p;
  if (spec_) check_specialization(params_, fibre_, *spec_);
  const SparsePoly<R> a = specialize(lift_z<R>(a_polynomial(params_).poly, p));
  if (a.is_zero()) throw Error(ErrorKind::BadSpecialization, "a(x) vanishes identically");
  loc_ = std::make_shared<const Localization<R>>(a, 0, RingTraits<R>::one(p));

  const SparsePoly<R> x_ell = SparsePoly<R>::variable(nvars(), 0, RingTraits<R>::one(p), params_.ell);
  rhs_.assign(static_cast<std::size_t>(p), zero());
  const bool generic_relation =
      fibre_ == Fibre::Generic || (fibre_ == Fibre::Relative && route_ == RelativeRoute::ViaGeneric);
  if (generic_relation) {
    if constexpr (std::is_same_v<R, Cyclo>) {
      // Y^p = lambda^p x^ell + a^p
      rhs_[0] = element(x_ell.scaled(Cyclo::lambda_power(p, p)) + loc_->power(p));
    } else {
      throw Error(ErrorKind::WrongFibre, "the generic fibre needs cyclotomic coefficients");
    }
  } else if (fibre_ == Fibre::Special) {
    // X^p = X + x^ell a^-p
    rhs_[0] = element(x_ell, static_cast<unsigned>(p));
    rhs_[1] = element(constant(RingTraits<R>::one(p)));
  } else {
    if constexpr (std::is_same_v<R, Cyclo>) {
      // X^p = x^ell a^-p - sum_{i=1}^{p-1} lambda^(i-p) C(p,i) X^i
      rhs_[0] = element(x_ell, static_cast<unsigned>(p));
      for (int i = 1; i <= p - 1; ++i) {
        const Cyclo u = divide_by_lambda_power(Cyclo::from_rational(p, Rational(binomial(p, i))), p - i);
        rhs_[i] = element(constant(-u));
      }
    } else {
      throw Error(ErrorKind::WrongFibre, "the relative curve needs cyclotomic coefficients");
    }
  }
}

template <class R>
SparsePoly<R> FibreModel<R>::specialize(const SparsePoly<R>& f) const {
  if (!spec_) return f;
  SparsePoly<R> out = f;
  for (std::size_t s = 0; s < spec_->size(); ++s) out = out.substitute(s + 1, ring((*spec_)[s]));
  return out;
}

template <class R>
FunctionFieldElement<R> FibreModel<R>::reduce_normal_form(std::vector<LocalizedElement<R>> v) const {
  const std::size_t p = static_cast<std::size_t>(params_.p);
  for (std::size_t d = v.size(); d-- > p;) {
    if (v[d].is_zero()) continue;
    const LocalizedElement<R> top = v[d];
    for (std::size_t i = 0; i < p; ++i) {
      if (rhs_[i].is_zero()) continue;
      v[d - p + i] += top * rhs_[i];
    }
    v[d] = zero();
  }
  if (v.size() < p) v.resize(p, zero());
  v.resize(p);
  FunctionFieldElement<R> out;
  out.coeffs.reserve(p);
  for (auto& c : v) out.coeffs.push_back(c.normalized());
  return out;
}

template <class R>
std::vector<LocalizedElement<R>> FibreModel<R>::raw_image(const MinkowskiPoint& pt) const {
  const int p = params_.p;
  const R one = RingTraits<R>::one(p);
  const SparsePoly<R> x_rho = SparsePoly<R>::variable(nvars(), 0, one, static_cast<unsigned>(pt.rho));
  std::vector<LocalizedElement<R>> v;
  if (fibre_ == Fibre::Generic) {
    const int k = 3 * p - pt.T;
    v.assign(static_cast<std::size_t>(k) + 1, zero());
    v[k] = element(x_rho);
  } else if (fibre_ == Fibre::Relative && route_ == RelativeRoute::ViaGeneric) {
    if constexpr (std::is_same_v<R, Cyclo>) {
      // x^rho lambda^T (Y - a)^e
      const int e = 2 * (p - 1) - pt.T;
      v.assign(static_cast<std::size_t>(e) + 1, zero());
      const SparsePoly<R> base = x_rho.scaled(Cyclo::lambda_power(p, pt.T));
      for (int k = 0; k <= e; ++k) {
        Rational c(binomial(e, k));
        if ((e - k) % 2 == 1) c = -c;
        v[k] = element((base * loc_->power(e - k)).scaled(ring(c)));
      }
    }
  } else {
    const int e = 3 * p - 2 - pt.T;
    v.assign(static_cast<std::size_t>(e) + 1, zero());
    v[e] = element(x_rho * loc_->power(e));
  }
  return v;
}

template <class R>
const FunctionFieldElement<R>& FibreModel<R>::image_of_point(const MinkowskiPoint& pt) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(pt);
    if (it != cache_.end()) return it->second;
  }
  FunctionFieldElement<R> img = reduce_normal_form(raw_image(pt));
  std::lock_guard<std::mutex> lock(cache_mu_);
  return cache_.emplace(pt, std::move(img)).first->second;
}

template <class R>
FunctionFieldElement<R> FibreModel<R>::phi_image(const Monomial& m) const {
  if (m.degree() != 2) {
    throw Error(ErrorKind::WrongDegree, "canonical images are taken of degree-2 monomials, got degree " +
                                            std::to_string(m.degree()));
  }
  for (const auto& v : m.factors()) {
    if (!in_A(params_, v)) {
      throw Error(ErrorKind::VariableNotInA,
                  "z[" + std::to_string(v.N) + "," + std::to_string(v.mu) + "] is not indexed by A");
    }
  }
  const MultiDegree d = mdeg(m);
  return image_of_point({static_cast<int>(d.sumN), static_cast<int>(d.sumMu)});
}

template <class R>
FunctionFieldElement<R> FibreModel<R>::evaluate(const GeneratorPoly<R>& g) const {
  FunctionFieldElement<R> out;
  out.coeffs.assign(static_cast<std::size_t>(params_.p), zero());
  for (const auto& t : g.terms) {
    const SparsePoly<R> c = specialize(t.coeff);
    if (c.is_zero()) continue;
    const auto& img = phi_image(t.mono);
    for (std::size_t i = 0; i < img.coeffs.size(); ++i) {
      if (img.coeffs[i].is_zero()) continue;
      out.coeffs[i] += img.coeffs[i].scaled(c);
    }
  }
  for (auto& c : out.coeffs) c = c.normalized();
  return out;
}

template struct FunctionFieldElement<Cyclo>;
template struct FunctionFieldElement<Fp>;
template class FibreModel<Cyclo>;
template class FibreModel<Fp>;

std::unique_ptr<GenericModel> make_generic_model(const FamilyParams& params,
                                                 std::optional<std::vector<Rational>> spec) {
  return std::make_unique<GenericModel>(params, Fibre::Generic, RelativeRoute::Direct, std::move(spec));
}

std::unique_ptr<SpecialModel> make_special_model(const FamilyParams& params,
                                                 std::optional<std::vector<Rational>> spec) {
  return std::make_unique<SpecialModel>(params, Fibre::Special, RelativeRoute::Direct, std::move(spec));
}

std::unique_ptr<RelativeModel> make_relative_model(const FamilyParams& params,
                                                   std::optional<std::vector<Rational>> spec,
                                                   RelativeRoute route) {
  return std::make_unique<RelativeModel>(params, Fibre::Relative, route, std::move(spec));
}

RelationConsistency relation_consistency(const FamilyParams& params) {
  RelationConsistency out;
  const int p = params.p;
  const auto rel = make_relative_model(params);
  const auto spc = make_special_model(params);
  const auto& loc = *rel->localization();
  const Cyclo lambda_p = Cyclo::lambda_power(p, p);
  const SparsePoly<Cyclo> a_p = loc.power(p);
  const SparsePoly<Cyclo> x_ell = SparsePoly<Cyclo>::variable(rel->nvars(), 0, Cyclo::one(p), params.ell);

  // (a) both sides as polynomials in X with coefficients in Z[lambda][x, x_s].
  std::vector<SparsePoly<Cyclo>> lhs(static_cast<std::size_t>(p) + 1, SparsePoly<Cyclo>(rel->nvars()));
  for (int k = 0; k <= p; ++k) {
    lhs[k] = a_p.scaled(Cyclo::lambda_power(p, k) * Cyclo::from_rational(p, Rational(binomial(p, k))));
  }
  lhs[0] -= x_ell.scaled(lambda_p) + a_p;
  std::vector<SparsePoly<Cyclo>> rhs(static_cast<std::size_t>(p) + 1, SparsePoly<Cyclo>(rel->nvars()));
  rhs[p] = a_p.scaled(lambda_p);
  for (int i = 0; i < p; ++i) {
    const auto& r = rel->relation_rhs()[i];
    if (r.a_power() > static_cast<unsigned>(p)) continue;
    rhs[i] = -r.numerator_over(p).scaled(lambda_p);
  }
  out.polynomial_identity = lhs == rhs;
  for (int i = 0; i < p; ++i) {
    if (rel->relation_rhs()[i].a_power() > static_cast<unsigned>(p)) out.polynomial_identity = false;
  }

  // (b) coefficientwise reduction modulo lambda.
  out.reduction_matches_special = true;
  for (int i = 0; i < p; ++i) {
    const auto& r = rel->relation_rhs()[i];
    const SparsePoly<Fp> red = r.numerator().map_coefficients([](const Cyclo& c) { return reduce_mod_lambda(c); });
    const LocalizedElement<Fp> reduced = spc->element(red, r.a_power());
    if (!reduced.equals_cross(spc->relation_rhs()[i])) out.reduction_matches_special = false;
  }

  // (c) substitute Y = a(lambda X + 1) into Y^p and reduce with the relative relation.
  std::vector<LocalizedElement<Cyclo>> sub(static_cast<std::size_t>(p) + 1, rel->zero());
  for (int k = 0; k <= p; ++k) sub[k] = rel->element(lhs[k] + (k == 0 ? x_ell.scaled(lambda_p) + a_p : SparsePoly<Cyclo>(rel->nvars())));
  const auto nf_left = rel->reduce_normal_form(sub);
  std::vector<LocalizedElement<Cyclo>> target(1, rel->element(x_ell.scaled(lambda_p) + a_p));
  const auto nf_right = rel->reduce_normal_form(target);
  out.binomial_substitution = nf_left.equals(nf_right);
  return out;
}

}  // namespace askw
