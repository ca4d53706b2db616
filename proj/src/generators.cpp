#include "askw/generators.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "askw/error.hpp"
#include "askw/exactalg/ring_traits.hpp"
#include "askw/family.hpp"

namespace askw {

std::string_view to_string(Fibre f) {
  switch (f) {
    case Fibre::Generic: return "generic";
    case Fibre::Special: return "special";
    case Fibre::Relative: return "relative";
  }
  return "unknown";
}

Fibre parse_fibre(std::string_view s) {
  if (s == "generic") return Fibre::Generic;
  if (s == "special") return Fibre::Special;
  if (s == "relative") return Fibre::Relative;
  throw std::invalid_argument("unknown fibre '" + std::string(s) + "'");
}

std::string_view to_string(Provenance p) { return p == Provenance::G1 ? "G1" : "G2"; }

namespace {

template <class R>
SparsePoly<R> constant_poly(const FamilyParams& params, const R& c) {
  return SparsePoly<R>::constant(params.poly_vars(), c);
}

template <class R>
SparsePoly<R> lift(const ZPoly& f, int p) {
  return f.map_coefficients([p](const Rational& c) { return RingTraits<R>::from_rational(c, p); });
}

// Collects coefficients per Minkowski point, then emits sigma-representatives.
template <class R>
class Accumulator {
 public:
  Accumulator(const IndexData& data, MinkowskiPoint anchor) : data_(data), anchor_(anchor) {}

  void add(const MinkowskiPoint& pt, const SparsePoly<R>& c) {
    if (!data_.contains(pt)) {
      throw Error(ErrorKind::PointNotInMinkowskiSum,
                  "anchor " + to_string(anchor_) + " needs " + to_string(pt) + ", which is not in A+A");
    }
    auto it = acc_.find(pt);
    if (it == acc_.end()) {
      acc_.emplace(pt, c);
    } else {
      it->second += c;
    }
  }

  GeneratorPoly<R> finish(Fibre fibre) const {
    GeneratorPoly<R> g;
    g.fibre = fibre;
    g.provenance = Provenance::G2;
    g.anchor = anchor_;
    g.tie_break = data_.tie_break();
    for (const auto& [pt, c] : acc_) {
      if (c.is_zero()) continue;
      g.terms.push_back({c, data_.sigma(pt)});
    }
    sort_descending(g.terms, g.tie_break);
    return g;
  }

 private:
  const IndexData& data_;
  MinkowskiPoint anchor_;
  std::map<MinkowskiPoint, SparsePoly<R>> acc_;
};

}  // namespace

template <class R>
std::vector<GeneratorPoly<R>> build_G1(const IndexData& data, Fibre fibre, bool all_pairs) {
  const FamilyParams& params = data.params();
  const int p = params.p;
  const SparsePoly<R> one = constant_poly(params, RingTraits<R>::one(p));
  const SparsePoly<R> minus_one = -one;
  std::vector<GeneratorPoly<R>> out;
  auto emit = [&](const Monomial& big, const Monomial& small) {
    GeneratorPoly<R> g;
    g.fibre = fibre;
    g.provenance = Provenance::G1;
    g.tie_break = data.tie_break();
    g.terms = {{one, big}, {minus_one, small}};
    out.push_back(std::move(g));
  };
  for (const auto& pt : data.AA()) {
    const auto& cls = data.B(pt);
    if (all_pairs) {
      for (std::size_t a = 0; a < cls.size(); ++a) {
        for (std::size_t b = a + 1; b < cls.size(); ++b) emit(cls[b], cls[a]);
      }
    } else {
      for (std::size_t k = 1; k < cls.size(); ++k) emit(cls[k], cls.front());
    }
  }
  return out;
}

template std::vector<GeneratorPoly<Cyclo>> build_G1<Cyclo>(const IndexData&, Fibre, bool);
template std::vector<GeneratorPoly<Fp>> build_G1<Fp>(const IndexData&, Fibre, bool);

std::vector<CycloGen> build_G2_generic(const IndexData& data) {
  const FamilyParams& params = data.params();
  require_polynomial_support(params);
  const int p = params.p;
  const auto c = a_power_coeffs(params, 0);
  const SparsePoly<Cyclo> one = constant_poly(params, Cyclo::one(p));
  const SparsePoly<Cyclo> lambda_p = constant_poly(params, Cyclo::lambda_power(p, p));
  std::vector<CycloGen> out;
  for (const auto& pt : data.C(0)) {
    Accumulator<Cyclo> acc(data, pt);
    acc.add(pt, one);
    acc.add({pt.rho + params.ell, pt.T + p}, -lambda_p);
    for (int j = j_min(params, 0); j <= p * params.q; ++j) {
      auto it = c.find(j);
      if (it == c.end()) continue;
      acc.add({pt.rho + j, pt.T + p}, -lift<Cyclo>(it->second, p));
    }
    out.push_back(acc.finish(Fibre::Generic));
  }
  return out;
}

std::vector<FpGen> build_G2_special_on(const IndexData& data, const PointSet& anchors) {
  const FamilyParams& params = data.params();
  require_polynomial_support(params);
  const int p = params.p;
  const auto c = a_power_coeffs(params, 1);
  const SparsePoly<Fp> one = constant_poly(params, RingTraits<Fp>::one(p));
  std::vector<FpGen> out;
  for (const auto& pt : anchors) {
    if (!data.C(1).count(pt)) {
      throw Error(ErrorKind::PointNotInMinkowskiSum, "anchor " + to_string(pt) + " is not in C(1)");
    }
    Accumulator<Fp> acc(data, pt);
    acc.add(pt, one);
    acc.add({pt.rho + params.ell, pt.T + p}, -one);
    for (int j = j_min(params, 1); j <= (p - 1) * params.q; ++j) {
      auto it = c.find(j);
      if (it == c.end()) continue;
      acc.add({pt.rho + j, pt.T + p - 1}, -lift<Fp>(it->second, p));
    }
    out.push_back(acc.finish(Fibre::Special));
  }
  return out;
}

std::vector<FpGen> build_G2_special(const IndexData& data) {
  return build_G2_special_on(data, data.C(1));
}

std::vector<CycloGen> build_G2_relative(const IndexData& data) {
  const FamilyParams& params = data.params();
  require_polynomial_support(params);
  const int p = params.p;
  std::vector<std::map<int, ZPoly>> c(static_cast<std::size_t>(p));
  std::vector<Cyclo> unit(static_cast<std::size_t>(p), Cyclo(p));
  for (int i = 1; i <= p - 1; ++i) {
    c[i] = a_power_coeffs(params, i);
    try {
      unit[i] = divide_by_lambda_power(Cyclo::from_rational(p, Rational(binomial(p, i))), p - i);
    } catch (const Error& e) {
      throw Error(ErrorKind::NonIntegralCoefficient,
                  "lambda^" + std::to_string(i - p) + " * C(p," + std::to_string(i) +
                      ") is not integral: " + e.what());
    }
  }
  const SparsePoly<Cyclo> one = constant_poly(params, Cyclo::one(p));
  std::vector<CycloGen> out;
  for (const auto& pt : data.C(0)) {
    Accumulator<Cyclo> acc(data, pt);
    acc.add(pt, one);
    acc.add({pt.rho + params.ell, pt.T + p}, -one);
    for (int i = 1; i <= p - 1; ++i) {
      for (int j = j_min(params, i); j <= (p - i) * params.q; ++j) {
        auto it = c[i].find(j);
        if (it == c[i].end()) continue;
        acc.add({pt.rho + j, pt.T + p - i}, lift<Cyclo>(it->second, p).scaled(unit[i]));
      }
    }
    out.push_back(acc.finish(Fibre::Relative));
  }
  return out;
}

std::vector<FpGen> reduce_relative_to_special(const std::vector<CycloGen>& gens) {
  std::vector<FpGen> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    FpGen r;
    r.fibre = Fibre::Special;
    r.provenance = g.provenance;
    r.anchor = g.anchor;
    r.tie_break = g.tie_break;
    for (const auto& t : g.terms) {
      SparsePoly<Fp> c;
      try {
        c = t.coeff.map_coefficients([](const Cyclo& x) { return reduce_mod_lambda(x); });
      } catch (const Error& e) {
        throw Error(ErrorKind::NonIntegralCoefficient, std::string("cannot reduce modulo lambda: ") + e.what());
      }
      if (!c.is_zero()) r.terms.push_back({std::move(c), t.mono});
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class R>
std::vector<GeneratorPoly<R>> enumerate_representatives(const IndexData& data,
                                                        const GeneratorPoly<R>& g,
                                                        std::size_t limit) {
  std::vector<const std::vector<Monomial>*> classes;
  for (const auto& t : g.terms) {
    const MultiDegree d = mdeg(t.mono);
    classes.push_back(&data.B({static_cast<int>(d.sumN), static_cast<int>(d.sumMu)}));
  }
  std::vector<GeneratorPoly<R>> out{g};
  std::vector<std::size_t> idx(classes.size(), 0);
  while (out.size() < limit) {
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == classes[k]->size()) idx[k++] = 0;
    if (k == idx.size()) break;
    GeneratorPoly<R> v = g;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      // Offset from the canonical monomial's position in its class.
      const auto& cls = *classes[t];
      std::size_t base = 0;
      while (!(cls[base] == g.terms[t].mono)) ++base;
      v.terms[t].mono = cls[(base + idx[t]) % cls.size()];
    }
    sort_descending(v.terms, v.tie_break);
    if (v == g) continue;
    out.push_back(std::move(v));
  }
  return out;
}

template std::vector<CycloGen> enumerate_representatives(const IndexData&, const CycloGen&, std::size_t);
template std::vector<FpGen> enumerate_representatives(const IndexData&, const FpGen&, std::size_t);

template <class R>
GeneratorPoly<R> perturb_one(const GeneratorPoly<R>& g, int p) {
  if (g.terms.empty()) throw Error(ErrorKind::ZeroPolynomial, "cannot perturb the zero polynomial");
  GeneratorPoly<R> out = g;
  auto& last = out.terms.back();
  last.coeff += SparsePoly<R>::constant(last.coeff.nvars(), RingTraits<R>::one(p));
  if (last.coeff.is_zero()) out.terms.pop_back();
  return out;
}

template CycloGen perturb_one(const CycloGen&, int);
template FpGen perturb_one(const FpGen&, int);

}  // namespace askw
