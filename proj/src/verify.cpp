#include "askw/verify.hpp"

#include <chrono>
#include <random>
#include <set>

#include "askw/error.hpp"
#include "askw/linalg.hpp"

namespace askw {

namespace {

template <class R>
void check_homogeneous(const GeneratorPoly<R>& g) {
  for (const auto& t : g.terms) {
    if (t.mono.degree() != 2) {
      throw Error(ErrorKind::NonHomogeneous, "term " + to_string(t.mono) + " is not of degree 2");
    }
  }
}

// Constant value of a fully specialized coefficient polynomial.
template <class R>
R constant_value(const SparsePoly<R>& f, const R& zero) {
  if (f.is_zero()) return zero;
  if (f.size() != 1 || f.terms().begin()->first.total() != 0) {
    throw Error(ErrorKind::BadSpecialization, "coefficient still depends on the deformation symbols");
  }
  return f.terms().begin()->second;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

template <class R>
bool check_membership(const FibreModel<R>& model, const GeneratorPoly<R>& g) {
  if (g.fibre != model.fibre()) {
    throw Error(ErrorKind::WrongFibre, "generator for the " + std::string(to_string(g.fibre)) +
                                           " fibre checked against the " +
                                           std::string(to_string(model.fibre())) + " model");
  }
  check_homogeneous(g);
  return model.evaluate(g).is_zero();
}

template bool check_membership(const FibreModel<Cyclo>&, const GeneratorPoly<Cyclo>&);
template bool check_membership(const FibreModel<Fp>&, const GeneratorPoly<Fp>&);

template <class R>
CriterionReport dimension_criterion(const FamilyParams& params, const std::vector<GeneratorPoly<R>>& gens) {
  CriterionReport r;
  r.fibre = gens.empty() ? Fibre::Generic : gens.front().fibre;
  r.generator_count = static_cast<long>(gens.size());
  std::set<Monomial> leading;
  for (const auto& g : gens) {
    check_homogeneous(g);
    if (g.terms.empty()) continue;
    leading.insert(leading_monomial(g));
  }
  r.distinct_leading = static_cast<long>(leading.size());
  r.standard_count = params.genus * (params.genus + 1) / 2 - r.distinct_leading;
  r.bound = 3 * (params.genus - 1);
  r.verdict = r.standard_count <= r.bound;
  return r;
}

template CriterionReport dimension_criterion(const FamilyParams&, const std::vector<GeneratorPoly<Cyclo>>&);
template CriterionReport dimension_criterion(const FamilyParams&, const std::vector<GeneratorPoly<Fp>>&);

template <class R>
OracleReport kernel_oracle_with(const IndexData& data, const FibreModel<R>& model,
                                const std::vector<GeneratorPoly<R>>& gens) {
  const FamilyParams& params = data.params();
  const int p = params.p;
  const R zero = RingTraits<R>::zero(p);
  const R one = RingTraits<R>::one(p);
  OracleReport rep;
  rep.fibre = model.fibre();
  if (model.specialization()) rep.specialization = *model.specialization();

  const auto& monos = data.degree2_monomials();
  const std::size_t n = monos.size();
  rep.monomials = static_cast<long>(n);
  rep.expected_dim = static_cast<long>(n) - 3 * (params.genus - 1);

  // Images per point, over the common denominator a^K.
  unsigned K = 0;
  std::map<MinkowskiPoint, const FunctionFieldElement<R>*> images;
  for (const auto& pt : data.AA()) {
    const auto& img = model.image_of_point(pt);
    images.emplace(pt, &img);
    for (const auto& c : img.coeffs) K = std::max(K, c.a_power());
  }
  struct KeyLess {
    bool operator()(const std::pair<int, Exponents>& a, const std::pair<int, Exponents>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return GrlexLess{}(a.second, b.second);
    }
  };
  std::map<MinkowskiPoint, std::vector<std::pair<std::pair<int, Exponents>, R>>> cleared;
  std::map<std::pair<int, Exponents>, std::size_t, KeyLess> columns;
  for (const auto& [pt, img] : images) {
    auto& entries = cleared[pt];
    for (std::size_t i = 0; i < img->coeffs.size(); ++i) {
      const auto& c = img->coeffs[i];
      if (c.is_zero()) continue;
      const SparsePoly<R> num = c.numerator_over(K);
      for (const auto& [e, v] : num.terms()) {
        entries.push_back({{static_cast<int>(i), e}, v});
        columns.emplace(std::make_pair(static_cast<int>(i), e), 0);
      }
    }
  }
  std::size_t col = 0;
  for (auto& [key, idx] : columns) idx = col++;
  rep.columns = static_cast<long>(columns.size());

  // Transposed evaluation matrix: one column per degree-2 monomial.
  Matrix<R> mt(columns.size(), n, zero);
  std::map<Monomial, std::size_t> mono_index;
  for (std::size_t k = 0; k < n; ++k) {
    mono_index.emplace(monos[k], k);
    const MultiDegree d = mdeg(monos[k]);
    for (const auto& [key, v] : cleared.at({static_cast<int>(d.sumN), static_cast<int>(d.sumMu)})) {
      mt(columns.at(key), k) = v;
    }
  }

  const auto kernel = nullspace(mt, one);
  rep.kernel_dim = static_cast<long>(kernel.size());
  rep.image_rank = static_cast<long>(n) - rep.kernel_dim;

  Matrix<R> gm(gens.size(), n, zero);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (const auto& t : gens[r].terms) {
      gm(r, mono_index.at(t.mono)) += constant_value(model.specialize(t.coeff), zero);
    }
  }
  rep.generator_count = static_cast<long>(gens.size());

  rep.generators_in_kernel = true;
  for (std::size_t r = 0; r < gens.size() && rep.generators_in_kernel; ++r) {
    for (std::size_t c = 0; c < mt.rows(); ++c) {
      R acc = zero;
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(gm(r, k)) || is_zero(mt(c, k))) continue;
        acc += gm(r, k) * mt(c, k);
      }
      if (!is_zero(acc)) {
        rep.generators_in_kernel = false;
        break;
      }
    }
  }

  rep.generator_rank = static_cast<long>(rank(gm, one));
  Matrix<R> km(kernel.size(), n, zero);
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t k = 0; k < n; ++k) km(r, k) = kernel[r][k];
  }
  rep.kernel_in_span = static_cast<long>(rank(gm.stacked(km), one)) == rep.generator_rank;
  rep.span_equal = rep.generators_in_kernel && rep.kernel_in_span && rep.generator_rank == rep.kernel_dim;

  if (rep.kernel_dim != rep.expected_dim) {
    throw Error(ErrorKind::DegenerateSpecialization,
                "kernel dimension " + std::to_string(rep.kernel_dim) + " differs from the expected " +
                    std::to_string(rep.expected_dim) + "; retry with other values");
  }
  return rep;
}

template OracleReport kernel_oracle_with(const IndexData&, const FibreModel<Cyclo>&,
                                         const std::vector<GeneratorPoly<Cyclo>>&);
template OracleReport kernel_oracle_with(const IndexData&, const FibreModel<Fp>&,
                                         const std::vector<GeneratorPoly<Fp>>&);

OracleReport kernel_oracle(const IndexData& data, Fibre fibre, const std::vector<Rational>& specialization) {
  const FamilyParams& params = data.params();
  switch (fibre) {
    case Fibre::Generic: {
      auto model = make_generic_model(params, specialization);
      auto gens = build_G1<Cyclo>(data, Fibre::Generic);
      for (auto& g : build_G2_generic(data)) gens.push_back(std::move(g));
      return kernel_oracle_with(data, *model, gens);
    }
    case Fibre::Special: {
      auto model = make_special_model(params, specialization);
      auto gens = build_G1<Fp>(data, Fibre::Special);
      for (auto& g : build_G2_special(data)) gens.push_back(std::move(g));
      return kernel_oracle_with(data, *model, gens);
    }
    case Fibre::Relative: {
      auto model = make_relative_model(params, specialization, RelativeRoute::ViaGeneric);
      auto gens = build_G1<Cyclo>(data, Fibre::Relative);
      for (auto& g : build_G2_relative(data)) gens.push_back(std::move(g));
      return kernel_oracle_with(data, *model, gens);
    }
  }
  throw std::logic_error("kernel_oracle: unknown fibre");
}

std::vector<Rational> default_specialization(const FamilyParams& params) {
  std::vector<Rational> out;
  for (int s = 1; s <= params.num_deformation_params(); ++s) out.emplace_back(s);
  return out;
}

std::vector<Rational> random_specialization(const FamilyParams& params, std::uint64_t seed, int attempt) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 97);
  std::vector<Rational> out;
  for (int a = 0; a <= attempt; ++a) {
    out.clear();
    for (int s = 1; s <= params.num_deformation_params(); ++s) out.emplace_back(dist(rng));
  }
  return out;
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Pass: return "PASS";
    case CertificateStatus::PassWithCaveat: return "PASS_WITH_CAVEAT";
    case CertificateStatus::Fail: return "FAIL";
  }
  return "FAIL";
}

namespace {

template <class Fn>
OracleRun run_oracle(const FamilyParams& params, const CertifyOptions& opt, Fn&& fn) {
  OracleRun run;
  for (int attempt = 0; attempt < std::max(1, opt.max_attempts); ++attempt) {
    std::vector<Rational> spec;
    if (attempt == 0) {
      spec = opt.specialization ? *opt.specialization : default_specialization(params);
    } else {
      spec = random_specialization(params, opt.seed, attempt - 1);
    }
    run.attempts.push_back(spec);
    try {
      run.report = fn(spec);
      run.error.clear();
      return run;
    } catch (const Error& e) {
      run.error = std::string(to_string(e.kind())) + ": " + e.what();
      if (e.kind() != ErrorKind::DegenerateSpecialization) return run;
    }
  }
  return run;
}

}  // namespace

Certificate certify_relative(const FamilyParams& params, const CertifyOptions& opt) {
  Certificate cert;
  cert.params = params;
  cert.tie_break = opt.tie_break;
  cert.seed = opt.seed;
  auto t_total = Clock::now();

  const IndexData data(params, opt.tie_break);
  auto t0 = Clock::now();
  cert.counts = check_counting_lemmas(data);
  cert.timings["counting"] = seconds_since(t0);

  if (params.flags.hyperelliptic_risk) cert.caveats.push_back("hyperelliptic-risk");
  if (params.flags.trigonal_risk) cert.caveats.push_back("trigonal-risk");
  if (params.flags.plane_quintic_risk) cert.caveats.push_back("plane-quintic-risk");

  bool ok = true;
  try {
    t0 = Clock::now();
    std::vector<CycloGen> g1 = build_G1<Cyclo>(data, Fibre::Relative);
    std::vector<CycloGen> g2 = build_G2_relative(data);
    cert.g1_count = static_cast<long>(g1.size());
    cert.g2_relative_count = static_cast<long>(g2.size());
    cert.g2_special_count = static_cast<long>(build_G2_special(data).size());
    if (opt.corrupt_one) {
      if (!g2.empty()) {
        g2.front() = perturb_one(g2.front(), params.p);
      } else if (!g1.empty()) {
        g1.front() = perturb_one(g1.front(), params.p);
      }
    }
    std::vector<CycloGen> rel = g1;
    rel.insert(rel.end(), g2.begin(), g2.end());
    cert.timings["build"] = seconds_since(t0);

    // (1) membership on the relative model, deformation symbols kept free.
    t0 = Clock::now();
    cert.relations = relation_consistency(params);
    const auto model = make_relative_model(params);
    cert.membership_ok = true;
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (!check_membership(*model, rel[k])) {
        cert.membership_ok = false;
        cert.membership_failures.push_back(static_cast<long>(k));
      }
    }
    cert.timings["membership"] = seconds_since(t0);

    // (2) reduction modulo lambda against the special-fibre construction.
    t0 = Clock::now();
    const std::vector<FpGen> reduced = reduce_relative_to_special(g2);
    cert.reduction_ok = reduced == build_G2_special_on(data, data.C(0));
    std::vector<FpGen> special = build_G1<Fp>(data, Fibre::Special);
    special.insert(special.end(), reduced.begin(), reduced.end());
    cert.timings["reduction"] = seconds_since(t0);

    // (3) the dimension criterion on both fibres.
    cert.special_criterion = dimension_criterion(params, special);
    cert.generic_criterion = dimension_criterion(params, rel);
    cert.generic_criterion.fibre = Fibre::Generic;

    ok = cert.membership_ok && cert.reduction_ok && cert.relations.all() && cert.special_criterion.verdict &&
         cert.generic_criterion.verdict;

    // (4) independent oracles.
    if (opt.oracle) {
      t0 = Clock::now();
      cert.generic_oracle = run_oracle(params, opt, [&](const std::vector<Rational>& spec) {
        auto gm = make_relative_model(params, spec, RelativeRoute::ViaGeneric);
        OracleReport r = kernel_oracle_with(data, *gm, rel);
        r.fibre = Fibre::Generic;
        return r;
      });
      cert.timings["oracle_generic"] = seconds_since(t0);
      t0 = Clock::now();
      cert.special_oracle = run_oracle(params, opt, [&](const std::vector<Rational>& spec) {
        auto sm = make_special_model(params, spec);
        return kernel_oracle_with(data, *sm, special);
      });
      cert.timings["oracle_special"] = seconds_since(t0);
      for (const auto* run : {&*cert.generic_oracle, &*cert.special_oracle}) {
        if (!run->report || !run->report->span_equal) ok = false;
        if (!run->error.empty()) cert.errors.push_back(run->error);
      }
    }
  } catch (const Error& e) {
    cert.errors.push_back(std::string(to_string(e.kind())) + ": " + e.what());
    ok = false;
  }
  cert.timings["total"] = seconds_since(t_total);

  if (!ok) {
    cert.status = CertificateStatus::Fail;
  } else if (!cert.caveats.empty()) {
    cert.status = CertificateStatus::PassWithCaveat;
  } else {
    cert.status = CertificateStatus::Pass;
  }
  return cert;
}

}  // namespace askw
