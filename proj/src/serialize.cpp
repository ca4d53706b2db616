#include "askw/serialize.hpp"

namespace askw {

Json params_json(const FamilyParams& params) {
  Json j;
  j["p"] = params.p;
  j["q"] = params.q;
  j["ell"] = params.ell;
  j["m"] = params.m;
  j["genus"] = params.genus;
  return j;
}

Json flags_json(const Applicability& flags) {
  Json j;
  j["hyperelliptic_risk"] = flags.hyperelliptic_risk;
  j["trigonal_risk"] = flags.trigonal_risk;
  j["plane_quintic_risk"] = flags.plane_quintic_risk;
  return j;
}

namespace {

Json points_json(const std::vector<MinkowskiPoint>& pts) {
  Json a = Json::array();
  for (const auto& pt : pts) a.push_back({pt.rho, pt.T});
  return a;
}

Json x_exponents(const Exponents& e, std::size_t k) {
  Json a = Json::array();
  for (std::size_t s = 1; s <= k; ++s) a.push_back(e.e[s]);
  return a;
}

}  // namespace

Json count_report_json(const CountReport& r) {
  Json j;
  j["A"] = r.size_A;
  j["AA"] = r.size_AA;
  j["C"] = r.size_C;
  j["outside_C0"] = r.outside_C0;
  j["bound"] = r.bound;
  j["degree2_monomials"] = r.b_total;
  Json l;
  l["genus_equals_A"] = r.genus_matches_A;
  l["minkowski_closed_form"] = r.minkowski_closed_ok;
  l["C0_closed_form"] = r.description_C_ok;
  l["counting_bound"] = r.bound_ok;
  l["counting_equality"] = r.equality;
  l["b_subadditive"] = r.b_subadditive_ok;
  l["C0_in_every_Ci"] = r.inclusion_ok;
  l["B_partition"] = r.B_total_ok;
  j["lemmas"] = l;
  j["all_pass"] = r.all_pass();
  j["C1_minus_C0"] = points_json(r.C1_minus_C0);
  j["C0_closed_minus_brute"] = points_json(r.closed_C_minus_brute);
  j["C0_brute_minus_closed"] = points_json(r.brute_C_minus_closed);
  return j;
}

Json coefficient_json(const SparsePoly<Cyclo>& c, std::size_t k) {
  Json xs = Json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    Json lam = Json::array();
    for (const auto& r : it->second.coeffs()) lam.push_back(r.get_str());
    Json t;
    t["x"] = x_exponents(it->first, k);
    t["lambda_coeffs"] = std::move(lam);
    xs.push_back(std::move(t));
  }
  Json j;
  j["x_monomials"] = std::move(xs);
  return j;
}

Json coefficient_json(const SparsePoly<Fp>& c, std::size_t k) {
  Json xs = Json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    Json t;
    t["x"] = x_exponents(it->first, k);
    t["value"] = it->second.value();
    xs.push_back(std::move(t));
  }
  Json j;
  j["x_monomials"] = std::move(xs);
  return j;
}

template <class R>
Json generator_json(const GeneratorPoly<R>& g, std::size_t k) {
  Json j;
  if (g.anchor) j["anchor"] = {g.anchor->rho, g.anchor->T};
  Json terms = Json::array();
  for (const auto& t : g.terms) {
    Json m = Json::array();
    for (const auto& v : t.mono.factors()) m.push_back({v.N, v.mu});
    Json term;
    term["monomial"] = std::move(m);
    term["coeff"] = coefficient_json(t.coeff, k);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

template Json generator_json(const GeneratorPoly<Cyclo>&, std::size_t);
template Json generator_json(const GeneratorPoly<Fp>&, std::size_t);

template <class R>
Json generators_document(const FamilyParams& params, Fibre fibre, TieBreak tie,
                         const std::vector<GeneratorPoly<R>>& g1, const std::vector<GeneratorPoly<R>>& g2) {
  const auto k = static_cast<std::size_t>(params.num_deformation_params());
  Json j;
  j["schema"] = kGeneratorsSchema;
  j["params"] = params_json(params);
  j["fibre"] = std::string(to_string(fibre));
  j["tie_break"] = std::string(to_string(tie));
  Json vars = Json::array();
  for (std::size_t s = 1; s <= k; ++s) vars.push_back("x_" + std::to_string(s));
  j["symbols"] = std::move(vars);
  j["coefficient_ring"] = fibre == Fibre::Special ? "F_p[x_s]" : "Q(zeta_p)[x_s] in the lambda basis";
  j["counts"] = {{"G1", g1.size()}, {"G2", g2.size()}};
  Json a1 = Json::array();
  for (const auto& g : g1) a1.push_back(generator_json(g, k));
  Json a2 = Json::array();
  for (const auto& g : g2) a2.push_back(generator_json(g, k));
  j["G1"] = std::move(a1);
  j["G2"] = std::move(a2);
  return j;
}

template Json generators_document(const FamilyParams&, Fibre, TieBreak, const std::vector<GeneratorPoly<Cyclo>>&,
                                  const std::vector<GeneratorPoly<Cyclo>>&);
template Json generators_document(const FamilyParams&, Fibre, TieBreak, const std::vector<GeneratorPoly<Fp>>&,
                                  const std::vector<GeneratorPoly<Fp>>&);

Json criterion_json(const CriterionReport& r) {
  Json j;
  j["fibre"] = std::string(to_string(r.fibre));
  j["generators"] = r.generator_count;
  j["distinct_leading_monomials"] = r.distinct_leading;
  j["standard_monomials"] = r.standard_count;
  j["bound"] = r.bound;
  j["verdict"] = r.verdict;
  return j;
}

namespace {

Json spec_json(const std::vector<Rational>& spec) {
  Json j = Json::object();
  for (std::size_t s = 0; s < spec.size(); ++s) j["x_" + std::to_string(s + 1)] = spec[s].get_str();
  return j;
}

Json oracle_run_json(const OracleRun& run) {
  Json j;
  Json attempts = Json::array();
  for (const auto& a : run.attempts) attempts.push_back(spec_json(a));
  j["attempts"] = std::move(attempts);
  j["report"] = run.report ? oracle_json(*run.report) : Json(nullptr);
  if (!run.error.empty()) j["error"] = run.error;
  return j;
}

}  // namespace

Json oracle_json(const OracleReport& r) {
  Json j;
  j["fibre"] = std::string(to_string(r.fibre));
  j["specialization"] = spec_json(r.specialization);
  j["monomials"] = r.monomials;
  j["columns"] = r.columns;
  j["image_rank"] = r.image_rank;
  j["kernel_dim"] = r.kernel_dim;
  j["expected_dim"] = r.expected_dim;
  j["generators"] = r.generator_count;
  j["generator_rank"] = r.generator_rank;
  j["generators_in_kernel"] = r.generators_in_kernel;
  j["kernel_in_span"] = r.kernel_in_span;
  j["span_equal"] = r.span_equal;
  return j;
}

Json certificate_json(const Certificate& c, bool with_timings) {
  Json j;
  j["schema"] = kCertificateSchema;
  j["params"] = params_json(c.params);
  j["flags"] = flags_json(c.params.flags);
  j["tie_break"] = std::string(to_string(c.tie_break));
  j["seed"] = c.seed;
  Json counts;
  counts["genus"] = c.params.genus;
  counts["A"] = c.counts.size_A;
  counts["AA"] = c.counts.size_AA;
  counts["C0"] = c.counts.size_C.empty() ? 0 : c.counts.size_C[0];
  counts["C1"] = c.counts.size_C.size() > 1 ? c.counts.size_C[1] : 0;
  counts["G1"] = c.g1_count;
  counts["G2_relative"] = c.g2_relative_count;
  counts["G2_special_C1"] = c.g2_special_count;
  counts["standard_monomials"] = c.special_criterion.standard_count;
  counts["bound"] = 3 * (c.params.genus - 1);
  j["counts"] = std::move(counts);
  j["lemmas"] = count_report_json(c.counts)["lemmas"];

  Json v;
  v["membership"] = c.membership_ok;
  v["membership_failures"] = c.membership_failures;
  v["reduction_compatible"] = c.reduction_ok;
  v["relations"] = {{"polynomial_identity", c.relations.polynomial_identity},
                    {"reduction_matches_special", c.relations.reduction_matches_special},
                    {"binomial_substitution", c.relations.binomial_substitution}};
  v["special_criterion"] = criterion_json(c.special_criterion);
  v["generic_criterion"] = criterion_json(c.generic_criterion);
  j["verdicts"] = std::move(v);

  if (c.generic_oracle || c.special_oracle) {
    Json o;
    if (c.generic_oracle) o["generic"] = oracle_run_json(*c.generic_oracle);
    if (c.special_oracle) o["special"] = oracle_run_json(*c.special_oracle);
    j["oracle"] = std::move(o);
  }
  j["caveats"] = c.caveats;
  j["errors"] = c.errors;
  j["status"] = std::string(to_string(c.status));
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [k, s] : c.timings) t[k] = s;
    j["timings"] = std::move(t);
  }
  return j;
}

}  // namespace askw
