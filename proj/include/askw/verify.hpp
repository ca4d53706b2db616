#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "askw/fibrealg.hpp"
#include "askw/generators.hpp"
#include "askw/indexsets.hpp"

namespace askw {

/// Membership of a quadric in the canonical ideal of the model's fibre:
/// the reduced image of g is identically zero.
template <class R>
bool check_membership(const FibreModel<R>& model, const GeneratorPoly<R>& g);

struct CriterionReport {
  Fibre fibre = Fibre::Generic;
  long generator_count = 0;
  long distinct_leading = 0;
  long standard_count = 0;
  long bound = 0;
  bool verdict = false;
  /// Filled by callers that also ran check_membership.
  std::vector<bool> membership;
};

template <class R>
CriterionReport dimension_criterion(const FamilyParams& params, const std::vector<GeneratorPoly<R>>& gens);

struct OracleReport {
  Fibre fibre = Fibre::Generic;
  std::vector<Rational> specialization;
  long monomials = 0;
  long columns = 0;
  long image_rank = 0;
  long kernel_dim = 0;
  long expected_dim = 0;
  long generator_count = 0;
  long generator_rank = 0;
  bool generators_in_kernel = false;
  bool kernel_in_span = false;
  bool span_equal = false;
};

/// Evaluation-matrix oracle. Rows: all degree-2 monomials; columns: the
/// coefficients of their reduced images in the basis x^k V^i after clearing a
/// common power of a. Throws DegenerateSpecialization when the kernel
/// dimension differs from g(g+1)/2 - 3(g-1).
template <class R>
OracleReport kernel_oracle_with(const IndexData& data, const FibreModel<R>& model,
                                const std::vector<GeneratorPoly<R>>& gens);

/// Default generator sets: G1 with G2-generic, G2-special or G2-relative
/// (the relative curve is evaluated through the generic model).
OracleReport kernel_oracle(const IndexData& data, Fibre fibre, const std::vector<Rational>& specialization);

/// x_s = s.
std::vector<Rational> default_specialization(const FamilyParams& params);

/// Small pseudo-random integers drawn from a generator seeded with `seed`
/// and advanced `attempt` times.
std::vector<Rational> random_specialization(const FamilyParams& params, std::uint64_t seed, int attempt);

enum class CertificateStatus { Pass, PassWithCaveat, Fail };
std::string_view to_string(CertificateStatus s);

struct CertifyOptions {
  TieBreak tie_break = TieBreak::Default;
  bool oracle = false;
  std::optional<std::vector<Rational>> specialization;
  std::uint64_t seed = 1;
  int max_attempts = 3;
  bool corrupt_one = false;
};

struct OracleRun {
  std::vector<std::vector<Rational>> attempts;
  std::optional<OracleReport> report;
  std::string error;
};

struct Certificate {
  FamilyParams params;
  TieBreak tie_break = TieBreak::Default;
  std::uint64_t seed = 1;
  CountReport counts;
  long g1_count = 0;
  long g2_relative_count = 0;
  long g2_special_count = 0;
  bool membership_ok = false;
  std::vector<long> membership_failures;
  bool reduction_ok = false;
  RelationConsistency relations;
  CriterionReport special_criterion;
  CriterionReport generic_criterion;
  std::optional<OracleRun> generic_oracle;
  std::optional<OracleRun> special_oracle;
  std::vector<std::string> caveats;
  std::vector<std::string> errors;
  CertificateStatus status = CertificateStatus::Fail;
  std::map<std::string, double> timings;
};

Certificate certify_relative(const FamilyParams& params, const CertifyOptions& options = {});

}  // namespace askw
