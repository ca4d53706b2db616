#pragma once

#include <json.hpp>

#include "askw/generators.hpp"
#include "askw/indexsets.hpp"
#include "askw/verify.hpp"

namespace askw {

using Json = nlohmann::ordered_json;

inline constexpr const char* kGeneratorsSchema = "askw-generators/1";
inline constexpr const char* kCertificateSchema = "askw-certificate/1";
inline constexpr const char* kInfoSchema = "askw-info/1";

Json params_json(const FamilyParams& params);
Json flags_json(const Applicability& flags);
Json count_report_json(const CountReport& r);

Json coefficient_json(const SparsePoly<Cyclo>& c, std::size_t k);
Json coefficient_json(const SparsePoly<Fp>& c, std::size_t k);

template <class R>
Json generator_json(const GeneratorPoly<R>& g, std::size_t k);

/// The full export: G1 followed by the fibre's G2.
template <class R>
Json generators_document(const FamilyParams& params, Fibre fibre, TieBreak tie,
                         const std::vector<GeneratorPoly<R>>& g1, const std::vector<GeneratorPoly<R>>& g2);

Json criterion_json(const CriterionReport& r);
Json oracle_json(const OracleReport& r);
Json certificate_json(const Certificate& c, bool with_timings);

}  // namespace askw
