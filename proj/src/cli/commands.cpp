#include "askw/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "askw/error.hpp"
#include "askw/serialize.hpp"
#include "askw/verify.hpp"

namespace askw::cli {

namespace {

CommandResult usage_error(const std::string& msg) {
  CommandResult r;
  r.exit_code = kUsage;
  r.diagnostics.push_back("error: " + msg);
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// Maps parameter-validation errors to the one-line diagnostic of exit code 2.
std::string param_message(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NonPrimeP: return "p must be prime";
    case ErrorKind::EllOutOfRange: return "ell must satisfy 1 <= ell <= p-1";
    case ErrorKind::NonPositiveQ: return "q must be positive";
    default: return first_line(e.what());
  }
}

struct Single {
  FamilyParams params;
  std::optional<CommandResult> error;
};

Single single_params(const RunConfig& c) {
  Single s;
  if (c.p.size() != 1 || c.q.size() != 1 || c.ell.size() != 1) {
    s.error = usage_error("exactly one value each of -p, -q and -l is required");
    return s;
  }
  try {
    s.params = validate_params(c.p[0], c.q[0], c.ell[0]);
  } catch (const Error& e) {
    s.error = usage_error(param_message(e));
  }
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::ostringstream os;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << "  ";
        os << std::setw(static_cast<int>(width[i])) << r[i];
      }
      os << "\n";
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<Rational> parse_specialization(const std::string& text, int k) {
  std::vector<Rational> out;
  for (int s = 1; s <= k; ++s) out.emplace_back(s);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("specialization entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    if (key.rfind("x_", 0) == 0) {
      key = key.substr(2);
    } else if (key.rfind('x', 0) == 0) {
      key = key.substr(1);
    } else {
      throw std::invalid_argument("unknown symbol '" + key + "'");
    }
    int s = 0;
    try {
      std::size_t used = 0;
      s = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown symbol '" + item.substr(0, eq) + "'");
    }
    if (s < 1 || s > k) {
      throw std::invalid_argument("symbol x_" + std::to_string(s) + " does not occur (k = " + std::to_string(k) + ")");
    }
    out[static_cast<std::size_t>(s - 1)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

CommandResult cmd_info(const RunConfig& config) {
  const Single s = single_params(config);
  if (s.error) return *s.error;
  const FamilyParams& params = s.params;
  const CountReport r = check_counting_lemmas(IndexData(params, config.tie_break));
  CommandResult out;
  if (config.format == Format::Json) {
    Json j;
    j["schema"] = kInfoSchema;
    j["params"] = params_json(params);
    j["flags"] = flags_json(params.flags);
    j["tie_break"] = std::string(to_string(config.tie_break));
    j["counts"] = count_report_json(r);
    out.output = dump(j);
  } else {
    std::ostringstream os;
    os << "p " << params.p << "\nq " << params.q << "\nell " << params.ell << "\nm " << params.m
       << "\ngenus " << params.genus << "\nhyperelliptic_risk " << yes_no(params.flags.hyperelliptic_risk)
       << "\ntrigonal_risk " << yes_no(params.flags.trigonal_risk) << "\nplane_quintic_risk "
       << yes_no(params.flags.plane_quintic_risk) << "\n|A| " << r.size_A << "\n|A+A| " << r.size_AA << "\n";
    Table t({"i", "|C(i)|"});
    for (std::size_t i = 0; i < r.size_C.size(); ++i) t.add({std::to_string(i), std::to_string(r.size_C[i])});
    os << t.str();
    out.output = os.str();
  }
  return out;
}

CommandResult cmd_generators(const RunConfig& config) {
  const Single s = single_params(config);
  if (s.error) return *s.error;
  const FamilyParams& params = s.params;
  CommandResult out;
  try {
    const IndexData data(params, config.tie_break);
    Json doc;
    std::size_t n1 = 0, n2 = 0;
    if (config.fibre == Fibre::Special) {
      const auto g1 = build_G1<Fp>(data, Fibre::Special, config.all_pairs);
      const auto g2 = build_G2_special(data);
      doc = generators_document(params, config.fibre, config.tie_break, g1, g2);
      n1 = g1.size();
      n2 = g2.size();
    } else {
      const auto g1 = build_G1<Cyclo>(data, config.fibre, config.all_pairs);
      const auto g2 = config.fibre == Fibre::Generic ? build_G2_generic(data) : build_G2_relative(data);
      doc = generators_document(params, config.fibre, config.tie_break, g1, g2);
      n1 = g1.size();
      n2 = g2.size();
    }
    if (config.format == Format::Json) {
      out.output = dump(doc);
    } else {
      Table t({"fibre", "G1", "G2"});
      t.add({std::string(to_string(config.fibre)), std::to_string(n1), std::to_string(n2)});
      out.output = t.str();
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unsupported) return usage_error(first_line(e.what()));
    out.exit_code = kMathFailure;
    out.diagnostics.push_back(std::string("error: ") + std::string(to_string(e.kind())) + ": " + e.what());
  }
  return out;
}

CommandResult cmd_certify(const RunConfig& config) {
  const Single s = single_params(config);
  if (s.error) return *s.error;
  const FamilyParams& params = s.params;
  if (params.q > kMaxPolyQ) return usage_error("polynomial computations support q <= " + std::to_string(kMaxPolyQ));
  CertifyOptions opt;
  opt.tie_break = config.tie_break;
  opt.oracle = config.oracle;
  opt.seed = config.seed;
  opt.corrupt_one = config.corrupt_one;
  if (!config.spec.empty()) {
    try {
      opt.specialization = parse_specialization(config.spec, params.num_deformation_params());
    } catch (const std::exception& e) {
      return usage_error(first_line(e.what()));
    }
  }
  const Certificate cert = certify_relative(params, opt);
  CommandResult out;
  if (config.format == Format::Json) {
    out.output = dump(certificate_json(cert, config.timings));
  } else {
    Table t({"step", "result"});
    t.add({"membership", yes_no(cert.membership_ok)});
    t.add({"reduction", yes_no(cert.reduction_ok)});
    t.add({"relations", yes_no(cert.relations.all())});
    t.add({"standard monomials", std::to_string(cert.special_criterion.standard_count)});
    t.add({"bound 3(g-1)", std::to_string(cert.special_criterion.bound)});
    t.add({"criterion", yes_no(cert.special_criterion.verdict && cert.generic_criterion.verdict)});
    for (const auto* run : {&cert.generic_oracle, &cert.special_oracle}) {
      if (!*run) continue;
      const std::string name = run == &cert.generic_oracle ? "oracle generic" : "oracle special";
      t.add({name + " kernel", (*run)->report ? std::to_string((*run)->report->kernel_dim) : "-"});
      t.add({name + " span", yes_no((*run)->report && (*run)->report->span_equal)});
    }
    t.add({"status", std::string(to_string(cert.status))});
    out.output = t.str();
  }
  for (const auto& e : cert.errors) out.diagnostics.push_back("error: " + e);
  switch (cert.status) {
    case CertificateStatus::Pass: break;
    case CertificateStatus::PassWithCaveat: {
      std::string note = "note: Petri-based conclusion withheld (";
      for (std::size_t i = 0; i < cert.caveats.size(); ++i) note += (i ? ", " : "") + cert.caveats[i];
      out.diagnostics.push_back(note + ")");
      break;
    }
    case CertificateStatus::Fail: out.exit_code = kMathFailure; break;
  }
  return out;
}

CommandResult cmd_sweep(const RunConfig& config) {
  std::vector<FamilyParams> cells;
  try {
    for (long p : config.p) {
      for (long q : config.q) {
        std::vector<long> ells = config.ell;
        if (ells.empty()) {
          for (long l = 1; l < p; ++l) ells.push_back(l);
        }
        for (long l : ells) cells.push_back(validate_params(p, q, l));
      }
    }
  } catch (const Error& e) {
    return usage_error(param_message(e));
  }
  CommandResult out;
  bool all = true;
  Json rows = Json::array();
  Table t({"p", "q", "ell", "g", "|A+A|", "|C(0)|", "|(A+A)\\C(0)|", "3(g-1)", "equal", "lemmas"});
  for (const auto& params : cells) {
    const CountReport r = check_counting_lemmas(IndexData(params, config.tie_break));
    all = all && r.all_pass();
    t.add({std::to_string(params.p), std::to_string(params.q), std::to_string(params.ell),
           std::to_string(params.genus), std::to_string(r.size_AA), std::to_string(r.size_C[0]),
           std::to_string(r.outside_C0), std::to_string(r.bound), yes_no(r.equality),
           r.all_pass() ? "pass" : "FAIL"});
    Json row;
    row["params"] = params_json(params);
    row["counts"] = count_report_json(r);
    rows.push_back(std::move(row));
  }
  if (config.format == Format::Json) {
    Json j;
    j["schema"] = "askw-sweep/1";
    j["tie_break"] = std::string(to_string(config.tie_break));
    j["rows"] = std::move(rows);
    j["all_pass"] = all;
    out.output = dump(j);
  } else {
    out.output = t.str();
  }
  if (!all) {
    out.exit_code = kMathFailure;
    out.diagnostics.push_back("note: some counting lemmas fail on this range");
  }
  return out;
}

CommandResult dispatch(const RunConfig& config) {
  if (config.subcommand == "info") return cmd_info(config);
  if (config.subcommand == "generators") return cmd_generators(config);
  if (config.subcommand == "certify") return cmd_certify(config);
  if (config.subcommand == "sweep") return cmd_sweep(config);
  return usage_error("unknown subcommand '" + config.subcommand + "'");
}

int emit(const RunConfig& config, CommandResult result) {
  for (const auto& d : result.diagnostics) std::cerr << d << "\n";
  if (result.output.empty()) return result.exit_code;
  if (config.out.empty()) {
    std::cout << result.output;
    std::cout.flush();
    return std::cout ? result.exit_code : static_cast<int>(kIo);
  }
  std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "error: cannot open " << config.out << " for writing\n";
    return kIo;
  }
  f << result.output;
  f.close();
  if (!f) {
    std::cerr << "error: failed writing " << config.out << "\n";
    return kIo;
  }
  return result.exit_code;
}

}  // namespace askw::cli
