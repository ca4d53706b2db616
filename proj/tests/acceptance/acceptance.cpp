// Acceptance suite: one line per criterion, exit status 1 if any selected
// criterion fails. `--only N` runs a single criterion; `--cli PATH` points at
// the command-line binary for the cross-process determinism check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "askw/cli.hpp"
#include "askw/error.hpp"
#include "askw/exactalg/cyclo.hpp"
#include "askw/verify.hpp"

using namespace askw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::tuple<int, int, int>> sweep() {
  std::vector<std::tuple<int, int, int>> out;
  for (int p : {3, 5, 7}) {
    for (int q : {1, 2, 3}) {
      for (int l = 1; l < p; ++l) out.emplace_back(p, q, l);
    }
  }
  return out;
}

std::string triple(int p, int q, int l) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(l) + ")";
}

void budget(Outcome& o, Clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  std::ostringstream os;
  os.precision(3);
  os << "; " << s << " s (limit " << limit << " s)";
  o.detail += os.str();
  if (s >= limit) o.pass = false;
}

Outcome genus_identity() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string bad;
  for (auto [p, q, l] : sweep()) {
    const auto params = validate_params(p, q, l);
    if (params.genus != static_cast<long>(build_A(params).size())) bad += " " + triple(p, q, l);
  }
  o.pass = bad.empty();
  o.detail = std::to_string(sweep().size()) + " triples" + (bad.empty() ? "" : ", mismatch at" + bad);
  budget(o, t0, 1.0);
  return o;
}

Outcome minkowski_closed_form() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string bad;
  for (auto [p, q, l] : sweep()) {
    const auto params = validate_params(p, q, l);
    if (minkowski_closed(params) != minkowski_brute(build_A(params))) bad += " " + triple(p, q, l);
  }
  o.pass = bad.empty();
  o.detail = bad.empty() ? "closed form equals brute force on all triples" : "mismatch at" + bad;
  budget(o, t0, 5.0);
  return o;
}

Outcome c0_closed_form() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string closed, incl, sub;
  for (auto [p, q, l] : sweep()) {
    const auto r = check_counting_lemmas(validate_params(p, q, l));
    if (!r.description_C_ok) closed += " " + triple(p, q, l);
    if (!r.inclusion_ok) incl += " " + triple(p, q, l);
    if (!r.b_subadditive_ok) sub += " " + triple(p, q, l);
  }
  o.pass = closed.empty() && incl.empty() && sub.empty();
  o.detail = "closed form for C(0): " + (closed.empty() ? std::string("ok") : "differs at" + closed) +
             "; C(0) in C(i): " + (incl.empty() ? std::string("ok") : "fails at" + incl) +
             "; b(T+a) <= b(T)+a: " + (sub.empty() ? std::string("ok") : "fails at" + sub);
  budget(o, t0, 10.0);
  return o;
}

Outcome counting_bound() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string bad;
  for (auto [p, q, l] : sweep()) {
    const auto r = check_counting_lemmas(validate_params(p, q, l));
    if (!r.bound_ok) {
      bad += " " + triple(p, q, l) + " " + std::to_string(r.outside_C0) + ">" + std::to_string(r.bound);
    }
  }
  std::string eq;
  for (auto [p, q, l, want] : {std::tuple{5, 2, 1, 45L}, std::tuple{5, 2, 3, 33L}, std::tuple{3, 2, 1, 9L}}) {
    const auto r = check_counting_lemmas(validate_params(p, q, l));
    const bool ok = r.outside_C0 == want && r.bound == want;
    if (!ok) o.pass = false;
    eq += " " + triple(p, q, l) + " " + std::to_string(r.outside_C0) + "=" + std::to_string(r.bound) +
          (ok ? "" : "(expected " + std::to_string(want) + ")");
  }
  if (!bad.empty()) o.pass = false;
  o.detail = "bound " + (bad.empty() ? std::string("holds on all triples") : "fails at" + bad) + "; equality:" + eq;
  budget(o, t0, 10.0);
  return o;
}

template <class R>
void membership_pass(const FibreModel<R>& model, const std::vector<GeneratorPoly<R>>& gens, int p,
                     long& members, long& failures, long& controls) {
  for (const auto& g : gens) {
    if (check_membership(model, g)) {
      ++members;
    } else {
      ++failures;
    }
    if (!check_membership(model, perturb_one(g, p))) ++controls;
  }
}

Outcome membership() {
  Outcome o;
  for (auto [p, q, l] : {std::tuple{5, 2, 1}, std::tuple{5, 2, 3}}) {
    const auto t0 = Clock::now();
    const auto params = validate_params(p, q, l);
    const IndexData data(params);
    long members = 0, failures = 0, controls = 0, total = 0;
    {
      const auto m = make_generic_model(params);
      auto gens = build_G1<Cyclo>(data, Fibre::Generic);
      const auto g2 = build_G2_generic(data);
      gens.insert(gens.end(), g2.begin(), g2.end());
      total += static_cast<long>(gens.size());
      membership_pass(*m, gens, p, members, failures, controls);
    }
    {
      const auto m = make_special_model(params);
      auto gens = build_G1<Fp>(data, Fibre::Special);
      const auto g2 = build_G2_special(data);
      gens.insert(gens.end(), g2.begin(), g2.end());
      total += static_cast<long>(gens.size());
      membership_pass(*m, gens, p, members, failures, controls);
    }
    {
      const auto m = make_relative_model(params);
      auto gens = build_G1<Cyclo>(data, Fibre::Relative);
      const auto g2 = build_G2_relative(data);
      gens.insert(gens.end(), g2.begin(), g2.end());
      total += static_cast<long>(gens.size());
      membership_pass(*m, gens, p, members, failures, controls);
    }
    const bool ok = failures == 0 && controls == total;
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + triple(p, q, l) + " " + std::to_string(members) + "/" +
                std::to_string(total) + " reduce to zero, " + std::to_string(controls) + "/" +
                std::to_string(total) + " perturbed controls nonzero";
    budget(o, t0, 120.0);
  }
  return o;
}

Outcome dimension() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto params = validate_params(5, 2, 1);
  const IndexData data(params);
  auto g1 = build_G1<Cyclo>(data, Fibre::Relative);
  auto full = g1;
  const auto g2 = build_G2_relative(data);
  full.insert(full.end(), g2.begin(), g2.end());
  const auto with = dimension_criterion(params, full);
  const auto without = dimension_criterion(params, g1);
  o.pass = with.standard_count == 45 && with.bound == 45 && with.verdict && without.standard_count == 49 &&
           !without.verdict;
  o.detail = "G1+G2: " + std::to_string(with.standard_count) + " standard (bound " + std::to_string(with.bound) +
             "); G1 alone: " + std::to_string(without.standard_count);
  budget(o, t0, 10.0);
  return o;
}

Outcome lambda_layer() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string bad;
  for (int p : {3, 5, 7}) {
    const Cyclo pe = Cyclo::from_rational(p, p);
    for (int s = 1; s <= p - 1; ++s) {
      // p * lambda^(-s) by exact division by lambda^s
      const Fp got = reduce_mod_lambda(divide_by_lambda_power(pe, s));
      const Fp want(s == p - 1 ? -1 : 0, static_cast<std::uint32_t>(p));
      if (!(got == want)) bad += " p=" + std::to_string(p) + ",s=-" + std::to_string(s);
    }
  }
  std::string red;
  for (auto [p, q, l] : sweep()) {
    const IndexData data(validate_params(p, q, l));
    if (!(reduce_relative_to_special(build_G2_relative(data)) == build_G2_special_on(data, data.C(0)))) {
      red += " " + triple(p, q, l);
    }
  }
  o.pass = bad.empty() && red.empty();
  o.detail = "p*lambda^s mod lambda: " + (bad.empty() ? std::string("ok") : "wrong at" + bad) +
             "; relative reduces to special term-for-term: " +
             (red.empty() ? std::string("ok on all triples") : "differs at" + red);
  budget(o, t0, 10.0);
  return o;
}

Outcome oracle() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto params = validate_params(5, 2, 1);
  const IndexData data(params);
  const std::vector<Rational> spec{1, 2};
  for (Fibre f : {Fibre::Generic, Fibre::Special}) {
    const auto r = kernel_oracle(data, f, spec);
    const bool ok = r.kernel_dim == 91 && r.expected_dim == 91 && r.generators_in_kernel && r.kernel_in_span;
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string(to_string(f)) + " kernel " +
                std::to_string(r.kernel_dim) + ", G in kernel " + (r.generators_in_kernel ? "yes" : "no") +
                ", kernel in span " + (r.kernel_in_span ? "yes" : "no");
  }
  budget(o, t0, 600.0);
  return o;
}

std::string run_process(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  pclose(f);
  return out;
}

Outcome determinism(const std::string& cli_path) {
  const auto t0 = Clock::now();
  Outcome o;
  cli::RunConfig gen;
  gen.subcommand = "generators";
  gen.p = {5};
  gen.q = {2};
  gen.ell = {1};
  cli::RunConfig cert = gen;
  cert.subcommand = "certify";
  const bool gen_same = cli::cmd_generators(gen).output == cli::cmd_generators(gen).output;
  const bool cert_same = cli::cmd_certify(cert).output == cli::cmd_certify(cert).output;
  o.pass = gen_same && cert_same;
  o.detail = std::string("in-process repeat: generators ") + (gen_same ? "identical" : "differ") + ", certify " +
             (cert_same ? "identical" : "differ");

  if (!cli_path.empty()) {
    const std::string g = cli_path + " generators -p 5 -q 2 -l 3 2>/dev/null";
    const std::string c = cli_path + " certify -p 5 -q 2 -l 3 2>/dev/null";
    const std::string g1 = run_process(g), c1 = run_process(c);
    const bool gs = !g1.empty() && g1 == run_process(g);
    const bool cs = !c1.empty() && c1 == run_process(c);
    o.pass = o.pass && gs && cs;
    o.detail += std::string("; across processes: ") + (gs && cs ? "identical" : "differ");
  }

  std::string bad;
  for (auto [p, q, l] : sweep()) {
    const auto params = validate_params(p, q, l);
    const auto a = check_counting_lemmas(IndexData(params, TieBreak::Default));
    const auto b = check_counting_lemmas(IndexData(params, TieBreak::Alt));
    if (a.size_AA != b.size_AA || a.size_C != b.size_C || a.outside_C0 != b.outside_C0) {
      bad += " " + triple(p, q, l);
    }
  }
  CertifyOptions alt;
  alt.tie_break = TieBreak::Alt;
  const auto c1 = certify_relative(validate_params(5, 2, 1));
  const auto c2 = certify_relative(validate_params(5, 2, 1), alt);
  if (c1.g1_count != c2.g1_count || c1.g2_relative_count != c2.g2_relative_count ||
      c1.special_criterion.standard_count != c2.special_criterion.standard_count ||
      c1.status != c2.status) {
    bad += " certify(5,2,1)";
  }
  o.pass = o.pass && bad.empty();
  o.detail += "; tie-break invariance: " + (bad.empty() ? std::string("counts agree") : "differs at" + bad);
  budget(o, t0, 120.0);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string cli_path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else if (a == "--cli" && i + 1 < argc) {
      cli_path = argv[++i];
    } else {
      std::cerr << "usage: askw_acceptance [--only N] [--cli PATH]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"genus identity", genus_identity},
      {"Minkowski closed form", minkowski_closed_form},
      {"C(0) closed form and inclusions", c0_closed_form},
      {"counting bound", counting_bound},
      {"membership", membership},
      {"dimension criterion", dimension},
      {"lambda-adic layer", lambda_layer},
      {"independent oracle", oracle},
      {"determinism", [&] { return determinism(cli_path); }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int n = static_cast<int>(k) + 1;
    if (only != 0 && only != n) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << n << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL") << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
