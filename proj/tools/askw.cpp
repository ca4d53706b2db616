#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "askw/cli.hpp"

int main(int argc, char** argv) {
  using namespace askw;
  cli::RunConfig cfg;
  std::string fibre = "relative";
  std::string format = "json";
  std::string tie = "default";

  CLI::App app{"Canonical ideals of the Artin-Schreier-Kummer-Witt family"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--tie-break", tie, "Final tie-break of the term order")->check(CLI::IsMember({"default", "alt"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
  };
  auto add_single = [&](CLI::App* sub) {
    sub->add_option("-p", cfg.p, "Odd prime p")->required()->expected(1);
    sub->add_option("-q", cfg.q, "q >= 1")->required()->expected(1);
    sub->add_option("-l,--ell", cfg.ell, "1 <= ell <= p-1")->required()->expected(1);
    add_common(sub);
  };

  auto* info = app.add_subcommand("info", "Genus, flags and index-set sizes");
  add_single(info);

  auto* gens = app.add_subcommand("generators", "Export G1 and the fibre's G2");
  add_single(gens);
  gens->add_option("--fibre", fibre, "generic, special or relative")
      ->check(CLI::IsMember({"generic", "special", "relative"}));
  gens->add_flag("--all-pairs", cfg.all_pairs, "Emit every binomial of each class instead of a spanning set");

  auto* cert = app.add_subcommand("certify", "Certify the relative generating set");
  add_single(cert);
  cert->add_flag("--oracle", cfg.oracle, "Run the kernel oracles on both fibres");
  cert->add_option("--spec", cfg.spec, "Oracle specialization, e.g. \"x1=1,x2=2\"");
  cert->add_option("--seed", cfg.seed, "Seed for the retry specializations");
  cert->add_flag("--corrupt-one", cfg.corrupt_one, "Negative control: perturb one generator");
  cert->add_flag("--timings", cfg.timings, "Include wall-clock timings in the certificate");

  auto* sweep = app.add_subcommand("sweep", "Counting lemmas over parameter ranges");
  sweep->add_option("-p", cfg.p, "Primes")->expected(0, -1);
  sweep->add_option("-q", cfg.q, "Values of q")->expected(0, -1);
  sweep->add_option("-l,--ell", cfg.ell, "Values of ell (default: 1..p-1)")->expected(0, -1);
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(cli::kUsage);
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.fibre = parse_fibre(fibre);
  cfg.format = format == "table" ? cli::Format::Table : cli::Format::Json;
  cfg.tie_break = parse_tie_break(tie);
  try {
    return cli::emit(cfg, cli::dispatch(cfg));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kMathFailure;
  }
}
