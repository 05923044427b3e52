// parity_forge: expand eta-quotients, dissect series and check congruences.
//
//   parity_forge expand "f2^4/f1^5" --order 30
//   parity_forge ak 5 --order 100 --mod 3
//   parity_forge dissect --in series.txt -m 3 -r 2
//   parity_forge check "ak=5 A=5 B=3 mod=5" --order 500
//   parity_forge suite all --format json

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parity_forge/cli.hpp"

namespace pf = parity_forge;

namespace {

struct shared_options {
  std::size_t order = pf::cli::default_order;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, shared_options& o) {
  cmd->add_option("-N,--order", o.order, "truncation order N (default 2000 or $PARITY_FORGE_ORDER)");
  cmd->add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-series expansion and congruence verification for coloured partitions"};
  app.require_subcommand(1);

  shared_options common;
  try {
    common.order = pf::cli::env_default_order();
  } catch (const pf::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::uint64_t modulus = 0;

  auto* expand = app.add_subcommand("expand", "expand an eta-quotient such as \"f2^4/f1^5\"");
  std::string quotient;
  expand->add_option("quotient", quotient, "eta-quotient")->required();
  add_common(expand, common);
  expand->add_option("-m,--mod", modulus, "reduce coefficients mod m");

  auto* ak = app.add_subcommand("ak", "coefficients of the k-coloured partition function a_k(n)");
  std::int64_t k = 0;
  ak->add_option("k", k, "number of colours")->required();
  add_common(ak, common);
  ak->add_option("-m,--mod", modulus, "reduce coefficients mod m");

  auto* dissect = app.add_subcommand("dissect", "extract sum c(m n + r) q^n from a series file");
  std::string input = "-";
  std::size_t stride = 0, residue = 0;
  dissect->add_option("--in", input, "series file (text or JSON); '-' reads stdin");
  dissect->add_option("-m", stride, "stride m")->required();
  dissect->add_option("-r", residue, "residue r")->required();
  dissect->add_option("--mod", modulus, "reduce coefficients mod this modulus");
  add_common(dissect, common);

  auto* check = app.add_subcommand("check", "check one congruence, e.g. \"ak=5 A=5 B=3 mod=5\"");
  std::string spec;
  check->add_option("spec", spec, "check spec")->required();
  add_common(check, common);

  auto* suite = app.add_subcommand("suite", "run a registered suite (all, lemmas, proof_steps, ...)");
  std::string suite_id = "all";
  std::string params;
  unsigned threads = 1;
  bool list = false;
  suite->add_option("suite", suite_id, "suite id");
  suite->add_option("--params", params, "parameter bounds, e.g. \"alpha=0..2,j=0..2,t=0..8\"");
  suite->add_option("-j,--threads", threads, "worker threads");
  suite->add_flag("--list", list, "list the suite's entries instead of running them");
  add_common(suite, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  pf::cli::config cfg;
  cfg.order = common.order;
  cfg.format = pf::parse_series_format(common.format);
  if (modulus != 0) cfg.modulus = modulus;
  cfg.params = params;
  cfg.threads = threads;

  std::ofstream file;
  if (!common.out.empty()) {
    file.open(common.out);
    if (!file) {
      std::cerr << "error: cannot open " << common.out << " for writing\n";
      return 2;
    }
  }
  std::ostream& out = common.out.empty() ? std::cout : file;

  if (*expand) return pf::cli::cmd_expand(quotient, cfg, out, std::cerr);
  if (*ak) return pf::cli::cmd_ak(k, cfg, out, std::cerr);
  if (*dissect) {
    std::string text;
    if (input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "error: cannot read " << input << '\n';
        return 2;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return pf::cli::cmd_dissect(text, stride, residue, cfg, out, std::cerr);
  }
  if (*check) return pf::cli::cmd_check(spec, cfg, out, std::cerr);
  if (list) return pf::cli::cmd_list(suite_id, cfg, out, std::cerr);
  return pf::cli::cmd_suite(suite_id, cfg, out, std::cerr);
}
