// Batch driver for the verification suites: commutation, gluing, schur,
// mmn, hurwitz tables and the genus census.  Exit codes: 0 all exact,
// 1 mathematical failure (with counterexample), 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyglue/suites.hpp"

using namespace polyglue;

namespace {

struct CommonFlags {
  int N = 2;
  int degree = 3;
  std::uint64_t seed = 1;
  std::string matrix = "random";
  std::string out;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--N", f.N, "oscillator matrix size");
  cmd->add_option("--degree", f.degree, "top degree of the checked component");
  cmd->add_option("--seed", f.seed, "seed for random rational matrices");
  cmd->add_option("--matrix", f.matrix, "identity|random|file:<path>");
  cmd->add_option("--out", f.out, "write the JSON report to this path");
  cmd->add_flag("--json", f.json, "print the JSON report to stdout");
}

int finish(const Report& rep, const CommonFlags& f) {
  if (!f.out.empty()) {
    std::ofstream os(f.out);
    os << rep.to_json().dump(2) << "\n";
  }
  if (f.json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    rep.print_text(std::cout);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for commuting bosonic trace operators"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  CommonFlags cf;
  suites::CommutationConfig ccfg;
  std::string lambda_csv, mu_csv;

  auto* vc = verify->add_subcommand("commutation", "commutator suites");
  vc->add_option("--family", ccfg.family, "HH|HHmu|HI-h|hh")->required();
  vc->add_option("--n", ccfg.n, "first trace length");
  vc->add_option("--m", ccfg.m, "second trace length (family HH)");
  vc->add_option("--lambda", lambda_csv, "partition, comma-joined parts");
  vc->add_option("--mu", mu_csv, "partition for family HHmu");
  add_common(vc, cf);

  int gk = 3;
  auto* vg = verify->add_subcommand("gluing", "polygon gluing oracle suite");
  vg->add_option("--k", gk, "number of glued edge pairs (1..5)")->required();
  add_common(vg, cf);

  int sd = 3;
  auto* vs = verify->add_subcommand("schur", "symmetric-function identities");
  vs->add_option("--d", sd, "weight (1..6)")->required();
  add_common(vs, cf);

  int md = 2, mN = 0;
  auto* vm = verify->add_subcommand("mmn", "eigenstate relations");
  vm->add_option("--d", md, "weight of both partitions (1..4)")->required();
  vm->add_option("--NN", mN, "override N (default d)");
  add_common(vm, cf);

  // ---- hurwitz ----
  auto* hur = app.add_subcommand("hurwitz", "hurwitz tables");
  hur->require_subcommand(1);
  int hd = 2, hN = 0;
  auto* ht = hur->add_subcommand("table", "emit the pairing table as JSON lines");
  ht->add_option("--d", hd, "weight (1..5)")->required();
  ht->add_option("--NN", hN, "override N (default max(2,d))");
  add_common(ht, cf);

  // ---- census ----
  auto* census = app.add_subcommand("census", "combinatorial censuses");
  census->require_subcommand(1);
  int ck = 3;
  auto* cg = census->add_subcommand("genus", "genus counts over all gluings");
  cg->add_option("--k", ck, "number of glued edge pairs (1..6)")->required();
  add_common(cg, cf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (vc->parsed()) {
      ccfg.N = cf.N;
      ccfg.degree = cf.degree;
      ccfg.matrix = suites::MatrixSource::parse(cf.matrix, cf.seed);
      if (!lambda_csv.empty()) ccfg.lambda = Partition::parse_csv(lambda_csv);
      if (!mu_csv.empty()) ccfg.lambda = Partition::parse_csv(mu_csv);
      if ((ccfg.family == "HHmu" || ccfg.family == "HI-h" ||
           ccfg.family == "hh") &&
          ccfg.lambda.empty()) {
        std::cerr << "error: family " << ccfg.family
                  << " needs --lambda (or --mu)\n";
        return 2;
      }
      Report rep = suites::run_commutation(ccfg);
      rep.parameters["seed"] = cf.seed;
      return finish(rep, cf);
    }
    if (vg->parsed()) {
      Report rep = suites::run_gluing(gk, cf.seed);
      return finish(rep, cf);
    }
    if (vs->parsed()) {
      Report rep = suites::run_schur(sd, cf.seed);
      return finish(rep, cf);
    }
    if (vm->parsed()) {
      Report rep = suites::run_mmn(md, mN > 0 ? mN : md, cf.seed);
      return finish(rep, cf);
    }
    if (ht->parsed()) {
      auto [rep, table] = suites::run_hurwitz_table(hd, hN, cf.seed);
      if (!cf.out.empty()) {
        std::ofstream os(cf.out);
        hurwitz::write_hurwitz_jsonl(os, table);
        rep.parameters["table_path"] = cf.out;
        if (cf.json)
          std::cout << rep.to_json().dump(2) << "\n";
        else
          rep.print_text(std::cout);
      } else {
        hurwitz::write_hurwitz_jsonl(std::cout, table);
        if (cf.json)
          std::cout << rep.to_json().dump(2) << "\n";
        else
          rep.print_text(std::cout);
      }
      return rep.pass() ? 0 : 1;
    }
    if (cg->parsed()) {
      Report rep = suites::run_genus_census(ck);
      return finish(rep, cf);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
