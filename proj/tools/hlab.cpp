#include <CLI11.hpp>
#include <iostream>

#include "heckelab/suite.hpp"

using namespace heckelab;

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Hecke-symmetry structure theorems"};
  app.require_subcommand(1);

  CheckConfig cfg;
  std::string sym, sym2, sym3, checks_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field_minpoly,
                    "monic minimal polynomial, constant-first coefficients");
    sub->add_option("--q", cfg.q_text, "parameter q, coefficient text");
    sub->add_option("--nmax", cfg.nmax, "degree bound");
    sub->add_option("--out", cfg.out_path, "report output path");
    sub->add_option("--jobs", cfg.jobs, "concurrent degree computations");
  };

  CLI::App* verify = app.add_subcommand("verify", "run selected check suites");
  verify->add_option("--symmetry", sym, "builtin name or symmetry file");
  verify->add_option("--symmetry2", sym2, "second symmetry for pair checks");
  verify->add_option("--symmetry3", sym3, "third symmetry for cotensor");
  verify->add_option("--checks", checks_csv, "comma-separated check names");
  verify->add_flag("--timing", cfg.timing, "record wall-clock timings");
  add_common(verify);

  CLI::App* homdim = app.add_subcommand("homdim", "Hom dimension by formula");
  homdim->add_option("--lambda", cfg.lambda_text, "composition, e.g. 2,1")
      ->required();
  homdim->add_option("--mu", cfg.mu_text, "composition")->required();
  homdim->add_option("--chi", cfg.chi_text, "trivial|alternating");
  homdim->add_option("--zeta", cfg.zeta_text, "trivial|alternating");
  add_common(homdim);

  CLI::App* mackey = app.add_subcommand("mackey", "double-coset block table");
  mackey->add_option("--lambda", cfg.lambda_text, "composition")->required();
  mackey->add_option("--mu", cfg.mu_text, "restriction composition")
      ->required();
  mackey->add_option("--chi", cfg.chi_text, "trivial|alternating");
  add_common(mackey);

  CLI::App* dims = app.add_subcommand("dims", "Hilbert coefficients of S, L");
  dims->add_option("--symmetry", sym, "builtin name or symmetry file")
      ->required();
  add_common(dims);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.verb = app.get_subcommands().front()->get_name();
  for (const std::string& s : {sym, sym2, sym3})
    if (!s.empty()) cfg.symmetries.push_back(s);
  size_t pos = 0;
  while (pos <= checks_csv.size() && !checks_csv.empty()) {
    size_t next = checks_csv.find(',', pos);
    if (next == std::string::npos) next = checks_csv.size();
    if (next > pos) cfg.checks.push_back(checks_csv.substr(pos, next - pos));
    pos = next + 1;
    if (pos > checks_csv.size()) break;
  }

  try {
    CheckReport rep = run_suite(cfg);
    if (!cfg.out_path.empty())
      emit_report(rep, cfg.out_path);
    else
      std::cout << render_report(rep);
    return rep.all_pass ? 0 : 1;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const heckelab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
