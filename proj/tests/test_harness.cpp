#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "heckelab/suite.hpp"

using namespace heckelab;

static CheckConfig base_config() {
  CheckConfig cfg;
  cfg.verb = "verify";
  cfg.q_text = "2";
  cfg.nmax = 3;
  return cfg;
}

TEST_CASE("field from config") {
  CheckConfig cfg = base_config();
  Field F = field_from_config(cfg);
  CHECK(F.q() == F.from_int(2));
  cfg.field_minpoly = "1,0,1";
  cfg.q_text = "0,1";
  Field Gi = field_from_config(cfg);
  CHECK(Gi.q() * Gi.q() == Gi.from_int(-1));
  CheckConfig bad = base_config();
  bad.q_text = "0,1";
  CHECK_THROWS_AS(field_from_config(bad), parse_error);
}

TEST_CASE("symmetry file round trip") {
  Field F = field_rational(Rat(2));
  HeckeSymmetry S = builtin_symmetry("drinfeld_jimbo(2)", F);
  save_symmetry(S, "rt_sym.json");
  HeckeSymmetry back = load_symmetry("rt_sym.json");
  CHECK(back.d == S.d);
  CHECK(back.R == S.R);
  CHECK(back.fld == S.fld);
  std::remove("rt_sym.json");
}

TEST_CASE("loading rejects bad files") {
  {
    std::ofstream f("bad_parse.json");
    f << "{ not json";
  }
  CHECK_THROWS_AS(load_symmetry("bad_parse.json"), parse_error);
  std::remove("bad_parse.json");
  CHECK_THROWS_AS(load_symmetry("no_such_file.json"), parse_error);

  // wrong quadratic relation: witnessed validation failure
  {
    std::ofstream f("bad_matrix.json");
    f << R"({"basis":"lex-i-major","dim":2,
         "field":{"min_poly":["-2","1"],"q":["2"]},
         "matrix":[[["5"],["0"],["0"],["0"]],[["0"],["5"],["0"],["0"]],
                   [["0"],["0"],["5"],["0"]],[["0"],["0"],["0"],["5"]]]})";
  }
  CHECK_THROWS_AS(load_symmetry("bad_matrix.json"), validation_error);
  std::remove("bad_matrix.json");
}

TEST_CASE("reports are deterministic") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"drinfeld_jimbo(2)"};
  cfg.checks = {"relations", "hilbert-duality"};
  std::string a = render_report(run_suite(cfg));
  std::string b = render_report(run_suite(cfg));
  CHECK(a == b);
  CHECK(!a.empty());
  CHECK(a.back() == '\n');
  CHECK(a.find("\"timing\": null") != std::string::npos);
}

TEST_CASE("empty check list echoes config only") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"drinfeld_jimbo(2)"};
  CheckReport rep = run_suite(cfg);
  CHECK(rep.all_pass);
  CHECK(rep.results.empty());
  CHECK(rep.config["nmax"] == 3);
}

TEST_CASE("jobs do not change results") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"drinfeld_jimbo(2)"};
  cfg.checks = {"koszul", "homotopy"};
  cfg.nmax = 4;
  CheckReport serial = run_suite(cfg);
  cfg.jobs = 4;
  CheckReport parallel = run_suite(cfg);
  CHECK(serial.results == parallel.results);
  CHECK(serial.all_pass);
}

TEST_CASE("failing check is reported and flagged") {
  CheckConfig cfg = base_config();
  cfg.field_minpoly = "1,0,1";
  cfg.q_text = "0,1";
  cfg.nmax = 4;
  cfg.symmetries = {"hietarinta_counterexample"};
  cfg.checks = {"hilbert-duality"};
  CheckReport rep = run_suite(cfg);
  CHECK(!rep.all_pass);
  CHECK(rep.results["hilbert-duality"]["status"] == "fail");
  CHECK(rep.results["hilbert-duality"]["first_failure"] == 4);
  Json dims = rep.results["hilbert-duality"]["sym_dims"];
  CHECK(dims == Json::array({1, 2, 2, 0, 0}));
}

TEST_CASE("unknown check name is an input error") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"drinfeld_jimbo(2)"};
  cfg.checks = {"bogus"};
  CHECK_THROWS_AS(run_suite(cfg), parse_error);
}

TEST_CASE("verbs") {
  CheckConfig cfg;
  cfg.verb = "homdim";
  cfg.lambda_text = "2,1";
  cfg.mu_text = "1,1,1";
  CheckReport rep = run_suite(cfg);
  CHECK(rep.results["hom_dimension"] == 3);

  CheckConfig mk;
  mk.verb = "mackey";
  mk.lambda_text = "2,1";
  mk.mu_text = "1,2";
  CheckReport mrep = run_suite(mk);
  CHECK(mrep.results["module_dim"] == 3);
  CHECK(mrep.results["blocks"].size() == 2);

  CheckConfig dm;
  dm.verb = "dims";
  dm.symmetries = {"drinfeld_jimbo(2)"};
  dm.nmax = 4;
  CheckReport drep = run_suite(dm);
  CHECK(drep.results["sym_dims"] == Json::array({1, 2, 3, 4, 5}));
  CHECK(drep.results["ext_dims"] == Json::array({1, 2, 1, 0, 0}));
}

TEST_CASE("frobenius and lemma41 checks on the quantum plane") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"drinfeld_jimbo(2)"};
  cfg.checks = {"frobenius", "lemma41"};
  CheckReport rep = run_suite(cfg);
  CHECK(rep.all_pass);
  CHECK(rep.results["frobenius"]["top_degree"] == 2);
}

TEST_CASE("pair checks require the symmetries") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"one_dim"};
  cfg.checks = {"hom-identification"};
  CHECK_THROWS_AS(run_suite(cfg), heckelab::error);
  cfg.symmetries = {"one_dim", "drinfeld_jimbo(2)"};
  cfg.nmax = 2;
  CHECK(run_suite(cfg).all_pass);
}

TEST_CASE("cli exit codes") {
  std::string dir = std::filesystem::read_symlink("/proc/self/exe")
                        .parent_path()
                        .string();
  auto run = [&](const std::string& args) {
    int ret =
        std::system((dir + "/hlab " + args + " >/dev/null 2>&1").c_str());
    return (ret >> 8) & 0xff;
  };
  CHECK(run("dims --symmetry 'drinfeld_jimbo(2)' --nmax 3") == 0);
  CHECK(run("verify --symmetry hietarinta_counterexample --field 1,0,1 "
            "--q 0,1 --nmax 4 --checks hilbert-duality --out exit1.json") == 1);
  std::ifstream written("exit1.json");
  CHECK(written.good());  // report written despite failure
  std::remove("exit1.json");
  CHECK(run("verify --symmetry 'drinfeld_jimbo(2)' --checks bogus") == 2);
  CHECK(run("dims --symmetry no_such_file.json") == 2);
  CHECK(run("nonsense") == 2);
}

TEST_CASE("timing section populated only on request") {
  CheckConfig cfg = base_config();
  cfg.symmetries = {"drinfeld_jimbo(2)"};
  cfg.checks = {"relations"};
  CHECK(run_suite(cfg).timing.is_null());
  cfg.timing = true;
  CheckReport rep = run_suite(cfg);
  CHECK(rep.timing.contains("relations"));
}
