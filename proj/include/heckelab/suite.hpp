#ifndef HECKELAB_SUITE_HPP
#define HECKELAB_SUITE_HPP

#include <json.hpp>

#include "heckelab/symmetry.hpp"

namespace heckelab {

using Json = nlohmann::json;  // std::map-backed: keys always sorted

struct CheckConfig {
  std::string verb = "verify";
  std::vector<std::string> symmetries;  // builtin names or file paths
  std::string field_minpoly;            // optional monic min_poly, poly text
  std::string q_text = "2";             // q as poly text
  int nmax = 4;
  std::vector<std::string> checks;
  std::string out_path;
  int jobs = 1;
  bool timing = false;
  // verb-specific arguments
  std::string lambda_text, mu_text, chi_text = "trivial", zeta_text = "trivial";
};

struct CheckReport {
  Json config;
  Json results;
  Json timing;  // null unless timing was requested
  bool all_pass = true;
};

Field field_from_config(const CheckConfig& cfg);

// builtin name, or a path to a symmetry file
HeckeSymmetry resolve_symmetry(const std::string& spec, const Field& F);
HeckeSymmetry load_symmetry(const std::string& path);
void save_symmetry(const HeckeSymmetry& S, const std::string& path);

CheckReport run_suite(const CheckConfig& cfg);

// Canonical rendering: {config, results, timing}, sorted keys, newline
// terminated; byte-identical for identical configs (timing stays null unless
// requested, so default reports are reproducible).
std::string render_report(const CheckReport& rep);
void emit_report(const CheckReport& rep, const std::string& path);

// Homotopy identity of the length-n tensor module complex: builds s_i from
// x_i y_i and checks d_{i+1} s_i + s_{i-1} d_i = [n]_q Id for all i.
bool homotopy_identity_holds(const ModuleRep& M, const Field& F);

// Exactness of K_(M;(U_i)) in positive degrees for the three subspace choices
// Ker(T_i - q), Im(T_i + 1), Im(T_i - q).
bool module_complex_exact(const ModuleRep& M, const std::string& choice);

// y_k L_k inside V . L_{k-1} for the graded algebra Q, k = 1 .. n-1, with y_k
// acting through the tensor representation of S.
bool annihilator_descent_holds(const QuadraticAlgebra& Q,
                               const HeckeSymmetry& S, int n);

// Invariant batteries shared by the "hecke-suite" check and the acceptance
// runner; each returns pass/fail and appends a note on failure.
bool battery_hom_formula_oracle(int nmax, const std::vector<Field>& fields,
                                std::string* note);
bool battery_alternating_hom_q0(int nmax, std::string* note);
bool battery_tilde_twist(int nmax, const std::vector<Field>& fields,
                         std::string* note);
bool battery_trivial_intersection_q_neg1(int nmax, std::string* note);
bool battery_graded_action_relations(int nmax,
                                     const std::vector<Field>& fields,
                                     std::string* note);
bool battery_graded_preimage(int nmax, const std::vector<Field>& fields,
                             std::string* note);

}  // namespace heckelab

#endif
