#include "heckelab/suite.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <chrono>
#include <fstream>
#include <thread>

namespace heckelab {

namespace {

Poly poly_from_text(const std::string& s) { return parse_poly(s); }

Composition comp_from_text(const std::string& s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      parts.push_back(std::stoi(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw parse_error("bad composition: " + s);
    }
    pos = next + 1;
  }
  if (parts.empty()) throw parse_error("empty composition");
  return Composition(parts);
}

OneDimRep rep_from_text(const std::string& kind, const Composition& lam,
                        const Field& F) {
  if (kind == "trivial") return OneDimRep::trivial(lam, F);
  if (kind == "alternating") return OneDimRep::alternating(lam, F);
  throw parse_error("unknown representation kind: " + kind);
}

// run f(n) for n in [lo, hi] on up to `jobs` threads; rethrows first error
void parallel_degrees(int jobs, int lo, int hi,
                      const std::function<void(int)>& f) {
  if (hi < lo) return;
  int count = hi - lo + 1;
  int workers = std::max(1, std::min(jobs, count));
  if (workers == 1) {
    for (int n = lo; n <= hi; ++n) f(n);
    return;
  }
  std::atomic<int> next(lo);
  std::exception_ptr err;
  std::mutex err_mutex;
  auto body = [&]() {
    for (;;) {
      int n = next.fetch_add(1);
      if (n > hi) return;
      try {
        f(n);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mutex);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Json scalar_json(const Scalar& s) { return s.str(); }

Json dims_json(const std::vector<long>& dims) {
  Json a = Json::array();
  for (long d : dims) a.push_back(d);
  return a;
}

Matrix word_product(const std::vector<Matrix>& gens, const Field& F, int dim,
                    const Perm& p) {
  Matrix out = Matrix::identity(F, dim);
  for (int i : reduced_word(p)) out = out * gens[i - 1];
  return out;
}

// crossed module M' (x) M for induced-from-trivial modules over H(1/q), H(q)
struct CrossedModule {
  int dim = 0;
  Field fld;
  std::vector<Matrix> gens;  // the crossed operators
};

CrossedModule crossed_module(int n, const Composition& mu,
                             const Composition& lam, const Field& F) {
  Field Fq = F.with_q(F.q().inverse());
  InducedModule M = induced_module(n, lam, OneDimRep::trivial(lam, F), F);
  InducedModule Mp = induced_module(n, mu, OneDimRep::trivial(mu, Fq), Fq);
  CrossedModule c;
  c.fld = F;
  c.dim = Mp.dim * M.dim;
  for (int i = 0; i + 2 <= n; ++i)
    c.gens.push_back(change_field(Mp.gens[i], F).kronecker(M.gens[i]));
  return c;
}

}  // namespace

Field field_from_config(const CheckConfig& cfg) {
  Poly q = poly_from_text(cfg.q_text);
  if (!cfg.field_minpoly.empty())
    return Field::make(poly_from_text(cfg.field_minpoly), q);
  if (q.size() > 1)
    throw parse_error("--q with degree > 0 requires --field");
  Rat q0 = q.empty() ? Rat(0) : q[0];
  return Field::make({-q0, Rat(1)}, {q0});
}

HeckeSymmetry resolve_symmetry(const std::string& spec, const Field& F) {
  if (spec == "one_dim" || spec == "hietarinta_counterexample" ||
      spec.rfind("drinfeld_jimbo(", 0) == 0 || spec.rfind("super(", 0) == 0)
    return builtin_symmetry(spec, F);
  return load_symmetry(spec);
}

HeckeSymmetry load_symmetry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open symmetry file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  try {
    if (doc.at("basis").get<std::string>() != "lex-i-major")
      throw parse_error(path + ": unsupported basis convention");
    Poly mp, q;
    for (const auto& c : doc.at("field").at("min_poly"))
      mp.push_back(parse_rational(c.get<std::string>()));
    for (const auto& c : doc.at("field").at("q"))
      q.push_back(parse_rational(c.get<std::string>()));
    Field F = Field::make(mp, q);
    int d = doc.at("dim").get<int>();
    const auto& rows = doc.at("matrix");
    if ((int)rows.size() != d * d)
      throw parse_error(path + ": matrix must have dim^2 rows");
    Matrix R(F, d * d, d * d);
    for (int r = 0; r < d * d; ++r) {
      if ((int)rows[r].size() != d * d)
        throw parse_error(path + ": matrix row " + std::to_string(r) +
                          " must have dim^2 entries");
      for (int c = 0; c < d * d; ++c) {
        Poly p;
        for (const auto& e : rows[r][c])
          p.push_back(parse_rational(e.get<std::string>()));
        R.at(r, c) = F.from_poly(p);
      }
    }
    std::string label = doc.value("label", std::string("file:") + path);
    return check_hecke_symmetry(d, F, std::move(R), label);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void save_symmetry(const HeckeSymmetry& S, const std::string& path) {
  Json doc;
  Json mp = Json::array(), q = Json::array();
  for (const Rat& c : S.fld.min_poly()) mp.push_back(format_rational(c));
  for (const Scalar& one : {S.fld.q()})
    for (const Rat& c : one.coeffs()) q.push_back(format_rational(c));
  doc["field"] = Json{{"min_poly", mp}, {"q", q}};
  doc["dim"] = S.d;
  doc["basis"] = "lex-i-major";
  if (!S.label.empty()) doc["label"] = S.label;
  Json rows = Json::array();
  for (int r = 0; r < S.R.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < S.R.cols(); ++c) {
      Json entry = Json::array();
      for (const Rat& co : S.R.at(r, c).coeffs())
        entry.push_back(format_rational(co));
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << doc.dump(1) << "\n";
}

bool homotopy_identity_holds(const ModuleRep& M, const Field& F) {
  int n = M.n;
  if (n < 2) return true;
  std::vector<Subspace> subs;
  for (const Matrix& g : M.gens)
    subs.push_back(image(g + Matrix::identity(F, M.dim)));
  QuotientComplex qc = quotient_complex(F, M.dim, subs);
  const auto& dims = qc.complex.dims;
  std::vector<Matrix> s(n);  // s[i] : K_i -> K_{i+1}
  for (int i = 0; i < n; ++i) {
    auto [xi, yi] = homotopy_elements(n, i, F);
    Matrix op = module_operator(M, hecke_mul(xi, yi));
    s[i] = Matrix(F, dims[i + 1], dims[i]);
    for (int c = 0; c < dims[i]; ++c) {
      Vec img = qc.levels[i + 1].project(op.apply(qc.levels[i].lift(c)));
      for (int r = 0; r < dims[i + 1]; ++r) s[i].at(r, c) = img[r];
    }
  }
  Scalar nq = q_integer(F, n);
  for (int i = 0; i <= n; ++i) {
    Matrix lhs(F, dims[i], dims[i]);
    if (i < n) lhs = lhs + qc.complex.diffs[i] * s[i];
    if (i > 0) lhs = lhs + s[i - 1] * qc.complex.diffs[i - 1];
    if (lhs != Matrix::identity(F, dims[i]).scaled(nq)) return false;
  }
  return true;
}

bool module_complex_exact(const ModuleRep& M, const std::string& choice) {
  if (M.n < 2) return true;
  const Field& F = M.fld;
  std::vector<Subspace> subs;
  for (const Matrix& g : M.gens) {
    Matrix id = Matrix::identity(F, M.dim);
    if (choice == "ker_q")
      subs.push_back(kernel(g - id.scaled(F.q())));
    else if (choice == "im_plus1")
      subs.push_back(image(g + id));
    else if (choice == "im_minus_q")
      subs.push_back(image(g - id.scaled(F.q())));
    else
      throw error("unknown subspace choice: " + choice);
  }
  auto h = homology_dims(quotient_complex(F, M.dim, subs).complex);
  for (size_t i = 1; i < h.size(); ++i)
    if (h[i] != 0) return false;
  return true;
}

bool annihilator_descent_holds(const QuadraticAlgebra& Q,
                               const HeckeSymmetry& S, int n) {
  const Field& F = Q.fld;
  auto L = left_annihilator_spaces(Q, n);
  for (int k = 1; k < n; ++k) {
    Composition c = k == 1 ? Composition({1}) : Composition({1, k - 1});
    Matrix yk = module_operator(tensor_representation(S, k),
                                parabolic_alt_sum(c, F));
    // V . L_{k-1} inside T_k
    std::vector<Vec> rows;
    for (int i = 0; i < S.d; ++i)
      for (int r = 0; r < L[k - 1].dim(); ++r)
        rows.push_back(kron_vec(unit_vec(F, S.d, i), L[k - 1].basis().row(r)));
    Subspace vl = Subspace::from_rows(F, yk.cols(), rows);
    for (int r = 0; r < L[k].dim(); ++r)
      if (!vl.contains(yk.apply(L[k].basis().row(r)))) return false;
  }
  return true;
}

bool battery_hom_formula_oracle(int nmax, const std::vector<Field>& fields,
                                std::string* note) {
  for (const Field& F : fields)
    for (int n = 2; n <= nmax; ++n) {
      auto comps = all_compositions(n);
      std::vector<std::pair<Composition, OneDimRep>> mods;
      for (const auto& lam : comps) {
        mods.push_back({lam, OneDimRep::trivial(lam, F)});
        mods.push_back({lam, OneDimRep::alternating(lam, F)});
      }
      std::vector<InducedModule> induced;
      for (const auto& [lam, chi] : mods)
        induced.push_back(induced_module(n, lam, chi, F));
      for (size_t a = 0; a < mods.size(); ++a)
        for (size_t b = 0; b < mods.size(); ++b) {
          long formula =
              hom_dim_formula(mods[b].first, mods[b].second, mods[a].first,
                              mods[a].second, F);
          long solved = hom_space(induced[a], induced[b]).dim();
          if (formula != solved) {
            if (note)
              *note = "formula " + std::to_string(formula) + " vs solve " +
                      std::to_string(solved) + " at n=" + std::to_string(n);
            return false;
          }
          long sym = hom_dim_formula(mods[a].first, mods[a].second,
                                     mods[b].first, mods[b].second, F);
          if (formula != sym) {
            if (note) *note = "Hom-dimension symmetry fails";
            return false;
          }
        }
    }
  return true;
}

bool battery_alternating_hom_q0(int nmax, std::string* note) {
  Field F0 = Field::make({Rat(0), Rat(1)}, {Rat(0)});
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : all_compositions(n))
      for (bool alt : {false, true}) {
        OneDimRep chi = alt ? OneDimRep::alternating(lam, F0)
                            : OneDimRep::trivial(lam, F0);
        InducedModule M = induced_module(n, lam, chi, F0);
        Subspace joint = Subspace::full(F0, M.dim);
        for (const auto& g : M.gens)
          joint =
              subspace_intersect(joint, kernel(g + Matrix::identity(F0, M.dim)));
        bool chi_alt = true;
        for (int p : lam.parts)
          if (p >= 2) chi_alt = chi_alt && alt;
        if (joint.dim() != (chi_alt ? 1 : 0)) {
          if (note) *note = "alternating Hom at q=0 fails for " + lam.str();
          return false;
        }
      }
  return true;
}

bool battery_tilde_twist(int nmax, const std::vector<Field>& fields,
                         std::string* note) {
  for (const Field& F : fields)
    for (int n = 2; n <= nmax; ++n)
      for (const auto& lam : all_compositions(n))
        for (bool alt : {false, true}) {
          OneDimRep chi = alt ? OneDimRep::alternating(lam, F)
                              : OneDimRep::trivial(lam, F);
          InducedModule M = induced_module(n, lam, chi, F);
          InducedModule Mt = induced_module(n, lam, chi.tilde(), F);
          ModuleRep twisted = M;
          Matrix shift =
              Matrix::identity(F, M.dim).scaled(F.q() - F.one());
          for (auto& g : twisted.gens) g = shift - g;
          Subspace h = hom_space(twisted, Mt);
          bool found = false;
          for (int k = 0; k < h.dim() && !found; ++k) {
            Matrix phi(F, twisted.dim, Mt.dim);
            for (int r = 0; r < twisted.dim; ++r)
              for (int c = 0; c < Mt.dim; ++c)
                phi.at(r, c) = h.basis().at(k, r * Mt.dim + c);
            found = image(phi).dim() == M.dim;
          }
          if (!found) {
            if (note) *note = "no tilde-twist isomorphism for " + lam.str();
            return false;
          }
        }
  return true;
}

bool battery_trivial_intersection_q_neg1(int nmax, std::string* note) {
  Field F = Field::make({Rat(1), Rat(1)}, {Rat(-1)});
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : all_compositions(n))
      for (const auto& mu : all_compositions(n)) {
        InducedModule M =
            induced_module(n, lam, OneDimRep::trivial(lam, F), F);
        InducedModule N = induced_module(n, mu, OneDimRep::trivial(mu, F), F);
        Subspace h = hom_space(M, N);
        long count = (long)trivial_intersection_reps(mu, lam).size();
        long good;
        if (h.dim() == 0) {
          good = 0;
        } else {
          Subspace xm = image(module_operator(M, x_parabolic(mu, F)));
          Subspace perp = orthogonal_complement(xm);
          std::vector<Vec> rows;
          for (int k = 0; k < perp.dim(); ++k) {
            Vec row(M.dim * N.dim, F.zero());
            for (int r = 0; r < M.dim; ++r)
              row[r * N.dim] = perp.basis().at(k, r);
            rows.push_back(row);
          }
          Subspace constr = kernel_from_rowspace(
              Subspace::from_rows(F, M.dim * N.dim, rows));
          good = subspace_intersect(h, constr).dim();
        }
        if (good != count) {
          if (note)
            *note = "count " + std::to_string(good) + " vs " +
                    std::to_string(count) + " for (" + mu.str() + ";" +
                    lam.str() + ")";
          return false;
        }
      }
  return true;
}

bool battery_graded_action_relations(int nmax,
                                     const std::vector<Field>& fields,
                                     std::string* note) {
  for (const Field& F : fields) {
    Field Fq = F.with_q(F.q().inverse());
    for (int n = 2; n <= nmax; ++n)
      for (const auto& lam : all_compositions(n))
        for (const auto& mu : all_compositions(n))
          for (bool alt1 : {false, true})
            for (bool alt2 : {false, true}) {
              OneDimRep chi = alt1 ? OneDimRep::alternating(lam, F)
                                   : OneDimRep::trivial(lam, F);
              OneDimRep chi2 = alt2 ? OneDimRep::alternating(mu, Fq)
                                    : OneDimRep::trivial(mu, Fq);
              auto mats = zero_hecke_gr_action(lam, mu, chi, chi2, F);
              for (size_t i = 0; i < mats.size(); ++i) {
                if (!(mats[i] * mats[i] == mats[i].scaled(-F.one()))) {
                  if (note) *note = "quadratic relation fails";
                  return false;
                }
                if (i + 1 < mats.size() &&
                    !(mats[i] * mats[i + 1] * mats[i] ==
                      mats[i + 1] * mats[i] * mats[i + 1])) {
                  if (note) *note = "braid relation fails";
                  return false;
                }
                for (size_t j = i + 2; j < mats.size(); ++j)
                  if (!(mats[i] * mats[j] == mats[j] * mats[i])) {
                    if (note) *note = "commutation fails";
                    return false;
                  }
              }
            }
  }
  return true;
}

bool battery_graded_preimage(int nmax, const std::vector<Field>& fields,
                             std::string* note) {
  for (const Field& F : fields)
    for (int n = 2; n <= nmax; ++n)
      for (const auto& lam : all_compositions(n))
        for (const auto& mu : all_compositions(n)) {
          CrossedModule c = crossed_module(n, mu, lam, F);
          std::vector<Subspace> U;
          for (const Matrix& g : c.gens)
            U.push_back(kernel(g - Matrix::identity(F, c.dim)));
          Subspace sigma(F, c.dim), sigma1(F, c.dim);
          for (size_t i = 0; i < U.size(); ++i) {
            sigma = subspace_sum(sigma, U[i]);
            if (i > 0) sigma1 = subspace_sum(sigma1, U[i]);
          }
          long quotient = c.dim - sigma.dim();
          long count = (long)trivial_intersection_reps(mu, lam).size();
          if (quotient != count) {
            if (note)
              *note = "crossed quotient dim " + std::to_string(quotient) +
                      " vs " + std::to_string(count) + " for (" + mu.str() +
                      ";" + lam.str() + ")";
            return false;
          }
          Matrix y(F, c.dim, c.dim);
          for (const Perm& p : dist_reps(n, Composition({1, n - 1}))) {
            Perm s = p.inverse();
            Matrix t = word_product(c.gens, F, c.dim, s);
            y = perm_length(s) % 2 == 0 ? y + t : y - t;
          }
          if (!(preimage(y, sigma1) == sigma)) {
            if (note)
              *note = "y-preimage mismatch for (" + mu.str() + ";" +
                      lam.str() + ")";
            return false;
          }
        }
  return true;
}

namespace {

Json koszul_json(const QuadraticAlgebra& Q, int N, int jobs, bool& exact,
                 int& first_fail) {
  std::vector<std::vector<int>> hom(N + 1);
  parallel_degrees(jobs, 2, N, [&](int n) {
    std::vector<Subspace> subs;
    for (int i = 1; i <= n - 1; ++i) subs.push_back(shifted_relations(Q, n, i));
    long amb = 1;
    for (int k = 0; k < n; ++k) amb *= Q.d;
    hom[n] = homology_dims(quotient_complex(Q.fld, (int)amb, subs).complex);
  });
  exact = true;
  first_fail = -1;
  Json table;
  for (int n = 2; n <= N; ++n) {
    Json h = Json::array();
    for (size_t i = 0; i < hom[n].size(); ++i) {
      h.push_back(hom[n][i]);
      if (i >= 1 && hom[n][i] != 0 && exact) {
        exact = false;
        first_fail = n;
      }
    }
    table[std::to_string(n)] = h;
  }
  return table;
}

struct VerifyContext {
  CheckConfig cfg;
  Field F;
  std::vector<HeckeSymmetry> syms;

  const HeckeSymmetry& sym(size_t i) const {
    if (syms.size() <= i)
      throw error("check needs " + std::to_string(i + 1) + " symmetries");
    return syms[i];
  }
};

Json check_relations(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& S = ctx.sym(0);
  check_hecke_symmetry(S.d, S.fld, S.R, S.label);
  int upto = std::min(ctx.cfg.nmax, 3);
  for (int n = 2; n <= upto; ++n) tensor_representation(S, n);
  pass = true;
  return Json{{"status", "pass"},
              {"d", S.d},
              {"q", scalar_json(S.fld.q())},
              {"tensor_degrees_validated", upto}};
}

Json check_koszul(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& S = ctx.sym(0);
  int N = std::max(2, ctx.cfg.nmax);
  Json out;
  pass = true;
  for (auto [key, Q] : {std::pair<std::string, QuadraticAlgebra>(
                            "sym", sym_relations(S)),
                        {"ext", ext_relations(S)}}) {
    bool exact;
    int ff;
    Json table = koszul_json(Q, N, ctx.cfg.jobs, exact, ff);
    out[key] = Json{{"exact_through", N},
                    {"exact", exact},
                    {"first_failure", ff},
                    {"homology", table}};
    pass = pass && exact;
  }
  out["status"] = pass ? "pass" : "fail";
  return out;
}

Json check_hilbert_duality(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& S = ctx.sym(0);
  int N = ctx.cfg.nmax;
  auto sd = component_dims(sym_relations(S), N);
  auto ed = component_dims(ext_relations(S), N);
  DualityReport rep = hilbert_duality_check(sd, ed, N);
  pass = rep.holds;
  return Json{{"status", pass ? "pass" : "fail"},
              {"sym_dims", dims_json(sd)},
              {"ext_dims", dims_json(ed)},
              {"first_failure", rep.first_failure}};
}

Json check_frobenius(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& S = ctx.sym(0);
  QuadraticAlgebra L = ext_relations(S);
  auto dims = component_dims(L, ctx.cfg.nmax);
  int top = -1;
  for (int n = 0; n <= ctx.cfg.nmax; ++n)
    if (dims[n] != 0) top = n;
  if (top < 0 || dims[ctx.cfg.nmax] != 0) {
    pass = false;
    return Json{{"status", "hypothesis-not-met"},
                {"note", "no terminating top degree within nmax"},
                {"ext_dims", dims_json(dims)}};
  }
  FrobeniusReport rep = frobenius_check(L, top);
  Json ranks = Json::array();
  for (int r : rep.pairing_ranks) ranks.push_back(r);
  pass = rep.hypothesis_ok && rep.frobenius;
  return Json{
      {"status", pass ? "pass"
                      : (rep.hypothesis_ok ? "fail" : "hypothesis-not-met")},
      {"top_degree", top},
      {"dims", dims_json(rep.dims)},
      {"pairing_ranks", ranks},
      {"message", rep.message}};
}

Json check_homotopy(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& S = ctx.sym(0);
  pass = true;
  Json per;
  std::vector<int> ok(ctx.cfg.nmax + 1, 1);
  parallel_degrees(ctx.cfg.jobs, 2, ctx.cfg.nmax, [&](int n) {
    ok[n] = homotopy_identity_holds(tensor_representation(S, n), S.fld);
  });
  for (int n = 2; n <= ctx.cfg.nmax; ++n) {
    per[std::to_string(n)] = (bool)ok[n];
    pass = pass && ok[n];
  }
  return Json{{"status", pass ? "pass" : "fail"}, {"identity_holds", per}};
}

Json check_hom_identification(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& Sp = ctx.sym(0);
  const HeckeSymmetry& S = ctx.sym(1);
  pass = true;
  Json per;
  for (int n = 0; n <= ctx.cfg.nmax; ++n) {
    HomIdentReport rep = hom_identification_check(Sp, S, n);
    per[std::to_string(n)] = Json{{"a_dim", rep.a_dim},
                                  {"hom_to_prime", rep.hom_to_prime},
                                  {"upsilon_dim", rep.ups_dim},
                                  {"hom_from_prime", rep.hom_from_prime},
                                  {"a_ok", rep.a_ok},
                                  {"e_ok", rep.e_ok}};
    pass = pass && rep.a_ok && rep.e_ok;
  }
  return Json{{"status", pass ? "pass" : "fail"}, {"degrees", per}};
}

Json check_cotensor(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& Sp = ctx.sym(0);
  const HeckeSymmetry& S = ctx.sym(1);
  const HeckeSymmetry& Spp = ctx.sym(2);
  pass = true;
  Json per;
  for (int n = 0; n <= ctx.cfg.nmax; ++n) {
    CotensorReport rep = cotensor_dim_check(Sp, S, Spp, n);
    per[std::to_string(n)] = Json{{"a_dim", rep.a_dim},
                                  {"cotensor_dim", rep.cotensor_dim},
                                  {"equal", rep.equal}};
    pass = pass && rep.equal;
  }
  return Json{{"status", pass ? "pass" : "fail"}, {"degrees", per}};
}

Json check_lemma41(const VerifyContext& ctx, bool& pass) {
  const HeckeSymmetry& S = ctx.sym(0);
  QuadraticAlgebra L = ext_relations(S);
  pass = true;
  Json per;
  for (int n = 2; n <= ctx.cfg.nmax; ++n) {
    bool ok = annihilator_descent_holds(L, S, n);
    per[std::to_string(n)] = ok;
    pass = pass && ok;
  }
  return Json{{"status", pass ? "pass" : "fail"}, {"inclusion_holds", per}};
}

Json check_hecke_suite(const VerifyContext& ctx, bool& pass) {
  int bound = std::min(ctx.cfg.nmax, 4);
  std::vector<Field> fields = {ctx.F};
  pass = true;
  Json out;
  auto run = [&](const char* name, bool ok, const std::string& note) {
    out[name] = note.empty() ? Json{{"pass", ok}}
                             : Json{{"pass", ok}, {"note", note}};
    pass = pass && ok;
  };
  std::string note;
  note.clear();
  run("hom_formula_oracle",
      battery_hom_formula_oracle(bound, fields, &note), note);
  note.clear();
  run("alternating_hom_q0", battery_alternating_hom_q0(bound, &note), note);
  note.clear();
  run("tilde_twist", battery_tilde_twist(bound, fields, &note), note);
  note.clear();
  run("trivial_intersection_q_neg1",
      battery_trivial_intersection_q_neg1(bound, &note), note);
  note.clear();
  run("graded_action_relations",
      battery_graded_action_relations(bound, fields, &note), note);
  note.clear();
  run("graded_preimage", battery_graded_preimage(bound, fields, &note), note);
  return Json{{"status", pass ? "pass" : "fail"}, {"batteries", out}};
}

Json config_json(const CheckConfig& cfg) {
  Json checks = Json::array();
  for (const auto& c : cfg.checks) checks.push_back(c);
  Json syms = Json::array();
  for (const auto& s : cfg.symmetries) syms.push_back(s);
  return Json{{"verb", cfg.verb},
              {"symmetries", syms},
              {"field_minpoly", cfg.field_minpoly},
              {"q", cfg.q_text},
              {"nmax", cfg.nmax},
              {"checks", checks},
              {"jobs", cfg.jobs},
              {"lambda", cfg.lambda_text},
              {"mu", cfg.mu_text},
              {"chi", cfg.chi_text},
              {"zeta", cfg.zeta_text}};
}

}  // namespace

CheckReport run_suite(const CheckConfig& cfg) {
  CheckReport rep;
  rep.config = config_json(cfg);
  if (cfg.verb == "homdim") {
    Field F = field_from_config(cfg);
    Composition lam = comp_from_text(cfg.lambda_text);
    Composition mu = comp_from_text(cfg.mu_text);
    OneDimRep chi = rep_from_text(cfg.chi_text, lam, F);
    OneDimRep zeta = rep_from_text(cfg.zeta_text, mu, F);
    rep.results["hom_dimension"] = hom_dim_formula(mu, zeta, lam, chi, F);
    return rep;
  }
  if (cfg.verb == "mackey") {
    Field F = field_from_config(cfg);
    Composition lam = comp_from_text(cfg.lambda_text);
    Composition mu = comp_from_text(cfg.mu_text);
    OneDimRep chi = rep_from_text(cfg.chi_text, lam, F);
    InducedModule M = induced_module(lam.n, lam, chi, F);
    Json blocks = Json::array();
    for (const auto& b : mackey_restrict(M, mu)) {
      Json vals = Json::array();
      for (const Scalar& v : b.chi_pi.block_values())
        vals.push_back(scalar_json(v));
      blocks.push_back(Json{{"representative", b.datum.rep.str()},
                            {"nu", b.datum.nu.str()},
                            {"block_dim", b.basis_indices.size()},
                            {"chi_values", vals}});
    }
    rep.results["blocks"] = blocks;
    rep.results["module_dim"] = M.dim;
    return rep;
  }
  if (cfg.verb == "dims") {
    Field F = field_from_config(cfg);
    HeckeSymmetry S = resolve_symmetry(cfg.symmetries.at(0), F);
    rep.results["sym_dims"] =
        dims_json(component_dims(sym_relations(S), cfg.nmax));
    rep.results["ext_dims"] =
        dims_json(component_dims(ext_relations(S), cfg.nmax));
    return rep;
  }
  if (cfg.verb != "verify") throw parse_error("unknown verb: " + cfg.verb);

  VerifyContext ctx{cfg, field_from_config(cfg), {}};
  for (const auto& s : cfg.symmetries)
    ctx.syms.push_back(resolve_symmetry(s, ctx.F));

  using Runner = std::function<Json(const VerifyContext&, bool&)>;
  std::vector<std::pair<std::string, Runner>> table = {
      {"relations", check_relations},
      {"koszul", check_koszul},
      {"hilbert-duality", check_hilbert_duality},
      {"frobenius", check_frobenius},
      {"homotopy", check_homotopy},
      {"hom-identification", check_hom_identification},
      {"cotensor", check_cotensor},
      {"lemma41", check_lemma41},
      {"hecke-suite", check_hecke_suite}};
  for (const auto& name : cfg.checks) {
    const Runner* runner = nullptr;
    for (const auto& [key, r] : table)
      if (key == name) runner = &r;
    if (!runner) throw parse_error("unknown check: " + name);
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    rep.results[name] = (*runner)(ctx, pass);
    rep.all_pass = rep.all_pass && pass;
    if (cfg.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      rep.timing[name] = (long)ms;
    }
  }
  return rep;
}

std::string render_report(const CheckReport& rep) {
  Json doc{{"config", rep.config},
           {"results", rep.results},
           {"timing", rep.timing}};
  return doc.dump(1) + "\n";
}

void emit_report(const CheckReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << render_report(rep);
  if (!out) throw error("write failed: " + path);
}

}  // namespace heckelab
