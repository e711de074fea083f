#include "heckelab/hecke.hpp"

#include <algorithm>

namespace heckelab {

OneDimRep::OneDimRep(const Composition& lambda, std::vector<Scalar> values,
                     const Field& F)
    : lambda_(lambda), fld_(F), values_(std::move(values)) {
  block_of_gen_.assign(lambda.n + 1, -1);
  int block = 0;
  int start = 1;
  for (int p : lambda.parts) {
    if (p >= 2) {
      for (int j = start; j <= start + p - 2; ++j) block_of_gen_[j] = block;
      ++block;
    }
    start += p;
  }
  if ((int)values_.size() != block)
    throw invalid_representation_error("wrong number of block values");
  Scalar q = F.q();
  Scalar minus_one = -F.one();
  for (const auto& v : values_)
    if (v != q && v != minus_one)
      throw invalid_representation_error(
          "one-dimensional representation value must be q or -1");
}

OneDimRep OneDimRep::trivial(const Composition& lambda, const Field& F) {
  int blocks = 0;
  for (int p : lambda.parts)
    if (p >= 2) ++blocks;
  return OneDimRep(lambda, std::vector<Scalar>(blocks, F.q()), F);
}

OneDimRep OneDimRep::alternating(const Composition& lambda, const Field& F) {
  int blocks = 0;
  for (int p : lambda.parts)
    if (p >= 2) ++blocks;
  return OneDimRep(lambda, std::vector<Scalar>(blocks, -F.one()), F);
}

Scalar OneDimRep::value(int gen) const {
  if (gen < 1 || gen > lambda_.n || block_of_gen_[gen] < 0)
    throw error("generator not in the parabolic subalgebra");
  return values_[block_of_gen_[gen]];
}

bool OneDimRep::is_alternating() const {
  Scalar minus_one = -fld_.one();
  for (const auto& v : values_)
    if (v != minus_one) return false;
  return true;
}

OneDimRep OneDimRep::tilde() const {
  Scalar shift = fld_.q() - fld_.one();
  std::vector<Scalar> vals;
  for (const auto& v : values_) vals.push_back(shift - v);
  return OneDimRep(lambda_, vals, fld_);
}

std::string OneDimRep::str() const {
  std::string s = "[";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ";";
    s += values_[i].str();
  }
  return s + "]";
}

HeckeElt HeckeElt::unit(int n, const Field& F) {
  HeckeElt e(n, F);
  e.add_term(Perm::identity(n), F.one());
  return e;
}

HeckeElt HeckeElt::basis(int n, const Field& F, const Perm& p) {
  HeckeElt e(n, F);
  e.add_term(p, F.one());
  return e;
}

HeckeElt HeckeElt::generator(int n, const Field& F, int i) {
  return basis(n, F, Perm::transposition(n, i));
}

void HeckeElt::add_term(const Perm& p, const Scalar& c) {
  if (p.n() != n_) throw mismatch_error("window mismatch in HeckeElt");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, c);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
  return r;
}

HeckeElt HeckeElt::scaled(const Scalar& c) const {
  HeckeElt r(n_, fld_);
  if (c.is_zero()) return r;
  for (const auto& [p, v] : terms_) r.terms_.emplace(p, v * c);
  return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*T[" + p.str() + "]";
  }
  return s;
}

// T_i * b by the generator rule.
static HeckeElt gen_mul(int i, const HeckeElt& b) {
  const Field& F = b.field();
  Scalar q = F.q();
  Scalar qm1 = q - F.one();
  HeckeElt r(b.n(), F);
  Perm tau = Perm::transposition(b.n(), i);
  for (const auto& [sig, c] : b.terms()) {
    Perm ts = tau * sig;
    if (perm_length(ts) > perm_length(sig)) {
      r.add_term(ts, c);
    } else {
      r.add_term(sig, qm1 * c);
      r.add_term(ts, q * c);
    }
  }
  return r;
}

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw mismatch_error("window mismatch in hecke_mul");
  if (a.field() != b.field()) throw mismatch_error("field mismatch in hecke_mul");
  HeckeElt result(a.n(), a.field());
  for (const auto& [pi, c] : a.terms()) {
    std::vector<int> word = reduced_word(pi);
    HeckeElt cur = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = gen_mul(*it, cur);
    result = result + cur.scaled(c);
  }
  return result;
}

HeckeElt tilde_twist(const HeckeElt& a) {
  const Field& F = a.field();
  int n = a.n();
  Scalar qm1 = F.q() - F.one();
  HeckeElt result(n, F);
  for (const auto& [sig, c] : a.terms()) {
    HeckeElt acc = HeckeElt::unit(n, F);
    for (int i : reduced_word(sig)) {
      HeckeElt ti =
          HeckeElt::unit(n, F).scaled(qm1) - HeckeElt::generator(n, F, i);
      acc = hecke_mul(acc, ti);
    }
    result = result + acc.scaled(c);
  }
  return result;
}

void ModuleRep::validate() const {
  Matrix id = Matrix::identity(fld, dim);
  Matrix qid = id.scaled(fld.q());
  for (int g = 0; g < (int)gens.size(); ++g) {
    Matrix quad = (gens[g] - qid) * (gens[g] + id);
    if (!quad.is_zero())
      throw validation_error("quadratic relation fails",
                             "generator " + std::to_string(g + 1));
  }
  for (int g = 0; g + 1 < (int)gens.size(); ++g) {
    Matrix lhs = gens[g] * gens[g + 1] * gens[g];
    Matrix rhs = gens[g + 1] * gens[g] * gens[g + 1];
    if (lhs != rhs)
      throw validation_error("braid relation fails",
                             "generators " + std::to_string(g + 1) + "," +
                                 std::to_string(g + 2));
    for (int h = g + 2; h < (int)gens.size(); ++h) {
      if (gens[g] * gens[h] != gens[h] * gens[g])
        throw validation_error("commutation relation fails",
                               "generators " + std::to_string(g + 1) + "," +
                                   std::to_string(h + 1));
    }
  }
}

InducedModule induced_module(int n, const Composition& lambda,
                             const OneDimRep& chi, const Field& F) {
  if (lambda.n != n) throw mismatch_error("composition does not sum to n");
  InducedModule M;
  M.n = n;
  M.fld = F;
  M.lambda = lambda;
  M.chi = chi;
  M.basis = dist_reps(n, lambda);
  M.dim = (int)M.basis.size();
  std::map<Perm, int> index;
  for (int k = 0; k < M.dim; ++k) index[M.basis[k]] = k;
  Scalar q = F.q();
  Scalar qm1 = q - F.one();
  for (int i = 1; i < n; ++i) {
    Matrix G(F, M.dim, M.dim);
    DeodharSplit split = deodhar_partition(lambda, i);
    Perm tau = Perm::transposition(n, i);
    for (const Perm& s : split.a_set) {
      G.at(index[tau * s], index[s]) = F.one();
    }
    for (const Perm& s : split.tau_a_set) {
      G.at(index[s], index[s]) = qm1;
      G.at(index[tau * s], index[s]) = q;
    }
    for (size_t k = 0; k < split.b_set.size(); ++k) {
      const Perm& s = split.b_set[k];
      G.at(index[s], index[s]) = chi.value(split.b_j[k]);
    }
    M.gens.push_back(std::move(G));
  }
  M.validate();
  return M;
}

Matrix module_operator(const ModuleRep& M, const HeckeElt& a) {
  Matrix op(M.fld, M.dim, M.dim);
  for (const auto& [sig, c] : a.terms()) {
    Matrix acc = Matrix::identity(M.fld, M.dim);
    for (int i : reduced_word(sig)) acc = acc * M.gens[i - 1];
    op = op + acc.scaled(c);
  }
  return op;
}

std::vector<MackeyBlock> mackey_restrict(const InducedModule& M,
                                         const Composition& mu) {
  auto data = double_dist_reps(mu, M.lambda);
  std::map<Perm, int> which;
  for (size_t k = 0; k < data.size(); ++k) which[data[k].rep] = (int)k;
  std::vector<MackeyBlock> blocks(data.size());
  const Field& F = M.fld;
  for (size_t k = 0; k < data.size(); ++k) {
    blocks[k].datum = data[k];
    Perm pinv = data[k].rep.inverse();
    // chi_pi(T_i) = chi(T_{pi^{-1}(i)}) on the parabolic for nu(pi)
    std::vector<Scalar> vals;
    int start = 1;
    for (int p : data[k].nu.parts) {
      if (p >= 2) vals.push_back(M.chi.value(pinv.apply(start)));
      start += p;
    }
    blocks[k].chi_pi = OneDimRep(data[k].nu, vals, F);
  }
  for (int b = 0; b < M.dim; ++b) {
    Perm rep = double_coset_min(mu, M.lambda, M.basis[b]);
    blocks[which.at(rep)].basis_indices.push_back(b);
  }
  return blocks;
}

long hom_dim_formula(const Composition& mu, const OneDimRep& zeta,
                     const Composition& lambda, const OneDimRep& chi,
                     const Field& F) {
  if (F.q().is_zero())
    throw error("hom_dim_formula requires q != 0");
  long count = 0;
  for (const auto& d : double_dist_reps(mu, lambda)) {
    Perm pinv = d.rep.inverse();
    bool match = true;
    for (int i : d.nu_generators) {
      if (zeta.value(i) != chi.value(pinv.apply(i))) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

Subspace hom_space(const ModuleRep& M, const ModuleRep& N) {
  if (M.n != N.n || M.fld != N.fld)
    throw mismatch_error("hom_space window/field mismatch");
  const Field& F = M.fld;
  int dm = M.dim, dn = N.dim;
  int D = dm * dn;
  RrefBuilder b(F, D);
  for (size_t g = 0; g < M.gens.size(); ++g) {
    const Matrix& A = M.gens[g];
    const Matrix& B = N.gens[g];
    for (int r = 0; r < dm; ++r)
      for (int c = 0; c < dn; ++c) {
        Vec row(D, F.zero());
        bool nonzero = false;
        for (int k = 0; k < dn; ++k) {
          const Scalar& v = B.at(k, c);
          if (v.is_zero()) continue;
          row[r * dn + k] += v;
          nonzero = true;
        }
        for (int k = 0; k < dm; ++k) {
          const Scalar& v = A.at(r, k);
          if (v.is_zero()) continue;
          row[k * dn + c] -= v;
          nonzero = true;
        }
        if (nonzero) b.insert(std::move(row));
      }
  }
  b.finish();
  return kernel_from_rowspace(Subspace::from_builder(b));
}

std::pair<HeckeElt, HeckeElt> homotopy_elements(int n, int i, const Field& F) {
  if (i < 0 || i >= n) throw error("homotopy_elements index out of range");
  HeckeElt x(n, F), y(n, F);
  // x_i: sum over {e, tau_i, tau_{i-1}tau_i, ..., tau_1...tau_i}
  Perm acc = Perm::identity(n);
  x.add_term(acc, F.one());
  for (int k = i; k >= 1; --k) {
    acc = Perm::transposition(n, k) * acc;
    x.add_term(acc, F.one());
  }
  // y_i: sum over {e, tau_{i+1}, tau_{i+1}tau_{i+2}, ...} with signs
  acc = Perm::identity(n);
  Scalar q = F.q();
  y.add_term(acc, q.pow(n - 1 - i));
  int len = 0;
  for (int k = i + 1; k <= n - 1; ++k) {
    acc = acc * Perm::transposition(n, k);
    ++len;
    Scalar coeff = q.pow(n - 1 - i - len);
    if (len % 2) coeff = -coeff;
    y.add_term(acc, coeff);
  }
  return {x, y};
}

HeckeElt parabolic_alt_sum(const Composition& lambda, const Field& F) {
  int n = lambda.n;
  HeckeElt y(n, F);
  auto reps = dist_reps(n, lambda);  // D(S_lambda\S_n) = inverses of these
  int m = 0;
  for (const Perm& p : reps) m = std::max(m, perm_length(p));
  Scalar q = F.q();
  for (const Perm& p : reps) {
    int len = perm_length(p);
    Scalar coeff = q.pow(m - len);
    if (len % 2) coeff = -coeff;
    y.add_term(p.inverse(), coeff);
  }
  return y;
}

HeckeElt x_parabolic(const Composition& mu, const Field& F) {
  HeckeElt x(mu.n, F);
  for (const Perm& p : young_subgroup(mu)) x.add_term(p, F.one());
  return x;
}

std::vector<Matrix> zero_hecke_gr_action(const Composition& lambda,
                                         const Composition& mu,
                                         const OneDimRep& chi,
                                         const OneDimRep& chi_prime,
                                         const Field& F) {
  if (F.q().is_zero())
    throw error("zero_hecke_gr_action requires q != 0");
  if (lambda.n != mu.n) throw mismatch_error("compositions of different n");
  int n = lambda.n;
  auto DL = dist_reps(n, lambda);
  auto DM = dist_reps(n, mu);
  std::map<Perm, int> il, im;
  for (size_t k = 0; k < DL.size(); ++k) il[DL[k]] = (int)k;
  for (size_t k = 0; k < DM.size(); ++k) im[DM[k]] = (int)k;
  int nl = (int)DL.size(), nm = (int)DM.size();
  int dim = nl * nm;
  Scalar q = F.q();
  Scalar one = F.one();

  enum Case { UP, DOWN, FIX };
  std::vector<Matrix> out;
  for (int i = 1; i < n; ++i) {
    Perm tau = Perm::transposition(n, i);
    // per coset: movement under tau_i and the data needed for eigenvalues
    auto classify = [&](const std::vector<Perm>& reps,
                        const Composition& comp) {
      DeodharSplit split = deodhar_partition(comp, i);
      std::map<Perm, std::pair<Case, int>> res;  // rep -> (case, aux)
      for (const Perm& s : split.a_set) res[s] = {UP, 0};
      for (const Perm& s : split.tau_a_set) res[s] = {DOWN, 0};
      for (size_t k = 0; k < split.b_set.size(); ++k)
        res[split.b_set[k]] = {FIX, split.b_j[k]};
      (void)reps;
      return res;
    };
    auto cl = classify(DL, lambda);
    auto cm = classify(DM, mu);
    Matrix T(F, dim, dim);
    for (int a = 0; a < nl; ++a) {
      auto [cx, jx] = cl.at(DL[a]);
      int ta = (cx == FIX) ? a : il.at(tau * DL[a]);
      for (int b = 0; b < nm; ++b) {
        auto [cy, jy] = cm.at(DM[b]);
        int tb = (cy == FIX) ? b : im.at(tau * DM[b]);
        int src = a * nm + b;
        int dst = ta * nm + tb;
        if ((cx == UP && (cy == UP || cy == FIX)) || (cx == FIX && cy == UP)) {
          T.at(dst, src) += one;
        } else if (cx == UP && cy == DOWN) {
          // zero
        } else if (cx == DOWN && cy == UP) {
          T.at(src, src) -= one;
          T.at(dst, src) += q;
        } else if ((cx == DOWN && (cy == DOWN || cy == FIX)) ||
                   (cx == FIX && cy == DOWN)) {
          T.at(src, src) -= one;
        } else {  // both fixed
          Scalar prod = chi.value(jx) * chi_prime.value(jy);
          if (prod != one) T.at(src, src) -= one;
        }
      }
    }
    out.push_back(std::move(T));
  }
  return out;
}

}  // namespace heckelab
