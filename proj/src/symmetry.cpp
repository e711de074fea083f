#include "heckelab/symmetry.hpp"

#include <cstdio>

namespace heckelab {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Matrix flip_matrix(const Field& F, int d) {
  Matrix t(F, d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t.at(j * d + i, i * d + j) = F.one();
  return t;
}

std::string first_nonzero(const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero())
        return "entry (" + std::to_string(r) + "," + std::to_string(c) +
               ") = " + m.at(r, c).str();
  return "";
}

// Id^(k-1) (x) m (x) Id^(rest), ambient d^n with m of size d^w.
Matrix positioned(const Field& F, const Matrix& m, int d, int n, int k,
                  int w) {
  Matrix out = Matrix::identity(F, (int)ipow(d, k - 1));
  out = out.kronecker(m);
  return out.kronecker(Matrix::identity(F, (int)ipow(d, n - k - w + 1)));
}

Matrix permuted_conjugate(const Matrix& m, const std::vector<long>& s) {
  // operator in source coordinates when s maps source index -> m's index
  Matrix out(m.field(), m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(s[r], s[c]);
  return out;
}

void require_same_field(const HeckeSymmetry& a, const HeckeSymmetry& b) {
  if (a.fld != b.fld)
    throw mismatch_error("symmetries must share the field and parameter q");
}

}  // namespace

HeckeSymmetry check_hecke_symmetry(int d, const Field& F, Matrix R,
                                   std::string label) {
  if (R.rows() != d * d || R.cols() != d * d)
    throw mismatch_error("R must be d^2 x d^2");
  if (F.q().is_zero()) throw error("Hecke symmetry needs invertible q");
  F.q().inverse();  // zero-divisor check
  Matrix id = Matrix::identity(F, d * d);
  Matrix hecke = (R + id) * (R - id.scaled(F.q()));
  if (!hecke.is_zero())
    throw validation_error("Hecke relation (R+1)(R-q) = 0 fails",
                           first_nonzero(hecke));
  Matrix r1 = R.kronecker(Matrix::identity(F, d));
  Matrix r2 = Matrix::identity(F, d).kronecker(R);
  Matrix braid = r1 * r2 * r1 - r2 * r1 * r2;
  if (!braid.is_zero())
    throw validation_error("braid relation R1 R2 R1 = R2 R1 R2 fails",
                           first_nonzero(braid));
  HeckeSymmetry S;
  S.d = d;
  S.fld = F;
  S.R = std::move(R);
  S.label = std::move(label);
  return S;
}

HeckeSymmetry builtin_symmetry(const std::string& name, const Field& F) {
  int k = 0, m = 0, n = 0;
  if (name == "one_dim") {
    Matrix R(F, 1, 1);
    R.at(0, 0) = F.q();
    return check_hecke_symmetry(1, F, std::move(R), name);
  }
  if (name == "hietarinta_counterexample") {
    if (!(F.q() * F.q() == F.from_int(-1)))
      throw error("hietarinta_counterexample needs q^2 = -1");
    // basis x(x)x, x(x)y, y(x)x, y(x)y
    long rows[4][4] = {
        {1, 0, 0, 1}, {0, 1, -1, 0}, {0, 1, 1, 0}, {-1, 0, 0, 1}};
    Scalar c = (F.q() - F.one()) / F.from_int(2);
    Matrix R(F, 4, 4);
    for (int r = 0; r < 4; ++r)
      for (int cc = 0; cc < 4; ++cc) R.at(r, cc) = c * F.from_int(rows[r][cc]);
    return check_hecke_symmetry(2, F, std::move(R), name);
  }
  if (std::sscanf(name.c_str(), "drinfeld_jimbo(%d)", &k) == 1 && k >= 1) {
    Matrix R(F, k * k, k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int col = i * k + j;
        if (i == j) {
          R.at(col, col) = F.q();
        } else if (i < j) {
          R.at(j * k + i, col) = F.one();
        } else {
          R.at(j * k + i, col) = F.q();
          R.at(col, col) = F.q() - F.one();
        }
      }
    return check_hecke_symmetry(k, F, std::move(R), name);
  }
  if (std::sscanf(name.c_str(), "super(%d,%d)", &m, &n) == 2 && m >= 0 &&
      n >= 0 && m + n >= 1) {
    if (!(F.q() == F.one())) throw error("super symmetry needs q = 1");
    int d = m + n;
    auto parity = [&](int i) { return i >= m ? 1 : 0; };
    Matrix R(F, d * d, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        R.at(j * d + i, i * d + j) =
            parity(i) && parity(j) ? -F.one() : F.one();
    return check_hecke_symmetry(d, F, std::move(R), name);
  }
  throw error("unknown builtin symmetry: " + name);
}

Matrix change_field(const Matrix& m, const Field& F) {
  if (!F.same_ring(m.field()))
    throw mismatch_error("change_field across different rings");
  Matrix out(F, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const auto& co = m.at(r, c).coeffs();
      out.at(r, c) = F.from_poly(Poly(co.begin(), co.end()));
    }
  return out;
}

SymmetryTransforms transforms(const HeckeSymmetry& S) {
  const Field& F = S.fld;
  Matrix id = Matrix::identity(F, S.d * S.d);
  SymmetryTransforms t;
  t.tilde = check_hecke_symmetry(S.d, F, id.scaled(F.q() - F.one()) - S.R,
                                 S.label + "~");
  Matrix tau = flip_matrix(F, S.d);
  t.op = check_hecke_symmetry(S.d, F, tau * S.R * tau, S.label + "_op");
  t.star = check_hecke_symmetry(S.d, F, S.R.transpose(), S.label + "*");
  Field Fq = F.with_q(F.q().inverse());
  t.inv = check_hecke_symmetry(S.d, Fq, change_field(S.R.inverse(), Fq),
                               S.label + "^-1");
  return t;
}

ModuleRep tensor_representation(const HeckeSymmetry& S, int n) {
  ModuleRep rep;
  rep.n = n;
  rep.fld = S.fld;
  rep.dim = (int)ipow(S.d, n);
  for (int i = 1; i <= n - 1; ++i)
    rep.gens.push_back(positioned(S.fld, S.R, S.d, n, i, 2));
  rep.validate();
  return rep;
}

QuadraticAlgebra sym_relations(const HeckeSymmetry& S) {
  Matrix m = S.R - Matrix::identity(S.fld, S.d * S.d).scaled(S.fld.q());
  return make_quadratic(S.d, S.fld, image(m), "S(" + S.label + ")");
}

QuadraticAlgebra ext_relations(const HeckeSymmetry& S) {
  Matrix m = S.R - Matrix::identity(S.fld, S.d * S.d).scaled(S.fld.q());
  return make_quadratic(S.d, S.fld, kernel(m), "L(" + S.label + ")");
}

std::vector<long> split_shuffle(int dp, int d, int n) {
  long D = (long)dp * d, total = ipow(D, n);
  std::vector<long> s(total);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx, ip = 0, iv = 0;
    for (int k = 0; k < n; ++k) {
      long digit = rest / ipow(D, n - 1 - k);
      rest %= ipow(D, n - 1 - k);
      ip = ip * dp + digit / d;
      iv = iv * d + digit % d;
    }
    s[idx] = ip * ipow(d, n) + iv;
  }
  return s;
}

HomAlgebras homspace_relations(const HeckeSymmetry& Sp,
                               const HeckeSymmetry& S) {
  require_same_field(Sp, S);
  const Field& F = S.fld;
  int dp = Sp.d, d = S.d, D = dp * d;
  Matrix op = Matrix::identity(F, dp * dp).kronecker(S.R) -
              Sp.R.transpose().kronecker(Matrix::identity(F, d * d));
  Matrix pm = permuted_conjugate(op, split_shuffle(dp, d, 2));
  HomAlgebras h;
  std::string tag = "(" + Sp.label + "," + S.label + ")";
  h.a = make_quadratic(D, F, image(pm), "A" + tag);
  h.e = make_quadratic(D, F, kernel(pm), "E" + tag);
  return h;
}

Matrix t_operator(const HeckeSymmetry& Sp, const HeckeSymmetry& S, int n,
                  int i) {
  require_same_field(Sp, S);
  const Field& F = S.fld;
  Matrix left = positioned(F, Sp.R.transpose().inverse(), Sp.d, n, i, 2);
  Matrix right = positioned(F, S.R, S.d, n, i, 2);
  return permuted_conjugate(left.kronecker(right), split_shuffle(Sp.d, S.d, n));
}

Matrix t_operator_conj(const HeckeSymmetry& Sp, const HeckeSymmetry& S, int n,
                       int i) {
  require_same_field(Sp, S);
  const Field& F = S.fld;
  int dp = Sp.d, d = S.d;
  long D = (long)dp * d, total = ipow(D, n);
  long dn = ipow(d, n), dpn = ipow(dp, n);
  Matrix rn = positioned(F, S.R, d, n, i, 2);
  Matrix pinv = positioned(F, Sp.R.inverse(), dp, n, i, 2);
  // pm index from the pair of multi-indices (primed, plain)
  auto pm = [&](long ipm, long ivm) {
    long idx = 0, rp = ipm, rv = ivm;
    for (int k = n - 1; k >= 0; --k) {
      long pd = rp % dp, vd = rv % d;
      idx += (pd * d + vd) * ipow(D, n - 1 - k);
      rp /= dp;
      rv /= d;
    }
    return idx;
  };
  Matrix out(F, (int)total, (int)total);
  for (long c = 0; c < total; ++c) {
    // column c is the elementary map e'_{ip} -> e_{iv}
    long rest = c, ip = 0, iv = 0;
    for (int k = 0; k < n; ++k) {
      long digit = rest / ipow(D, n - 1 - k);
      rest %= ipow(D, n - 1 - k);
      ip = ip * dp + digit / d;
      iv = iv * d + digit % d;
    }
    // conjugate: R_i . a . (R'_i)^{-1}
    for (long x = 0; x < dn; ++x) {
      const Scalar& rx = rn.at((int)x, (int)iv);
      if (rx.is_zero()) continue;
      for (long y = 0; y < dpn; ++y) {
        const Scalar& py = pinv.at((int)ip, (int)y);
        if (py.is_zero()) continue;
        out.at((int)pm(y, x), (int)c) += rx * py;
      }
    }
  }
  return out;
}

HomIdentReport hom_identification_check(const HeckeSymmetry& Sp,
                                        const HeckeSymmetry& S, int n) {
  HomIdentReport rep;
  HomAlgebras h = homspace_relations(Sp, S);
  rep.a_dim = component_dims(h.a, n)[n];
  rep.ups_dim = upsilon(h.e, n).dim();
  ModuleRep mp = tensor_representation(Sp, n);
  ModuleRep mv = tensor_representation(S, n);
  rep.hom_to_prime = hom_space(mp, mv).dim();
  rep.hom_from_prime = hom_space(mv, mp).dim();
  rep.a_ok = rep.a_dim == rep.hom_to_prime;
  rep.e_ok = rep.ups_dim == rep.hom_from_prime;
  return rep;
}

CotensorReport cotensor_dim_check(const HeckeSymmetry& Sp,
                                  const HeckeSymmetry& S,
                                  const HeckeSymmetry& Spp, int n) {
  require_same_field(Sp, S);
  require_same_field(Spp, S);
  const Field& F = S.fld;
  CotensorReport rep;
  rep.a_dim = component_dims(homspace_relations(Sp, Spp).a, n)[n];

  ModuleRep mp = tensor_representation(Sp, n);
  ModuleRep mv = tensor_representation(S, n);
  ModuleRep mpp = tensor_representation(Spp, n);
  Subspace X = hom_space(mp, mv);    // Hom(T_n V, T_n V')
  Subspace Y = hom_space(mv, mpp);   // Hom(T_n V'', T_n V)
  Subspace C = hom_space(mv, mv);    // End(T_n V)
  int x = X.dim(), y = Y.dim();
  auto as_matrix = [&](const Subspace& sp, int k, int rows, int cols) {
    Matrix m(F, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int cc = 0; cc < cols; ++cc)
        m.at(r, cc) = sp.basis().at(k, r * cols + cc);
    return m;
  };
  auto flat = [&](const Matrix& m) {
    Vec v;
    v.reserve((size_t)m.rows() * m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int cc = 0; cc < m.cols(); ++cc) v.push_back(m.at(r, cc));
    return v;
  };
  // The relation span is linear in a and satisfies R(ab) <= R(a) + R(b)
  // (split (x(ab))(x)y - x(x)((ab)y) at xa and by), so a set generating C as
  // a unital algebra spans the same relations as the full basis.
  std::vector<Matrix> gens;
  {
    Matrix id = Matrix::identity(F, mv.dim);
    RrefBuilder sp(F, mv.dim * mv.dim);
    sp.insert(flat(id));
    std::vector<Matrix> words = {id};
    for (int t = 0; t < C.dim() && sp.rank() < C.dim(); ++t) {
      Matrix a = as_matrix(C, t, mv.dim, mv.dim);
      if (!sp.insert(flat(a))) continue;
      gens.push_back(a);
      words.push_back(a);
      // close the span under left multiplication by the generators chosen
      // so far; it then contains every word in them
      for (size_t h = 0; h < words.size() && sp.rank() < C.dim(); ++h)
        for (const Matrix& g : gens) {
          Matrix p = g * words[h];
          if (sp.insert(flat(p))) words.push_back(p);
        }
    }
  }

  RrefBuilder rel(F, x * y == 0 ? 1 : x * y);
  for (const Matrix& a : gens) {
    std::vector<Vec> xa(x), ay(y);  // right/left multiplication by a
    for (int r = 0; r < x; ++r)
      xa[r] = X.coords(flat(as_matrix(X, r, mp.dim, mv.dim) * a));
    for (int s = 0; s < y; ++s)
      ay[s] = Y.coords(flat(a * as_matrix(Y, s, mv.dim, mpp.dim)));
    for (int r = 0; r < x; ++r)
      for (int s = 0; s < y; ++s) {
        // (x a) (x) y  -  x (x) (a y)
        Vec row(x * y, F.zero());
        for (int r2 = 0; r2 < x; ++r2) row[r2 * y + s] += xa[r][r2];
        for (int s2 = 0; s2 < y; ++s2) row[r * y + s2] -= ay[s][s2];
        rel.insert(std::move(row));
      }
  }
  rep.cotensor_dim = (long)x * y - rel.rank();
  rep.equal = rep.cotensor_dim == rep.a_dim;
  return rep;
}

}  // namespace heckelab
