#include "heckelab/linalg.hpp"

#include <algorithm>

namespace heckelab {

Vec zero_vec(const Field& F, int n) { return Vec(n, F.zero()); }

Vec unit_vec(const Field& F, int n, int i) {
  Vec v(n, F.zero());
  v[i] = F.one();
  return v;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

Matrix::Matrix(const Field& F, int rows, int cols)
    : fld_(F), nr_(rows), nc_(cols), e_((size_t)rows * cols, F.zero()) {}

Matrix Matrix::identity(const Field& F, int n) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (nc_ != o.nr_) throw mismatch_error("matrix product shape mismatch");
  Matrix r(fld_, nr_, o.nc_);
  for (int i = 0; i < nr_; ++i)
    for (int k = 0; k < nc_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.nc_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw mismatch_error("matrix shape");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw mismatch_error("matrix shape");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(fld_, nc_, nr_);
  for (int i = 0; i < nr_; ++i)
    for (int j = 0; j < nc_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kronecker(const Matrix& o) const {
  Matrix r(fld_, nr_ * o.nr_, nc_ * o.nc_);
  for (int i = 0; i < nr_; ++i)
    for (int j = 0; j < nc_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (int p = 0; p < o.nr_; ++p)
        for (int q = 0; q < o.nc_; ++q) {
          const Scalar& b = o.at(p, q);
          if (b.is_zero()) continue;
          r.at(i * o.nr_ + p, j * o.nc_ + q) = a * b;
        }
    }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if ((int)v.size() != nc_) throw mismatch_error("matrix apply shape");
  Vec r(nr_, fld_.zero());
  for (int j = 0; j < nc_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < nr_; ++i) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      r[i] += a * v[j];
    }
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return nr_ == o.nr_ && nc_ == o.nc_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::row(int r) const {
  Vec v;
  v.reserve(nc_);
  for (int j = 0; j < nc_; ++j) v.push_back(at(r, j));
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  for (int j = 0; j < nc_; ++j) at(r, j) = v[j];
}

Matrix Matrix::inverse() const {
  if (nr_ != nc_) throw error("inverse of non-square matrix");
  int n = nr_;
  Matrix a = *this;
  Matrix inv = Matrix::identity(fld_, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw error("matrix not invertible");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Scalar d = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Scalar c = a.at(r, col);
      if (c.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j).sub_mul(c, a.at(col, j));
        inv.at(r, j).sub_mul(c, inv.at(col, j));
      }
    }
  }
  return inv;
}

static void axpy_sub(Vec& r, const Scalar& c, const Vec& s, int from) {
  // r -= c*s, skipping zeros of s
  for (size_t k = from; k < s.size(); ++k)
    if (!s[k].is_zero()) r[k].sub_mul(c, s[k]);
}

RrefBuilder::RrefBuilder(const Field& F, int ambient)
    : fld_(F), ambient_(ambient) {}

void RrefBuilder::reduce(Vec& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (!v[p].is_zero()) {
      Scalar c = v[p];
      axpy_sub(v, c, rows_[i], p);
    }
  }
}

bool RrefBuilder::insert(Vec row) {
  if ((int)row.size() != ambient_) throw mismatch_error("row length");
  reduce(row);
  int p = -1;
  for (int k = 0; k < ambient_; ++k)
    if (!row[k].is_zero()) {
      p = k;
      break;
    }
  if (p < 0) return false;
  Scalar inv = row[p].inverse();
  for (int k = p; k < ambient_; ++k)
    if (!row[k].is_zero()) row[k] *= inv;
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

void RrefBuilder::finish() {
  for (size_t j = 1; j < rows_.size(); ++j) {
    int p = pivots_[j];
    for (size_t i = 0; i < j; ++i) {
      if (!rows_[i][p].is_zero()) {
        Scalar c = rows_[i][p];
        axpy_sub(rows_[i], c, rows_[j], p);
      }
    }
  }
}

Subspace::Subspace(const Field& F, int ambient)
    : fld_(F), ambient_(ambient), basis_(F, 0, ambient) {}

Subspace Subspace::from_rows(const Field& F, int ambient,
                             const std::vector<Vec>& rows) {
  RrefBuilder b(F, ambient);
  for (const auto& r : rows) b.insert(r);
  b.finish();
  return from_builder(b);
}

Subspace Subspace::from_builder(const RrefBuilder& b) {
  const Field& F = b.field();
  Subspace s;
  s.fld_ = F;
  s.ambient_ = b.ambient();
  s.basis_ = Matrix(F, b.rank(), b.ambient());
  for (int i = 0; i < b.rank(); ++i) s.basis_.set_row(i, b.rows()[i]);
  s.pivots_ = b.pivots();
  return s;
}

Subspace Subspace::full(const Field& F, int ambient) {
  Subspace s(F, ambient);
  s.basis_ = Matrix::identity(F, ambient);
  s.pivots_.resize(ambient);
  for (int i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  for (int i = 0; i < dim(); ++i) {
    int p = pivots_[i];
    if (!w[p].is_zero()) {
      Scalar c = w[p];
      for (int k = p; k < ambient_; ++k)
        if (!basis_.at(i, k).is_zero()) w[k].sub_mul(c, basis_.at(i, k));
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(dim(), fld_.zero());
  Vec w = v;
  for (int i = 0; i < dim(); ++i) {
    int p = pivots_[i];
    c[i] = w[p];
    if (!w[p].is_zero()) {
      Scalar cc = w[p];
      for (int k = p; k < ambient_; ++k)
        if (!basis_.at(i, k).is_zero()) w[k].sub_mul(cc, basis_.at(i, k));
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) throw error("vector not in subspace");
  return c;
}

Subspace rref(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace::from_rows(m.field(), m.cols(), rows);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw mismatch_error("ambient mismatch in subspace_sum");
  RrefBuilder b(u.field(), u.ambient_dim());
  for (int i = 0; i < u.dim(); ++i) b.insert(u.basis().row(i));
  for (int i = 0; i < w.dim(); ++i) b.insert(w.basis().row(i));
  b.finish();
  std::vector<Vec> rows = b.rows();
  return Subspace::from_rows(u.field(), u.ambient_dim(), rows);
}

Subspace kernel(const Matrix& m) { return kernel_from_rowspace(rref(m)); }

Subspace kernel_from_rowspace(const Subspace& rowsp) {
  const Field& F = rowsp.field();
  int nc = rowsp.ambient_dim();
  std::vector<char> is_piv(nc, 0);
  for (int p : rowsp.pivots()) is_piv[p] = 1;
  std::vector<Vec> gens;
  for (int f = 0; f < nc; ++f) {
    if (is_piv[f]) continue;
    Vec v(nc, F.zero());
    v[f] = F.one();
    for (int i = 0; i < rowsp.dim(); ++i)
      v[rowsp.pivots()[i]] = -rowsp.basis().at(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::from_rows(F, nc, gens);
}

Subspace image(const Matrix& m) { return rref(m.transpose()); }

Subspace orthogonal_complement(const Subspace& u) {
  return kernel(u.basis());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw mismatch_error("ambient mismatch in subspace_intersect");
  return orthogonal_complement(
      subspace_sum(orthogonal_complement(u), orthogonal_complement(w)));
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim())
    throw mismatch_error("preimage shape mismatch");
  Subspace perp = orthogonal_complement(target);
  Matrix comp = perp.basis() * m;
  return kernel(comp);
}

QuotientSpace::QuotientSpace(Subspace big, const Subspace& small)
    : big_(std::move(big)) {
  const Field& F = big_.field();
  std::vector<Vec> rows;
  for (int i = 0; i < small.dim(); ++i)
    rows.push_back(big_.coords(small.basis().row(i)));
  small_coords_ = Subspace::from_rows(F, big_.dim(), rows);
  std::vector<char> is_piv(big_.dim(), 0);
  for (int p : small_coords_.pivots()) is_piv[p] = 1;
  for (int k = 0; k < big_.dim(); ++k)
    if (!is_piv[k]) nonpivots_.push_back(k);
}

Vec QuotientSpace::project(const Vec& ambient_vec) const {
  Vec c = big_.coords(ambient_vec);
  const Subspace& s = small_coords_;
  for (int i = 0; i < s.dim(); ++i) {
    int p = s.pivots()[i];
    if (!c[p].is_zero()) {
      Scalar cc = c[p];
      for (int k = p; k < (int)c.size(); ++k)
        if (!s.basis().at(i, k).is_zero()) c[k].sub_mul(cc, s.basis().at(i, k));
    }
  }
  Vec out;
  out.reserve(nonpivots_.size());
  for (int k : nonpivots_) out.push_back(c[k]);
  return out;
}

Vec QuotientSpace::lift(int j) const {
  return big_.basis().row(nonpivots_[j]);
}

QuotientComplex quotient_complex(const Field& F, int ambient_dim,
                                 const std::vector<Subspace>& subspaces) {
  int n = (int)subspaces.size() + 1;
  for (const auto& s : subspaces)
    if (s.ambient_dim() != ambient_dim)
      throw mismatch_error("quotient_complex ambient mismatch");

  std::vector<Subspace> up(n + 1), sig(n + 1);
  up[0] = Subspace::full(F, ambient_dim);
  if (n >= 1) up[1] = up[0];
  for (int i = 2; i <= n; ++i)
    up[i] = subspace_intersect(up[i - 1], subspaces[i - 2]);
  sig[n] = Subspace(F, ambient_dim);
  if (n >= 1) sig[n - 1] = sig[n];
  for (int i = n - 2; i >= 0; --i)
    sig[i] = subspace_sum(sig[i + 1], subspaces[i]);

  QuotientComplex qc;
  qc.complex.fld = F;
  qc.levels.resize(n + 1);
  qc.complex.dims.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    qc.levels[i] = QuotientSpace(up[i], subspace_intersect(up[i], sig[i]));
    qc.complex.dims[i] = qc.levels[i].dim();
  }
  for (int i = 1; i <= n; ++i) {
    Matrix d(F, qc.complex.dims[i - 1], qc.complex.dims[i]);
    for (int j = 0; j < qc.complex.dims[i]; ++j) {
      Vec col = qc.levels[i - 1].project(qc.levels[i].lift(j));
      for (int r = 0; r < d.rows(); ++r) d.at(r, j) = col[r];
    }
    qc.complex.diffs.push_back(std::move(d));
  }
  for (int i = 2; i <= n; ++i) {
    Matrix prod = qc.complex.diffs[i - 2] * qc.complex.diffs[i - 1];
    if (!prod.is_zero()) throw error("quotient_complex: d o d != 0");
  }
  return qc;
}

std::vector<int> homology_dims(const ChainComplex& c) {
  int n = (int)c.dims.size() - 1;
  std::vector<int> h(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    int z = (i == 0) ? c.dims[0] : kernel(c.diffs[i - 1]).dim();
    int b = (i < n) ? image(c.diffs[i]).dim() : 0;
    h[i] = z - b;
  }
  return h;
}

}  // namespace heckelab
