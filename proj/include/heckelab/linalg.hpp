#ifndef HECKELAB_LINALG_HPP
#define HECKELAB_LINALG_HPP

#include <vector>

#include "heckelab/scalar.hpp"

namespace heckelab {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() : nr_(0), nc_(0) {}
  Matrix(const Field& F, int rows, int cols);
  static Matrix identity(const Field& F, int n);

  int rows() const { return nr_; }
  int cols() const { return nc_; }
  const Field& field() const { return fld_; }

  Scalar& at(int r, int c) { return e_[(size_t)r * nc_ + c]; }
  const Scalar& at(int r, int c) const { return e_[(size_t)r * nc_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix kronecker(const Matrix& o) const;
  Vec apply(const Vec& v) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Vec row(int r) const;
  void set_row(int r, const Vec& v);

  Matrix inverse() const;  // error when singular

 private:
  Field fld_;
  int nr_, nc_;
  std::vector<Scalar> e_;
};

// Incremental reduced-row-echelon accumulator.  Rows are inserted one at a
// time and reduced forward; finish() back-eliminates and yields the canonical
// RREF.  All inner loops skip zero entries, which is what makes the very
// sparse constraint systems in this project tractable.
class RrefBuilder {
 public:
  RrefBuilder(const Field& F, int ambient);
  bool insert(Vec row);  // true when the row enlarged the span
  int rank() const { return (int)rows_.size(); }
  int ambient() const { return ambient_; }
  const Field& field() const { return fld_; }
  // Reduce v against the current rows (no insertion); v is modified in place.
  void reduce(Vec& v) const;
  void finish();  // back-eliminate; builder stays usable read-only
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  Field fld_;
  int ambient_;
  std::vector<Vec> rows_;    // sorted by pivot column
  std::vector<int> pivots_;
};

class Subspace {
 public:
  Subspace() : ambient_(0) {}
  Subspace(const Field& F, int ambient);  // zero subspace
  static Subspace from_rows(const Field& F, int ambient,
                            const std::vector<Vec>& rows);
  // Adopts the rows of a builder on which finish() has been called.
  static Subspace from_builder(const RrefBuilder& b);
  static Subspace full(const Field& F, int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const Field& field() const { return fld_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Coordinates of v in the RREF basis; throws when v is not a member.
  Vec coords(const Vec& v) const;

 private:
  Field fld_;
  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
  friend Subspace rref(const Matrix& m);
  friend class RrefBuilder;
};

Subspace rref(const Matrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
Subspace orthogonal_complement(const Subspace& u);
// Right kernel {v : m v = 0}; ambient = cols.
Subspace kernel(const Matrix& m);
// Same, given the row space of m in RREF already.
Subspace kernel_from_rowspace(const Subspace& rowspace);
// Column space; ambient = rows.
Subspace image(const Matrix& m);
// {v : m v in target}; ambient = cols.
Subspace preimage(const Matrix& m, const Subspace& target);

// Quotient big/small with small a subspace of big, both in a common ambient
// space.  Coordinates on the quotient are the non-pivot coordinates (in the
// RREF basis of big) after reduction modulo small -- the fixed section used
// for every induced map in the project.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(Subspace big, const Subspace& small);

  int dim() const { return (int)nonpivots_.size(); }
  const Subspace& big() const { return big_; }
  // Quotient coordinates of an ambient vector (must lie in big).
  Vec project(const Vec& ambient_vec) const;
  // Ambient representative of the j-th quotient basis vector.
  Vec lift(int j) const;

 private:
  Subspace big_;
  Subspace small_coords_;        // small in big-coordinates, RREF
  std::vector<int> nonpivots_;   // complement of small_coords_ pivots
};

struct ChainComplex {
  Field fld;
  std::vector<int> dims;      // dims[i] = dim K_i, i = 0..n
  std::vector<Matrix> diffs;  // diffs[i-1] = d_i : K_i -> K_{i-1}, i = 1..n
};

// The complex K_i = Y_i/(Y_i n S_i) with Y_i = intersection of U_j, j < i,
// S_i = sum of U_j, j > i, and the boundary conventions Y_0 = Y_1 = ambient,
// S_{n-1} = S_n = 0 for a sequence of n-1 subspaces.
struct QuotientComplex {
  ChainComplex complex;
  std::vector<QuotientSpace> levels;  // levels[i] realizes K_i
};

QuotientComplex quotient_complex(const Field& F, int ambient_dim,
                                 const std::vector<Subspace>& subspaces);
std::vector<int> homology_dims(const ChainComplex& c);

Vec zero_vec(const Field& F, int n);
Vec unit_vec(const Field& F, int n, int i);
Vec kron_vec(const Vec& a, const Vec& b);

}  // namespace heckelab

#endif
