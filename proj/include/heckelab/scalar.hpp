#ifndef HECKELAB_SCALAR_HPP
#define HECKELAB_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace heckelab {

using Rat = mpq_class;
// Polynomials over Q are coefficient vectors, constant term first,
// with no trailing zero coefficients (the zero polynomial is empty).
using Poly = std::vector<Rat>;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};
struct invalid_field_error : error {
  using error::error;
};
struct zero_divisor_error : error {
  std::string factor;  // nontrivial factor of min_poly found by the gcd
  zero_divisor_error(const std::string& msg, std::string fac)
      : error(msg), factor(std::move(fac)) {}
};
struct mismatch_error : error {
  using error::error;
};
struct invalid_representation_error : error {
  using error::error;
};
struct validation_error : error {
  std::string witness;
  validation_error(const std::string& msg, std::string wit = {})
      : error(msg), witness(std::move(wit)) {}
};
struct parse_error : error {
  using error::error;
};

Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& r);
Poly parse_poly(const std::string& s);  // comma-separated rationals
std::string format_poly(const Poly& p);

void poly_trim(Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Remainder of a modulo b (b nonzero).
Poly poly_mod(const Poly& a, const Poly& b);
// g = gcd(a,b) monic, with s*a + t*b = g.
void poly_ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);

struct FieldData {
  Poly min_poly;             // monic, degree >= 1
  std::vector<Rat> q_elt;    // length deg, reduced representative of q
  int deg;
};

class Scalar;

// Q[x]/(m(x)) together with a chosen Hecke parameter q.  Field values are
// interned: the same (min_poly, q) pair always yields the same handle, so
// field identity is pointer identity and Scalars may hold plain pointers.
class Field {
 public:
  Field() : d_(nullptr) {}

  static Field make(const Poly& min_poly, const Poly& q_poly);

  int degree() const { return d_->deg; }
  const Poly& min_poly() const { return d_->min_poly; }
  bool valid() const { return d_ != nullptr; }

  Scalar zero() const;
  Scalar one() const;
  Scalar q() const;
  Scalar from_rational(const Rat& r) const;
  Scalar from_int(long v) const;
  Scalar from_poly(const Poly& p) const;  // reduced mod min_poly
  Scalar generator() const;               // residue of x

  // Same quotient ring, different Hecke parameter (e.g. q^{-1}).
  Field with_q(const Scalar& new_q) const;

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }
  // True when both handles denote the same quotient ring Q[x]/(m),
  // regardless of the chosen parameter q.
  bool same_ring(const Field& o) const;

  const FieldData* data() const { return d_; }

 private:
  explicit Field(const FieldData* d) : d_(d) {}
  const FieldData* d_;
  friend class Scalar;
};

class Scalar {
 public:
  Scalar() : f_(nullptr) {}

  bool is_zero() const;
  bool is_one() const;
  Field field() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // this -= a*b, fused to avoid temporaries in elimination loops
  void sub_mul(const Scalar& a, const Scalar& b);

  Scalar inverse() const;  // zero_divisor_error when not invertible
  Scalar pow(long e) const;

  const std::vector<Rat>& coeffs() const { return c_; }
  std::string str() const;

 private:
  Scalar(const FieldData* f, std::vector<Rat> c) : f_(f), c_(std::move(c)) {}
  const FieldData* f_;
  std::vector<Rat> c_;  // length deg, reduced
  friend class Field;
};

Scalar scalar_arith(const Scalar& a, const Scalar& b, const std::string& op);
Scalar q_integer(const Field& F, long n);

// Convenience constructors for the fields used throughout.
Field field_rational(const Rat& q);        // Q with the given q, min_poly x - q... see impl
Field field_gaussian();                    // Q[i] with q = i
Field field_cube_root();                   // Q[w], w primitive cube root, q = w

}  // namespace heckelab

#endif
