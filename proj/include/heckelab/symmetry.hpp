#ifndef HECKELAB_SYMMETRY_HPP
#define HECKELAB_SYMMETRY_HPP

#include "heckelab/hecke.hpp"
#include "heckelab/quadratic.hpp"

namespace heckelab {

// An invertible solution R of the braid equation on V (x) V with
// (R + Id)(R - q Id) = 0; coordinates in the lexicographic basis e_i (x) e_j,
// i major.
struct HeckeSymmetry {
  int d = 0;
  Field fld;
  Matrix R;  // d^2 x d^2
  std::string label;
};

// Validates both defining relations; throws validation_error naming the
// failing relation and a witness coordinate.
HeckeSymmetry check_hecke_symmetry(int d, const Field& F, Matrix R,
                                   std::string label = "");

// name: "one_dim", "hietarinta_counterexample", "drinfeld_jimbo(k)",
// "super(m,n)".
HeckeSymmetry builtin_symmetry(const std::string& name, const Field& F);

struct SymmetryTransforms {
  HeckeSymmetry tilde;  // (q-1) Id - R
  HeckeSymmetry op;     // flip R flip
  HeckeSymmetry star;   // transpose
  HeckeSymmetry inv;    // R^{-1}, parameter q^{-1}
};

SymmetryTransforms transforms(const HeckeSymmetry& S);

// Rebuild a matrix over another parameter choice of the same coefficient ring.
Matrix change_field(const Matrix& m, const Field& F);

// H_n(q)-module on d^n coordinates with G_i = Id^(i-1) (x) R (x) Id^(n-i-1).
ModuleRep tensor_representation(const HeckeSymmetry& S, int n);

QuadraticAlgebra sym_relations(const HeckeSymmetry& S);  // S(V,R): Im(R - q)
QuadraticAlgebra ext_relations(const HeckeSymmetry& S);  // L(V,R): Ker(R - q)

// Position-major index of T_n(V' (x) V) -> split index of T_n(V') (x) T_n(V).
std::vector<long> split_shuffle(int dp, int d, int n);

struct HomAlgebras {
  QuadraticAlgebra a;  // A(R',R): Im of the mixed operator
  QuadraticAlgebra e;  // E(R',R): Ker of the mixed operator
};

// Relations of A(R',R) and E(R',R) on d'*d generators (position-major
// coordinates), via Im/Ker of Id (x) R - R'^T (x) Id under the fixed shuffle.
HomAlgebras homspace_relations(const HeckeSymmetry& Sp, const HeckeSymmetry& S);

// Action of the i-th crossed operator on T_n(V'* (x) V), position-major
// coordinates; built from ((R'^T)^{-1})_i (x) R_i through the shuffle.
Matrix t_operator(const HeckeSymmetry& Sp, const HeckeSymmetry& S, int n,
                  int i);
// Same operator from the conjugation description a -> R_i a (R'_i)^{-1};
// independent construction kept as a cross-check.
Matrix t_operator_conj(const HeckeSymmetry& Sp, const HeckeSymmetry& S, int n,
                       int i);

struct HomIdentReport {
  long a_dim = 0, hom_to_prime = 0;   // dim A_n vs dim Hom(T_n V, T_n V')
  long ups_dim = 0, hom_from_prime = 0;  // dim Ups^(n)(E) vs Hom(T_n V', T_n V)
  bool a_ok = false, e_ok = false;
};

HomIdentReport hom_identification_check(const HeckeSymmetry& Sp,
                                        const HeckeSymmetry& S, int n);

struct CotensorReport {
  long a_dim = 0;       // dim A_n(R', R'')
  long cotensor_dim = 0;  // dim Hom (x)_{End} Hom
  bool equal = false;
};

CotensorReport cotensor_dim_check(const HeckeSymmetry& Sp,
                                  const HeckeSymmetry& S,
                                  const HeckeSymmetry& Spp, int n);

}  // namespace heckelab

#endif
