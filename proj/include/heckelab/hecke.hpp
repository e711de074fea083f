#ifndef HECKELAB_HECKE_HPP
#define HECKELAB_HECKE_HPP

#include <map>

#include "heckelab/linalg.hpp"
#include "heckelab/symcomb.hpp"

namespace heckelab {

// One-dimensional representation of a parabolic subalgebra H_lambda.
// Values are stored per block (per part of lambda of size >= 2); each value
// must be q or -1, which makes block-constancy structural.
class OneDimRep {
 public:
  OneDimRep() = default;
  OneDimRep(const Composition& lambda, std::vector<Scalar> block_values,
            const Field& F);
  static OneDimRep trivial(const Composition& lambda, const Field& F);
  static OneDimRep alternating(const Composition& lambda, const Field& F);

  const Composition& lambda() const { return lambda_; }
  const Field& field() const { return fld_; }
  int num_blocks() const { return (int)values_.size(); }
  const std::vector<Scalar>& block_values() const { return values_; }
  // Value on the generator T_j, tau_j in B_lambda.
  Scalar value(int gen) const;
  bool is_alternating() const;
  // chi~ with chi~(T_i) = q-1-chi(T_i): swaps q and -1 blockwise.
  OneDimRep tilde() const;
  std::string str() const;

 private:
  Composition lambda_;
  Field fld_;
  std::vector<Scalar> values_;        // one per block
  std::vector<int> block_of_gen_;     // gen index 1..n-1 -> block id or -1
};

class HeckeElt {
 public:
  HeckeElt() : n_(0) {}
  HeckeElt(int n, const Field& F) : n_(n), fld_(F) {}
  static HeckeElt unit(int n, const Field& F);
  static HeckeElt basis(int n, const Field& F, const Perm& p);
  static HeckeElt generator(int n, const Field& F, int i);  // T_i

  int n() const { return n_; }
  const Field& field() const { return fld_; }
  const std::map<Perm, Scalar>& terms() const { return terms_; }

  void add_term(const Perm& p, const Scalar& c);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Scalar& c) const;
  bool operator==(const HeckeElt& o) const;
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

 private:
  int n_;
  Field fld_;
  std::map<Perm, Scalar> terms_;
};

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b);
HeckeElt tilde_twist(const HeckeElt& a);

struct ModuleRep {
  int n = 0;
  Field fld;
  int dim = 0;
  std::vector<Matrix> gens;  // actions of T_1..T_{n-1}

  // Quadratic and braid relation checks; throws validation_error.
  void validate() const;
};

struct InducedModule : ModuleRep {
  Composition lambda;
  OneDimRep chi;
  std::vector<Perm> basis;  // D_lambda in (length, lex) order
};

InducedModule induced_module(int n, const Composition& lambda,
                             const OneDimRep& chi, const Field& F);

// Matrix by which a acts on M.
Matrix module_operator(const ModuleRep& M, const HeckeElt& a);

struct MackeyBlock {
  DoubleCosetDatum datum;
  OneDimRep chi_pi;
  std::vector<int> basis_indices;  // positions in M.basis
};

std::vector<MackeyBlock> mackey_restrict(const InducedModule& M,
                                         const Composition& mu);

long hom_dim_formula(const Composition& mu, const OneDimRep& zeta,
                     const Composition& lambda, const OneDimRep& chi,
                     const Field& F);

// Space of matrices Phi with Phi G_i(N) = G_i(M) Phi, i.e. module
// homomorphisms N -> M, inside coordinates of size dim(M)*dim(N)
// (row-major: entry (r,c) of Phi at r*dim(N)+c).
Subspace hom_space(const ModuleRep& M, const ModuleRep& N);

std::pair<HeckeElt, HeckeElt> homotopy_elements(int n, int i, const Field& F);
HeckeElt parabolic_alt_sum(const Composition& lambda, const Field& F);
HeckeElt x_parabolic(const Composition& mu, const Field& F);

std::vector<Matrix> zero_hecke_gr_action(const Composition& lambda,
                                         const Composition& mu,
                                         const OneDimRep& chi,
                                         const OneDimRep& chi_prime,
                                         const Field& F);

}  // namespace heckelab

#endif
