#ifndef HECKELAB_SYMCOMB_HPP
#define HECKELAB_SYMCOMB_HPP

#include <set>
#include <string>
#include <vector>

#include "heckelab/scalar.hpp"

namespace heckelab {

// Permutation in one-line notation; im[k] = sigma(k+1), values 1..n.
// Products compose left-to-right through apply(): (a*b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm transposition(int n, int i);  // tau_i = (i, i+1)

  int n() const { return (int)im_.size(); }
  int apply(int i) const { return im_[i - 1]; }
  const std::vector<int>& images() const { return im_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool operator==(const Perm& o) const { return im_ == o.im_; }
  bool operator!=(const Perm& o) const { return im_ != o.im_; }
  bool operator<(const Perm& o) const { return im_ < o.im_; }

  bool is_identity() const;
  std::string str() const;  // one-line, space separated

 private:
  std::vector<int> im_;
};

struct Composition {
  std::vector<int> parts;
  int n = 0;

  Composition() = default;
  Composition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }
  void validate();
  std::string str() const;  // "2,1,1"
  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
};

struct DeodharSplit {
  std::vector<Perm> a_set, tau_a_set, b_set;
  // parallel to b_set: the index j with tau_i * sigma = sigma * tau_j
  std::vector<int> b_j;
};

struct DoubleCosetDatum {
  Perm rep;
  std::vector<int> nu_generators;  // indices i with tau_i in B_mu, pi^-1 tau_i pi in B_lambda
  Composition nu;
};

int perm_length(const Perm& w);
std::vector<int> reduced_word(const Perm& w);

std::vector<int> young_generators(const Composition& lambda);
// Members of the Young subgroup S_lambda, in (length, lex) order.
std::vector<Perm> young_subgroup(const Composition& lambda);
// Composition whose generator set is exactly the given subset of {1..n-1}.
Composition composition_from_generators(int n, const std::set<int>& gens);

std::vector<Perm> dist_reps(int n, const Composition& lambda);
std::vector<DoubleCosetDatum> double_dist_reps(const Composition& mu,
                                               const Composition& lambda);
DeodharSplit deodhar_partition(const Composition& lambda, int i);
void longest_elements(int n, const Composition& lambda, Perm& w_n, Perm& w_lam,
                      Perm& d_lam);
std::vector<Perm> trivial_intersection_reps(const Composition& mu,
                                            const Composition& lambda);

// The minimal-length representative of the double coset S_mu w S_lambda.
Perm double_coset_min(const Composition& mu, const Composition& lambda,
                      const Perm& w);
// Minimal-length representative of w S_lambda.
Perm left_coset_min(const Composition& lambda, const Perm& w);

std::vector<Perm> all_perms(int n);  // (length, lex) order
std::vector<Composition> all_compositions(int n);

// Distinguished representatives D(S_nu / S_lambda) inside the Young subgroup
// S_nu, for B_lambda a subset of B_nu; (length, lex) order.
std::vector<Perm> dist_reps_in(const Composition& nu, const Composition& lambda);

}  // namespace heckelab

#endif
