#ifndef HECKELAB_QUADRATIC_HPP
#define HECKELAB_QUADRATIC_HPP

#include <string>

#include "heckelab/linalg.hpp"

namespace heckelab {

// Graded algebra T(V)/(U) for a relation subspace U of V tensor V.
struct QuadraticAlgebra {
  int d = 0;          // dim V
  Field fld;
  Subspace relations;  // ambient d^2
  std::string label;
};

QuadraticAlgebra make_quadratic(int d, const Field& F, Subspace relations,
                                std::string label = "");

// V^{(i-1)} (x) U (x) V^{(n-i-1)} inside ambient d^n, 1 <= i <= n-1.
Subspace shifted_relations(const QuadraticAlgebra& Q, int n, int i);

// Degree-n part I_n of the ideal: sum of the shifted relation spaces.
Subspace ideal_component(const QuadraticAlgebra& Q, int n);

// Coordinates on A_n = T_n / I_n via the pivot-complement section.
QuotientSpace component_space(const QuadraticAlgebra& Q, int n);

// dim A_0 .. dim A_N.
std::vector<long> component_dims(const QuadraticAlgebra& Q, int N);

// Intersection of the shifted relation spaces (degree-n part of the dual's
// coalgebra); n = 0 gives the line k, n = 1 gives V.
Subspace upsilon(const QuadraticAlgebra& Q, int n);

struct KoszulReport {
  int N = 0;
  // homology[n] for 2 <= n <= N: homology dims of the degree-n complex
  // (index 0 .. n); entries for n < 2 are empty.
  std::vector<std::vector<int>> homology;
  bool exact = false;  // all positive-degree homology vanishes through N
  int first_failure = -1;  // smallest n with nonzero positive homology
};

KoszulReport koszul_exactness(const QuadraticAlgebra& Q, int N);

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& Q);

struct DualityReport {
  bool holds = false;
  int first_failure = -1;  // smallest degree where the convolution is off
};

// Checks sum_i (-1)^i B_i A_{n-i} = [n == 0] for 0 <= n <= N.
DualityReport hilbert_duality_check(const std::vector<long>& a_dims,
                                    const std::vector<long>& b_dims, int N);

// L_k = {a in T_k : a T_{n-k} lies in I_n}, for k = 0 .. n-1.
std::vector<Subspace> left_annihilator_spaces(const QuadraticAlgebra& Q, int n);

struct FrobeniusReport {
  bool hypothesis_ok = false;  // dim A_n = 1 and A_{n+1} = 0
  std::string message;
  std::vector<long> dims;         // dim A_0 .. A_n
  std::vector<int> pairing_ranks;  // rank of A_k x A_{n-k} -> A_n
  bool frobenius = false;
};

FrobeniusReport frobenius_check(const QuadraticAlgebra& Q, int n);

}  // namespace heckelab

#endif
