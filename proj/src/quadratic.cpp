#include "heckelab/quadratic.hpp"

namespace heckelab {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Rows e_a (x) u (x) e_b for one relation-basis row u, streamed into sink.
template <typename Sink>
void shifted_rows(const QuadraticAlgebra& Q, int n, int i, Sink&& sink) {
  const Field& F = Q.fld;
  long d = Q.d;
  long da = ipow(d, i - 1), db = ipow(d, n - i - 1);
  long amb = ipow(d, n);
  const Matrix& U = Q.relations.basis();
  for (int r = 0; r < U.rows(); ++r) {
    for (long a = 0; a < da; ++a)
      for (long b = 0; b < db; ++b) {
        Vec row(amb, F.zero());
        for (int k = 0; k < d * d; ++k) {
          const Scalar& c = U.at(r, k);
          if (c.is_zero()) continue;
          row[(a * d * d + k) * db + b] = c;
        }
        if (!sink(std::move(row))) return;
      }
  }
}

}  // namespace

QuadraticAlgebra make_quadratic(int d, const Field& F, Subspace relations,
                                std::string label) {
  if (relations.ambient_dim() != d * d)
    throw mismatch_error("relation subspace must live in dim d^2");
  QuadraticAlgebra Q;
  Q.d = d;
  Q.fld = F;
  Q.relations = std::move(relations);
  Q.label = std::move(label);
  return Q;
}

Subspace shifted_relations(const QuadraticAlgebra& Q, int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw error("shifted_relations: index out of range");
  RrefBuilder b(Q.fld, ipow(Q.d, n));
  shifted_rows(Q, n, i, [&](Vec row) {
    b.insert(std::move(row));
    return true;
  });
  b.finish();
  return Subspace::from_builder(b);
}

Subspace ideal_component(const QuadraticAlgebra& Q, int n) {
  long amb = ipow(Q.d, n);
  if (n < 2) return Subspace(Q.fld, (int)amb);
  RrefBuilder b(Q.fld, (int)amb);
  for (int i = 1; i <= n - 1 && b.rank() < amb; ++i)
    shifted_rows(Q, n, i, [&](Vec row) {
      b.insert(std::move(row));
      return b.rank() < amb;
    });
  b.finish();
  return Subspace::from_builder(b);
}

QuotientSpace component_space(const QuadraticAlgebra& Q, int n) {
  long amb = ipow(Q.d, n);
  return QuotientSpace(Subspace::full(Q.fld, (int)amb), ideal_component(Q, n));
}

std::vector<long> component_dims(const QuadraticAlgebra& Q, int N) {
  std::vector<long> dims;
  for (int n = 0; n <= N; ++n)
    dims.push_back(ipow(Q.d, n) - ideal_component(Q, n).dim());
  return dims;
}

Subspace upsilon(const QuadraticAlgebra& Q, int n) {
  long amb = ipow(Q.d, n);
  if (n < 2) return Subspace::full(Q.fld, (int)amb);
  // intersection of the shifted spaces = complement of the sum of their
  // complements, and complements commute with the Kronecker positioning
  return orthogonal_complement(ideal_component(quadratic_dual(Q), n));
}

KoszulReport koszul_exactness(const QuadraticAlgebra& Q, int N) {
  if (N < 2) throw error("koszul_exactness: need N >= 2");
  KoszulReport rep;
  rep.N = N;
  rep.exact = true;
  rep.homology.resize(N + 1);
  for (int n = 2; n <= N; ++n) {
    std::vector<Subspace> subs;
    for (int i = 1; i <= n - 1; ++i) subs.push_back(shifted_relations(Q, n, i));
    QuotientComplex qc = quotient_complex(Q.fld, (int)ipow(Q.d, n), subs);
    rep.homology[n] = homology_dims(qc.complex);
    for (size_t i = 1; i < rep.homology[n].size(); ++i)
      if (rep.homology[n][i] != 0 && rep.exact) {
        rep.exact = false;
        rep.first_failure = n;
      }
  }
  return rep;
}

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& Q) {
  return make_quadratic(Q.d, Q.fld, orthogonal_complement(Q.relations),
                        Q.label.empty() ? "" : Q.label + "!");
}

DualityReport hilbert_duality_check(const std::vector<long>& a_dims,
                                    const std::vector<long>& b_dims, int N) {
  if ((int)a_dims.size() < N + 1 || (int)b_dims.size() < N + 1)
    throw error("hilbert_duality_check: need dims through degree N");
  DualityReport rep;
  rep.holds = true;
  for (int n = 0; n <= N; ++n) {
    long conv = 0;
    for (int i = 0; i <= n; ++i)
      conv += (i % 2 == 0 ? 1 : -1) * b_dims[i] * a_dims[n - i];
    if (conv != (n == 0 ? 1 : 0)) {
      rep.holds = false;
      rep.first_failure = n;
      return rep;
    }
  }
  return rep;
}

std::vector<Subspace> left_annihilator_spaces(const QuadraticAlgebra& Q,
                                              int n) {
  if (n < 1) throw error("left_annihilator_spaces: need n >= 1");
  const Field& F = Q.fld;
  QuotientSpace comp = component_space(Q, n);
  int top = comp.dim();
  std::vector<Subspace> out;
  for (int k = 0; k < n; ++k) {
    long dk = ipow(Q.d, k), dnk = ipow(Q.d, n - k);
    Matrix m(F, (int)(dnk * top), (int)dk);
    for (long j = 0; j < dk; ++j) {
      for (long x = 0; x < dnk; ++x) {
        Vec v = zero_vec(F, (int)(dk * dnk));
        v[j * dnk + x] = F.one();
        Vec coords = comp.project(v);
        for (int t = 0; t < top; ++t) m.at((int)(x * top + t), (int)j) = coords[t];
      }
    }
    out.push_back(kernel(m));
  }
  return out;
}

FrobeniusReport frobenius_check(const QuadraticAlgebra& Q, int n) {
  FrobeniusReport rep;
  std::vector<QuotientSpace> comps;
  for (int k = 0; k <= n; ++k) comps.push_back(component_space(Q, k));
  for (int k = 0; k <= n; ++k) rep.dims.push_back(comps[k].dim());
  if (comps[n].dim() != 1) {
    rep.message = "top-degree hypothesis fails: dim A_n = " +
                  std::to_string(comps[n].dim());
    return rep;
  }
  long above = ipow(Q.d, n + 1) - ideal_component(Q, n + 1).dim();
  if (above != 0) {
    rep.message = "top-degree hypothesis fails: dim A_{n+1} = " +
                  std::to_string(above);
    return rep;
  }
  rep.hypothesis_ok = true;
  rep.frobenius = true;
  const Field& F = Q.fld;
  for (int k = 0; k <= n; ++k) {
    int rk = comps[k].dim(), rn = comps[n - k].dim();
    Matrix pairing(F, rk, rn);
    for (int a = 0; a < rk; ++a)
      for (int b = 0; b < rn; ++b) {
        Vec prod = kron_vec(comps[k].lift(a), comps[n - k].lift(b));
        pairing.at(a, b) = comps[n].project(prod)[0];
      }
    int rank = rref(pairing).dim();
    rep.pairing_ranks.push_back(rank);
    if (rk != rn || rank != std::min(rk, rn)) rep.frobenius = false;
  }
  if (!rep.frobenius && rep.message.empty())
    rep.message = "a pairing is degenerate or dims are not palindromic";
  return rep;
}

}  // namespace heckelab
