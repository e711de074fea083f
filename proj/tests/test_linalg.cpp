#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckelab/linalg.hpp"

using namespace heckelab;

static Matrix from_ints(const Field& F, std::vector<std::vector<long>> rows) {
  Matrix m(F, (int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = F.from_int(rows[i][j]);
  return m;
}

TEST_CASE("rref basics") {
  Field F = field_rational(Rat(2));
  Subspace s = rref(Matrix::identity(F, 3));
  CHECK(s.dim() == 3);
  CHECK(rref(Matrix(F, 3, 3)).dim() == 0);
  Subspace dep = rref(from_ints(F, {{1, 2}, {2, 4}}));
  CHECK(dep.dim() == 1);
  CHECK(dep.basis().at(0, 0) == F.one());
  CHECK(dep.basis().at(0, 1) == F.from_int(2));
}

TEST_CASE("rref canonicality") {
  Field F = field_gaussian();
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m(F, 5, 7);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 7; ++j)
        m.at(i, j) = F.from_poly({Rat((long)(rng() % 7) - 3),
                                  Rat((long)(rng() % 5) - 2)});
    Subspace s1 = rref(m);
    Subspace s2 = rref(s1.basis());
    CHECK(s1 == s2);
  }
}

TEST_CASE("kernel and image, rank nullity") {
  Field F = field_rational(Rat(2));
  CHECK(kernel(Matrix::identity(F, 4)).dim() == 0);
  CHECK(image(Matrix::identity(F, 4)).dim() == 4);
  CHECK(kernel(Matrix(F, 3, 5)).dim() == 5);
  CHECK(image(Matrix(F, 3, 5)).dim() == 0);

  std::mt19937 rng(21);
  for (Field G : {field_rational(Rat(2)), field_gaussian(), field_cube_root(),
                  field_rational(Rat(-1))}) {
    for (int t = 0; t < 5; ++t) {
      int r = 1 + (int)(rng() % 20), c = 1 + (int)(rng() % 20);
      Matrix m(G, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
          if (rng() % 3 == 0) m.at(i, j) = G.from_int((long)(rng() % 9) - 4);
      CHECK(kernel(m).dim() + image(m).dim() == c);
      // kernel members are annihilated
      Subspace k = kernel(m);
      for (int i = 0; i < k.dim(); ++i) {
        Vec v = k.basis().row(i);
        for (const auto& x : m.apply(v)) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("sum, intersection, dimension formula") {
  Field F = field_rational(Rat(2));
  Subspace zero(F, 2);
  Subspace full = Subspace::full(F, 2);
  Subspace l1 = rref(from_ints(F, {{1, 0}}));
  Subspace l2 = rref(from_ints(F, {{0, 1}}));
  CHECK(subspace_sum(l1, zero) == l1);
  CHECK(subspace_intersect(l1, full) == l1);
  CHECK(subspace_sum(l1, l2) == full);
  CHECK(subspace_intersect(l1, l2).dim() == 0);

  std::mt19937 rng(99);
  for (int t = 0; t < 25; ++t) {
    Matrix a(F, 3, 6), b(F, 3, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) {
        a.at(i, j) = F.from_int((long)(rng() % 7) - 3);
        b.at(i, j) = F.from_int((long)(rng() % 7) - 3);
      }
    Subspace u = rref(a), w = rref(b);
    Subspace s = subspace_sum(u, w), in = subspace_intersect(u, w);
    CHECK(s.dim() + in.dim() == u.dim() + w.dim());
    CHECK(u.contains(in));
    CHECK(w.contains(in));
    CHECK(s.contains(u));
    CHECK(s.contains(w));
  }
}

TEST_CASE("orthogonal complement") {
  Field F = field_rational(Rat(2));
  CHECK(orthogonal_complement(Subspace(F, 4)).dim() == 4);
  CHECK(orthogonal_complement(Subspace::full(F, 4)).dim() == 0);
  Subspace u = rref(from_ints(F, {{1, 1}}));
  Subspace p = orthogonal_complement(u);
  CHECK(p.dim() == 1);
  CHECK(p.basis().at(0, 0) == F.one());
  CHECK(p.basis().at(0, 1) == -F.one());
  // double complement
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix a(F, 3, 7);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 7; ++j) a.at(i, j) = F.from_int((long)(rng() % 5) - 2);
    Subspace u2 = rref(a);
    CHECK(orthogonal_complement(orthogonal_complement(u2)) == u2);
    CHECK(u2.dim() + orthogonal_complement(u2).dim() == 7);
  }
}

TEST_CASE("modular law") {
  Field F = field_rational(Rat(2));
  std::mt19937 rng(31);
  for (int t = 0; t < 15; ++t) {
    Matrix wa(F, 2, 6), ua(F, 3, 6), extra(F, 2, 6);
    for (auto* m : {&wa, &ua, &extra})
      for (int i = 0; i < m->rows(); ++i)
        for (int j = 0; j < 6; ++j)
          m->at(i, j) = F.from_int((long)(rng() % 5) - 2);
    Subspace w = rref(wa), u = rref(ua);
    Subspace y = subspace_sum(w, rref(extra));  // W contained in Y
    Subspace lhs = subspace_sum(w, subspace_intersect(u, y));
    Subspace rhs = subspace_intersect(subspace_sum(w, u), y);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("preimage") {
  Field F = field_rational(Rat(2));
  Matrix m = from_ints(F, {{1, 0, 0}, {0, 0, 0}});
  Subspace target = rref(from_ints(F, {{1, 0}}));
  Subspace pre = preimage(m, target);
  CHECK(pre.dim() == 3);  // everything maps into span(e1)
  Subspace zerot(F, 2);
  CHECK(preimage(m, zerot).dim() == 2);
}

TEST_CASE("quotient space with pivot-complement convention") {
  Field F = field_rational(Rat(2));
  Subspace big = Subspace::full(F, 3);
  Subspace small = rref(from_ints(F, {{1, 1, 0}}));
  QuotientSpace qs(big, small);
  CHECK(qs.dim() == 2);
  // lift then project is the identity on quotient coordinates
  for (int j = 0; j < qs.dim(); ++j) {
    Vec l = qs.lift(j);
    Vec back = qs.project(l);
    for (int k = 0; k < qs.dim(); ++k)
      CHECK(back[k] == (k == j ? F.one() : F.zero()));
  }
  // members of small project to zero
  Vec sm = small.basis().row(0);
  for (const auto& x : qs.project(sm)) CHECK(x.is_zero());
}

TEST_CASE("quotient complex conventions") {
  Field F = field_rational(Rat(2));
  // n=1: no subspaces; K_1 = K_0 = M with identity differential
  QuotientComplex qc = quotient_complex(F, 3, {});
  CHECK(qc.complex.dims == std::vector<int>{3, 3});
  CHECK(qc.complex.diffs[0] == Matrix::identity(F, 3));
  auto h = homology_dims(qc.complex);
  CHECK(h == std::vector<int>{0, 0});

  // all U_i zero (n=3): K_0 = K_1 = M, K_2 = K_3 = 0... check conventions
  std::vector<Subspace> zeros(2, Subspace(F, 4));
  QuotientComplex qc2 = quotient_complex(F, 4, zeros);
  CHECK(qc2.complex.dims == std::vector<int>{4, 4, 0, 0});
  auto h2 = homology_dims(qc2.complex);
  for (size_t i = 1; i < h2.size(); ++i) CHECK(h2[i] == 0);
}

TEST_CASE("homology of zero differentials") {
  Field F = field_rational(Rat(2));
  ChainComplex c;
  c.fld = F;
  c.dims = {2, 3, 1};
  c.diffs = {Matrix(F, 2, 3), Matrix(F, 3, 1)};
  CHECK(homology_dims(c) == std::vector<int>{2, 3, 1});
}
