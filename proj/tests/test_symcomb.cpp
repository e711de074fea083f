#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "heckelab/symcomb.hpp"

using namespace heckelab;

static long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST_CASE("perm basics and length") {
  CHECK(perm_length(Perm::identity(4)) == 0);
  CHECK(perm_length(Perm({3, 2, 1})) == 3);
  CHECK(perm_length(Perm({2, 1, 4, 3})) == 2);
  CHECK_THROWS_AS(Perm({1, 1, 2}), heckelab::error);

  Perm a({2, 3, 1});
  CHECK(a * a.inverse() == Perm::identity(3));
  // composition convention: (a*b)(i) = a(b(i))
  Perm t1 = Perm::transposition(3, 1), t2 = Perm::transposition(3, 2);
  CHECK((t1 * t2).apply(3) == t1.apply(t2.apply(3)));
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Perm::identity(3)).empty());
  CHECK(reduced_word(Perm::transposition(3, 2)) == std::vector<int>{2});
  for (int n = 2; n <= 5; ++n) {
    for (const Perm& w : all_perms(n)) {
      auto word = reduced_word(w);
      CHECK((int)word.size() == perm_length(w));
      Perm prod = Perm::identity(n);
      for (int i : word) prod = prod * Perm::transposition(n, i);
      CHECK(prod == w);
    }
  }
}

TEST_CASE("young generators") {
  CHECK(young_generators(Composition({4})) == std::vector<int>{1, 2, 3});
  CHECK(young_generators(Composition({1, 1, 1, 1})).empty());
  CHECK(young_generators(Composition({2, 2})) == std::vector<int>{1, 3});
}

TEST_CASE("distinguished representatives") {
  auto d = dist_reps(2, Composition({1, 1}));
  CHECK(d.size() == 2);
  CHECK(dist_reps(3, Composition({2, 1})).size() == 3);
  CHECK(dist_reps(4, Composition({2, 2})).size() == 6);

  // |D_lambda| = n!/|S_lambda| and enumeration order is (length, lex)
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lam : all_compositions(n)) {
      auto reps = dist_reps(n, lam);
      long sub = 1;
      for (int p : lam.parts) sub *= factorial(p);
      CHECK((long)reps.size() == factorial(n) / sub);
      for (size_t k = 1; k < reps.size(); ++k) {
        int l0 = perm_length(reps[k - 1]), l1 = perm_length(reps[k]);
        CHECK((l0 < l1 || (l0 == l1 && reps[k - 1].images() < reps[k].images())));
      }
    }
  }
}

TEST_CASE("length additivity over coset factorization") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lam : all_compositions(n)) {
      auto reps = dist_reps(n, lam);
      for (const Perm& pi : reps)
        for (const Perm& s : young_subgroup(lam))
          CHECK(perm_length(pi * s) == perm_length(pi) + perm_length(s));
    }
  }
}

TEST_CASE("double coset representatives") {
  auto d = double_dist_reps(Composition({3}), Composition({3}));
  CHECK(d.size() == 1);
  CHECK(d[0].rep.is_identity());
  CHECK(d[0].nu == Composition({3}));

  auto d2 = double_dist_reps(Composition({2, 1}), Composition({2, 1}));
  CHECK(d2.size() == 2);
  CHECK(d2[0].rep.is_identity());
  CHECK(d2[1].rep == Perm::transposition(3, 2));
  CHECK(d2[1].nu_generators.empty());

  CHECK(double_dist_reps(Composition({1, 1}), Composition({1, 1})).size() == 2);
  CHECK_THROWS_AS(double_dist_reps(Composition({2}), Composition({3})),
                  mismatch_error);
}

TEST_CASE("double cosets partition the group") {
  for (int n = 2; n <= 5; ++n) {
    auto comps = all_compositions(n);
    for (const auto& mu : comps)
      for (const auto& lam : comps) {
        long total = 0;
        long smu = 1, slam = 1;
        for (int p : mu.parts) smu *= factorial(p);
        for (int p : lam.parts) slam *= factorial(p);
        for (const auto& d : double_dist_reps(mu, lam)) {
          long snu = 1;
          for (int p : d.nu.parts) snu *= factorial(p);
          total += smu * slam / snu;
        }
        CHECK(total == factorial(n));
      }
  }
}

TEST_CASE("deodhar partition") {
  auto s = deodhar_partition(Composition({2}), 1);
  CHECK(s.a_set.empty());
  CHECK(s.tau_a_set.empty());
  CHECK(s.b_set.size() == 1);

  auto s2 = deodhar_partition(Composition({1, 1}), 1);
  CHECK(s2.a_set.size() == 1);
  CHECK(s2.tau_a_set.size() == 1);
  CHECK(s2.b_set.empty());

  for (int n = 2; n <= 6; ++n) {
    for (const auto& lam : all_compositions(n)) {
      auto reps = dist_reps(n, lam);
      for (int i = 1; i < n; ++i) {
        auto sp = deodhar_partition(lam, i);
        CHECK(sp.a_set.size() + sp.tau_a_set.size() + sp.b_set.size() ==
              reps.size());
        std::set<Perm> seen;
        for (const auto& v : {sp.a_set, sp.tau_a_set, sp.b_set})
          for (const Perm& p : v) CHECK(seen.insert(p).second);
        // tau_a_set = tau_i * a_set
        Perm tau = Perm::transposition(n, i);
        std::set<Perm> ta(sp.tau_a_set.begin(), sp.tau_a_set.end());
        for (const Perm& p : sp.a_set) CHECK(ta.count(tau * p));
        // b_set: sigma^{-1} tau_i sigma in B_lambda, and tau_i sigma = sigma tau_j
        auto gens = young_generators(lam);
        std::set<int> gset(gens.begin(), gens.end());
        for (size_t k = 0; k < sp.b_set.size(); ++k) {
          const Perm& p = sp.b_set[k];
          int j = sp.b_j[k];
          CHECK(gset.count(j));
          CHECK(tau * p == p * Perm::transposition(n, j));
        }
      }
    }
  }
}

TEST_CASE("longest elements") {
  Perm wn, wl, dl;
  longest_elements(3, Composition({1, 1, 1}), wn, wl, dl);
  CHECK(dl == Perm({3, 2, 1}));
  longest_elements(2, Composition({2}), wn, wl, dl);
  CHECK(dl.is_identity());
  longest_elements(4, Composition({2, 2}), wn, wl, dl);
  CHECK(perm_length(dl) == 4);
  // d_lambda is the longest element of D_lambda
  auto reps = dist_reps(4, Composition({2, 2}));
  CHECK(dl == reps.back());

  // d_lambda conjugation sends B_lambda into basic transpositions:
  // d tau_j d^{-1} = tau_{d(j)}... verified elementwise
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lam : all_compositions(n)) {
      longest_elements(n, lam, wn, wl, dl);
      for (int j : young_generators(lam)) {
        Perm conj = dl * Perm::transposition(n, j) * dl.inverse();
        int dj = std::min(dl.apply(j), dl.apply(j + 1));
        CHECK(conj == Perm::transposition(n, dj));
      }
    }
  }
}

TEST_CASE("trivial intersection reps") {
  CHECK(trivial_intersection_reps(Composition({1, 1, 1}), Composition({1, 1, 1}))
            .size() == 6);
  CHECK(trivial_intersection_reps(Composition({2}), Composition({2})).empty());
  auto t = trivial_intersection_reps(Composition({2, 1}), Composition({2, 1}));
  REQUIRE(t.size() == 1);
  CHECK(t[0] == Perm::transposition(3, 2));
}

TEST_CASE("double coset minimal representative") {
  for (int n = 2; n <= 4; ++n) {
    auto comps = all_compositions(n);
    for (const auto& mu : comps)
      for (const auto& lam : comps) {
        auto data = double_dist_reps(mu, lam);
        std::set<Perm> reps;
        for (const auto& d : data) reps.insert(d.rep);
        for (const Perm& w : all_perms(n))
          CHECK(reps.count(double_coset_min(mu, lam, w)));
      }
  }
}

TEST_CASE("serialization") {
  CHECK(Perm({3, 1, 2}).str() == "3 1 2");
  CHECK(Composition({2, 1, 1}).str() == "2,1,1");
}
