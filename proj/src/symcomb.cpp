#include "heckelab/symcomb.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace heckelab {

Perm::Perm(std::vector<int> images) : im_(std::move(images)) {
  std::vector<char> seen(im_.size(), 0);
  for (int v : im_) {
    if (v < 1 || v > (int)im_.size() || seen[v - 1])
      throw error("not a permutation");
    seen[v - 1] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw error("transposition index out of range");
  Perm p = identity(n);
  std::swap(p.im_[i - 1], p.im_[i]);
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (n() != o.n()) throw mismatch_error("permutation window mismatch");
  std::vector<int> v(im_.size());
  for (int i = 1; i <= n(); ++i) v[i - 1] = apply(o.apply(i));
  Perm r;
  r.im_ = std::move(v);
  return r;
}

Perm Perm::inverse() const {
  std::vector<int> v(im_.size());
  for (int i = 1; i <= n(); ++i) v[im_[i - 1] - 1] = i;
  Perm r;
  r.im_ = std::move(v);
  return r;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (im_[i - 1] != i) return false;
  return true;
}

std::string Perm::str() const {
  std::string s;
  for (size_t i = 0; i < im_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(im_[i]);
  }
  return s;
}

void Composition::validate() {
  n = 0;
  for (int p : parts) {
    if (p < 1) throw error("composition parts must be positive");
    n += p;
  }
}

std::string Composition::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

int perm_length(const Perm& w) {
  int count = 0;
  for (int i = 1; i < w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w.apply(i) > w.apply(j)) ++count;
  return count;
}

std::vector<int> reduced_word(const Perm& w) {
  // peel left descents, smallest generator first
  std::vector<int> word;
  Perm cur = w;
  Perm inv = w.inverse();
  while (!cur.is_identity()) {
    int pick = -1;
    for (int i = 1; i < cur.n(); ++i) {
      if (inv.apply(i) > inv.apply(i + 1)) {
        pick = i;
        break;
      }
    }
    word.push_back(pick);
    cur = Perm::transposition(cur.n(), pick) * cur;
    inv = cur.inverse();
  }
  return word;
}

std::vector<int> young_generators(const Composition& lambda) {
  std::vector<int> gens;
  std::set<int> cuts;
  int acc = 0;
  for (int p : lambda.parts) {
    acc += p;
    cuts.insert(acc);
  }
  for (int j = 1; j < lambda.n; ++j)
    if (!cuts.count(j)) gens.push_back(j);
  return gens;
}

static bool length_lex_less(const Perm& a, const Perm& b) {
  int la = perm_length(a), lb = perm_length(b);
  if (la != lb) return la < lb;
  return a.images() < b.images();
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  // parts chosen left to right
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Perm> young_subgroup(const Composition& lambda) {
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int p : lambda.parts) {
    blocks.emplace_back(start, start + p - 1);
    start += p;
  }
  std::vector<Perm> out;
  for (const Perm& s : all_perms(lambda.n)) {
    bool ok = true;
    for (auto [a, b] : blocks)
      for (int i = a; i <= b && ok; ++i)
        if (s.apply(i) < a || s.apply(i) > b) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

Composition composition_from_generators(int n, const std::set<int>& gens) {
  std::vector<int> parts;
  int run = 1;
  for (int j = 1; j < n; ++j) {
    if (gens.count(j)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  if (n == 0) parts.clear();
  return Composition(parts);
}

std::vector<Perm> dist_reps(int n, const Composition& lambda) {
  if (lambda.n != n) throw mismatch_error("composition does not sum to n");
  auto gens = young_generators(lambda);
  std::vector<Perm> out;
  for (const Perm& p : all_perms(n)) {
    bool ok = true;
    for (int j : gens)
      if (p.apply(j) > p.apply(j + 1)) {  // pi tau_j < pi
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Perm> dist_reps_in(const Composition& nu,
                               const Composition& lambda) {
  auto gens = young_generators(lambda);
  std::vector<Perm> out;
  for (const Perm& p : young_subgroup(nu)) {
    bool ok = true;
    for (int j : gens)
      if (p.apply(j) > p.apply(j + 1)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<DoubleCosetDatum> double_dist_reps(const Composition& mu,
                                               const Composition& lambda) {
  if (mu.n != lambda.n) throw mismatch_error("compositions of different n");
  int n = mu.n;
  auto lam_gens = young_generators(lambda);
  std::set<int> lam_set(lam_gens.begin(), lam_gens.end());
  auto mu_gens = young_generators(mu);
  std::vector<DoubleCosetDatum> out;
  for (const Perm& pi : dist_reps(n, lambda)) {
    Perm inv = pi.inverse();
    bool in_left = true;  // pi^{-1} in D_mu, i.e. tau_j pi > pi for tau_j in B_mu
    for (int j : mu_gens)
      if (inv.apply(j) > inv.apply(j + 1)) {
        in_left = false;
        break;
      }
    if (!in_left) continue;
    DoubleCosetDatum d;
    d.rep = pi;
    std::set<int> nu_set;
    for (int i : mu_gens) {
      int a = inv.apply(i), b = inv.apply(i + 1);
      if (b == a + 1 && lam_set.count(a)) {
        d.nu_generators.push_back(i);
        nu_set.insert(i);
      }
    }
    d.nu = composition_from_generators(n, nu_set);
    out.push_back(d);
  }
  return out;
}

DeodharSplit deodhar_partition(const Composition& lambda, int i) {
  int n = lambda.n;
  if (i < 1 || i >= n) throw error("generator index out of range");
  auto lam_gens = young_generators(lambda);
  std::set<int> lam_set(lam_gens.begin(), lam_gens.end());
  DeodharSplit split;
  Perm tau = Perm::transposition(n, i);
  for (const Perm& s : dist_reps(n, lambda)) {
    Perm inv = s.inverse();
    int a = inv.apply(i), b = inv.apply(i + 1);
    if (std::abs(a - b) == 1 && lam_set.count(std::min(a, b))) {
      split.b_set.push_back(s);
      split.b_j.push_back(a);
    } else if (perm_length(tau * s) > perm_length(s)) {
      split.a_set.push_back(s);
    } else {
      split.tau_a_set.push_back(s);
    }
  }
  return split;
}

void longest_elements(int n, const Composition& lambda, Perm& w_n, Perm& w_lam,
                      Perm& d_lam) {
  if (lambda.n != n) throw mismatch_error("composition does not sum to n");
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - i;
  w_n = Perm(rev);
  std::vector<int> wl(n);
  int start = 1;
  for (int p : lambda.parts) {
    for (int i = 0; i < p; ++i) wl[start - 1 + i] = start + p - 1 - i;
    start += p;
  }
  w_lam = Perm(wl);
  d_lam = w_n * w_lam;
}

Perm left_coset_min(const Composition& lambda, const Perm& w) {
  Perm cur = w;
  auto gens = young_generators(lambda);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : gens) {
      if (cur.apply(j) > cur.apply(j + 1)) {  // w tau_j < w
        cur = cur * Perm::transposition(cur.n(), j);
        changed = true;
      }
    }
  }
  return cur;
}

Perm double_coset_min(const Composition& mu, const Composition& lambda,
                      const Perm& w) {
  Perm cur = w;
  auto mu_gens = young_generators(mu);
  auto lam_gens = young_generators(lambda);
  bool changed = true;
  while (changed) {
    changed = false;
    Perm inv = cur.inverse();
    for (int j : mu_gens) {
      if (inv.apply(j) > inv.apply(j + 1)) {  // tau_j w < w
        cur = Perm::transposition(cur.n(), j) * cur;
        inv = cur.inverse();
        changed = true;
      }
    }
    for (int j : lam_gens) {
      if (cur.apply(j) > cur.apply(j + 1)) {  // w tau_j < w
        cur = cur * Perm::transposition(cur.n(), j);
        inv = cur.inverse();
        changed = true;
      }
    }
  }
  return cur;
}

std::vector<Perm> trivial_intersection_reps(const Composition& mu,
                                            const Composition& lambda) {
  std::vector<Perm> out;
  for (const auto& d : double_dist_reps(mu, lambda))
    if (d.nu_generators.empty()) out.push_back(d.rep);
  return out;
}

}  // namespace heckelab
