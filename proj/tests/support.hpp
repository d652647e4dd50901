#pragma once

// Shared oracles and generators for the unit and acceptance suites.

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "serret/algorithm.hpp"
#include "serret/expansion.hpp"
#include "serret/graph.hpp"
#include "serret/integer.hpp"
#include "serret/numbers.hpp"
#include "serret/words.hpp"

namespace oracle {

using serret::Integer;
using serret::ProjMatrix;
using serret::QuadIrr;
using serret::SlowAlgorithm;
using serret::Symbols;

inline std::string spec_path(const std::string& name) { return std::string(SERRET_SPEC_DIR) + "/" + name; }

// Random slow algorithm: split leaves of the Farey tree [0,inf] -> {ML, MN}
// up to depth 5, stop at n leaves, flip each branch with probability 1/2.
inline SlowAlgorithm random_algorithm(std::mt19937_64& rng, int max_branches = 8, int max_depth = 5) {
  std::uniform_int_distribution<int> count(2, max_branches);
  const int n = count(rng);
  struct Leaf {
    ProjMatrix m;
    int depth;
  };
  std::vector<Leaf> leaves{{ProjMatrix(), 0}};
  while (static_cast<int>(leaves.size()) < n) {
    std::vector<int> open;
    for (int i = 0; i < static_cast<int>(leaves.size()); ++i) {
      if (leaves[i].depth < max_depth) open.push_back(i);
    }
    if (open.empty()) break;
    int i = open[std::uniform_int_distribution<int>(0, static_cast<int>(open.size()) - 1)(rng)];
    Leaf l = leaves[i];
    leaves[i] = {l.m * serret::gen::L(), l.depth + 1};
    leaves.insert(leaves.begin() + i + 1, {l.m * serret::gen::N(), l.depth + 1});
  }
  std::vector<ProjMatrix> ms;
  std::bernoulli_distribution coin(0.5);
  for (const auto& l : leaves) ms.push_back(coin(rng) ? l.m * serret::gen::F() : l.m);
  return SlowAlgorithm::from_matrices(ms);
}

// Positive (p + q sqrt(D)) / r with small coefficients.
inline QuadIrr random_quad(std::mt19937_64& rng) {
  static const int radicands[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21};
  std::uniform_int_distribution<int> pd(-30, 30), qd(1, 6), rd(1, 30), dd(0, 12);
  for (;;) {
    QuadIrr x(pd(rng), qd(rng), rd(rng), radicands[dd(rng)]);
    if (x.sign() > 0) return x;
  }
}

inline serret::ExtRational random_rational(std::mt19937_64& rng, int max_den = 1000) {
  std::uniform_int_distribution<int> qd(2, max_den);
  int q = qd(rng);
  int p = std::uniform_int_distribution<int>(1, q - 1)(rng);
  return {p, q};
}

// u^omega and w^omega share a tail: compare all alignments on |u|+|w| symbols.
inline bool brute_conjugate(const Symbols& u, const Symbols& w) {
  const std::size_t span = u.size() + w.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      bool same = true;
      for (std::size_t k = 0; k < span && same; ++k) same = u[(i + k) % u.size()] == w[(j + k) % w.size()];
      if (same) return true;
    }
  }
  return false;
}

// Greatest integer k with k <= x, by exact comparison.
inline Integer floor_of(const QuadIrr& x) {
  Integer lo = 0, hi = 1;
  while (serret::compare(x, serret::ExtRational(hi, 1)) >= 0) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    (serret::compare(x, serret::ExtRational(mid, 1)) >= 0 ? lo : hi) = mid;
  }
  return lo;
}

// Gauss map x -> 1/x - floor(1/x) on (0,1).
inline serret::ExtRational gauss(const serret::ExtRational& x) {
  Integer num = x.q(), den = x.p();
  return {num % den, den};
}
inline QuadIrr gauss(const QuadIrr& x) {
  QuadIrr inv = serret::mobius_apply(serret::gen::F(), x);
  return serret::mobius_apply(ProjMatrix(1, -floor_of(inv), 0, 1), inv);
}

// Coset enumeration (Hasse-Lindenberg-Todd-Coxeter) for a subgroup of PGL(2,Z)
// given by generator words, over the presentation
// <L, N, F | F^2, F L F N^-1, (L N^-1)^3, (N L^-1 N)^2>.
// Columns: 0 = L, 1 = L^-1, 2 = N, 3 = N^-1, 4 = F (self-inverse).
class CosetEnumeration {
 public:
  explicit CosetEnumeration(const std::vector<std::vector<int>>& subgroup) {
    static const std::vector<std::vector<int>> relators = {
        {4, 4}, {4, 0, 4, 3}, {0, 3, 0, 3, 0, 3}, {2, 1, 2, 2, 1, 2}};
    new_coset();
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const auto& r : relators) {
        if (live(c)) scan_and_fill(c, r);
      }
      if (!live(c)) continue;
      for (int x = 0; x < 5; ++x) {
        if (table_[c][x] < 0) define(c, x);
      }
      if (table_.size() > 200000) throw std::runtime_error("coset enumeration did not close");
    }
  }

  // Permutations of L, N, F on the live cosets, coset of the subgroup first.
  std::array<std::vector<int>, 3> permutations() {
    std::vector<int> id(table_.size(), -1);
    int k = 0;
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (live(c)) id[c] = k++;
    }
    std::array<std::vector<int>, 3> perm;
    const int cols[3] = {0, 2, 4};
    for (int z = 0; z < 3; ++z) {
      perm[z].assign(k, -1);
      for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
        if (live(c)) perm[z][id[c]] = id[rep(table_[c][cols[z]])];
      }
    }
    return perm;
  }

 private:
  static int inv(int x) { return x == 4 ? 4 : (x ^ 1); }
  bool live(int c) { return parent_[c] == c; }
  int rep(int c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }
  int new_coset() {
    table_.push_back({-1, -1, -1, -1, -1});
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }
  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }
  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }
  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < 5; ++x) {
        int f = table_[e][x];
        if (f < 0) continue;
        table_[f][inv(x)] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inv(x)] >= 0) {
          merge(e1, table_[f1][inv(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }
  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::vector<std::array<int, 5>> table_;
  std::vector<int> parent_;
};

// Coset-table columns for a generic factorization.
inline std::vector<int> columns_of(const serret::GenWord& w) {
  using serret::Letter;
  std::vector<int> out;
  for (Letter x : w.letters()) {
    switch (x) {
      case Letter::L: out.push_back(0); break;
      case Letter::LInv: out.push_back(1); break;
      case Letter::N: out.push_back(2); break;
      case Letter::NInv: out.push_back(3); break;
      case Letter::F: out.push_back(4); break;
      case Letter::S: out.insert(out.end(), {2, 1, 2}); break;
      case Letter::R: out.insert(out.end(), {0, 3}); break;
      case Letter::RInv: out.insert(out.end(), {2, 1}); break;
    }
  }
  return out;
}

// Schreier graph of the branch group by coset enumeration, canonical numbering.
inline serret::SchreierGraph enumerated_schreier(const SlowAlgorithm& t) {
  std::vector<std::vector<int>> gens;
  for (const auto& m : t.branches()) gens.push_back(columns_of(serret::generic_factor(m)));
  return serret::make_schreier(CosetEnumeration(gens).permutations());
}

}  // namespace oracle
