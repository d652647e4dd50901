#pragma once

// Exact trie descent shared by the orbit code. The surd variant never meets a
// partition endpoint, so it needs no tie handling.

#include "serret/algorithm.hpp"
#include "surd.hpp"

namespace serret::detail {

/// Replaces s by A_a^-1 * s and returns a.
inline int surd_step(const SlowAlgorithm& t, Surd& s) {
  const auto& trie = t.trie();
  int node = 0;
  while (trie[node].leaf < 0) {
    if (s.cmp_one() < 0) {
      s.apply_l_inverse();
      node = trie[node].child[0];
    } else {
      s.sub_one();
      node = trie[node].child[1];
    }
  }
  int a = trie[node].leaf;
  if (t.flip(a)) s.invert();
  return a;
}

}  // namespace serret::detail
