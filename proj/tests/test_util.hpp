#pragma once

// Shared helpers for the test suites.

#include <functional>
#include <vector>

#include "heckeb/bipartition.hpp"
#include "heckeb/hecke.hpp"
#include "heckeb/signed_perm.hpp"

namespace heckeb::testutil {

inline HeckeElt T(const SignedPerm& w) { return HeckeElt::unit(w); }
inline HeckeElt T(const char* word, int n) { return HeckeElt::unit(from_word(word, n)); }

/// Elements of the Young subgroup S_lambda of S_n acting on the consecutive
/// blocks cut out by the parts of both components.
inline std::vector<SignedPerm> young_subgroup(const Bipartition& lam) {
  const int n = lam.n();
  std::vector<int> block_of(n + 1, -1);
  int start = 1, block = 0;
  for (const auto* comp : {&lam.first, &lam.second})
    for (int p : *comp) {
      for (int i = start; i < start + p; ++i) block_of[i] = block;
      start += p;
      ++block;
    }
  std::vector<SignedPerm> out;
  for (const auto& w : enumerate_group(n)) {
    if (t_length(w) != 0) continue;
    bool ok = true;
    for (int i = 1; i <= n; ++i)
      if (block_of[w.window()[i - 1]] != block_of[i]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

/// A reduced word chosen greedily by the highest-index left descent; differs
/// from canonical_word whenever the descent set has 2+ elements.
inline std::vector<Gen> highest_descent_word(SignedPerm w) {
  std::vector<Gen> out;
  while (!w.is_identity()) {
    Gen best = -1;
    for (Gen g = 0; g < w.rank(); ++g)
      if (is_left_descent(w, g)) best = g;
    out.push_back(best);
    w = left_mul_gen(best, w);
  }
  return out;
}

}  // namespace heckeb::testutil
