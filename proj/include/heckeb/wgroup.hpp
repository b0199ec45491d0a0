#pragma once

// Enumerated group context: the whole of W_n with integer element ids,
// precomputed length/inverse/generator-action tables. Construction is the
// only mutating phase; afterwards every query is const and the object can be
// shared freely between threads.

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "heckeb/signed_perm.hpp"

namespace heckeb {

class WGroup {
 public:
  explicit WGroup(int n) : n_(n), elems_(enumerate_group(n)) {
    const int N = static_cast<int>(elems_.size());
    index_.reserve(elems_.size() * 2);
    for (int i = 0; i < N; ++i) index_.emplace(elems_[i], i);
    len_.resize(N);
    tlen_.resize(N);
    inv_.resize(N);
    left_.assign(n, std::vector<int>(N));
    right_.assign(n, std::vector<int>(N));
    for (int i = 0; i < N; ++i) {
      len_[i] = length(elems_[i]);
      tlen_[i] = t_length(elems_[i]);
      inv_[i] = index_.at(elems_[i].inverse());
      for (Gen g = 0; g < n; ++g) {
        left_[g][i] = index_.at(left_mul_gen(g, elems_[i]));
        right_[g][i] = index_.at(right_mul_gen(elems_[i], g));
      }
    }
  }

  int rank() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int identity() const { return 0; }  // elements are sorted by length

  const SignedPerm& elem(int id) const { return elems_[id]; }

  int id_of(const SignedPerm& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }

  int len(int id) const { return len_[id]; }
  int tlen(int id) const { return tlen_[id]; }
  int inv(int id) const { return inv_[id]; }
  int left(Gen g, int id) const { return left_[g][id]; }
  int right(int id, Gen g) const { return right_[g][id]; }

  bool is_left_descent(int id, Gen g) const { return len_[left_[g][id]] < len_[id]; }
  bool is_right_descent(int id, Gen g) const { return len_[right_[g][id]] < len_[id]; }

  Gen first_left_descent(int id) const {
    for (Gen g = 0; g < n_; ++g)
      if (is_left_descent(id, g)) return g;
    return -1;
  }

  /// Bruhat order on ids; single-chain lifting recursion, O(l(w)) per query.
  bool bruhat_leq(int y, int w) const {
    while (true) {
      if (y == identity()) return true;
      if (len_[y] >= len_[w]) return y == w;
      Gen s = first_left_descent(w);
      int sw = left_[s][w];
      int sy = left_[s][y];
      if (len_[sy] < len_[y]) y = sy;
      w = sw;
    }
  }

 private:
  int n_;
  std::vector<SignedPerm> elems_;
  std::unordered_map<SignedPerm, int, SignedPermHash> index_;
  std::vector<int> len_, tlen_, inv_;
  std::vector<std::vector<int>> left_, right_;
};

}  // namespace heckeb
