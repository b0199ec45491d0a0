#pragma once

// The Coxeter group W_n of type B_n realized as signed permutations of
// {1,...,n}: windows, word arithmetic, lengths, descents, Bruhat order,
// distinguished coset representatives and the Clifford normal form.
//
// Composition convention, fixed once for the whole library:
//   (x*y)(i) = x(y(i)),
// and a word "g1 g2 ... gk" denotes the product g1*g2*...*gk. The generator
// t is the sign change at position 1; s_k swaps k and k+1.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heckeb {

enum class Side { Left, Right, TwoSided };

/// Generator labels: 0 is t, k >= 1 is s_k.
using Gen = int;

class SignedPerm {
 public:
  /// Identity of rank n.
  explicit SignedPerm(int n) : w_(n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::iota(w_.begin(), w_.end(), 1);
  }

  static SignedPerm from_window(std::vector<int> window) {
    SignedPerm p(static_cast<int>(window.size()));
    std::vector<bool> seen(window.size(), false);
    for (int x : window) {
      int a = std::abs(x);
      if (a < 1 || a > static_cast<int>(window.size()) || seen[a - 1])
        throw std::invalid_argument("window is not a signed permutation");
      seen[a - 1] = true;
    }
    p.w_ = std::move(window);
    return p;
  }

  int rank() const { return static_cast<int>(w_.size()); }

  /// Signed evaluation; i may be negative, with w(-i) = -w(i).
  int apply(int i) const {
    return i > 0 ? w_[i - 1] : -w_[-i - 1];
  }

  const std::vector<int>& window() const { return w_; }

  bool is_identity() const {
    for (int i = 0; i < rank(); ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  friend SignedPerm operator*(const SignedPerm& x, const SignedPerm& y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
    SignedPerm r(x.rank());
    for (int i = 1; i <= x.rank(); ++i) r.w_[i - 1] = x.apply(y.apply(i));
    return r;
  }

  SignedPerm inverse() const {
    SignedPerm r(rank());
    for (int i = 1; i <= rank(); ++i) {
      int j = w_[i - 1];
      if (j > 0)
        r.w_[j - 1] = i;
      else
        r.w_[-j - 1] = -i;
    }
    return r;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.w_ == b.w_; }
  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) { return a.w_ <=> b.w_; }

 private:
  std::vector<int> w_;  // w_[i-1] = w(i)
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.window()) h = h * 1099511628211ull + static_cast<std::size_t>(x + 64);
    return h;
  }
};

inline SignedPerm gen_elem(int n, Gen g) {
  if (g < 0 || g >= n) throw std::invalid_argument("generator index out of rank");
  SignedPerm e(n);
  std::vector<int> w = e.window();
  if (g == 0)
    w[0] = -1;
  else
    std::swap(w[g - 1], w[g]);
  return SignedPerm::from_window(std::move(w));
}

/// g * w: for t, flips the sign carried by the value 1; for s_k, exchanges the
/// values k and k+1 wherever they appear.
inline SignedPerm left_mul_gen(Gen g, const SignedPerm& w) {
  std::vector<int> win = w.window();
  const int n = w.rank();
  if (g < 0 || g >= n) throw std::invalid_argument("generator index out of rank");
  if (g == 0) {
    for (int& x : win)
      if (x == 1 || x == -1) { x = -x; break; }
  } else {
    for (int& x : win) {
      if (x == g) x = g + 1;
      else if (x == -g) x = -(g + 1);
      else if (x == g + 1) x = g;
      else if (x == -(g + 1)) x = -g;
    }
  }
  return SignedPerm::from_window(std::move(win));
}

/// w * g: for t, negates the first window entry; for s_k, swaps positions k, k+1.
inline SignedPerm right_mul_gen(const SignedPerm& w, Gen g) {
  std::vector<int> win = w.window();
  const int n = w.rank();
  if (g < 0 || g >= n) throw std::invalid_argument("generator index out of rank");
  if (g == 0)
    win[0] = -win[0];
  else
    std::swap(win[g - 1], win[g]);
  return SignedPerm::from_window(std::move(win));
}

/// Coxeter length: window inversions plus the sum of the absolute values of
/// the negative entries.
inline int length(const SignedPerm& w) {
  const auto& win = w.window();
  const int n = w.rank();
  int len = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (win[i] > win[j]) ++len;
    if (win[i] < 0) len += -win[i];
  }
  return len;
}

/// Number of occurrences of t in any reduced word; equals the count of
/// negative window entries.
inline int t_length(const SignedPerm& w) {
  int c = 0;
  for (int x : w.window())
    if (x < 0) ++c;
  return c;
}

inline bool is_right_descent(const SignedPerm& w, Gen g) {
  const auto& win = w.window();
  if (g == 0) return win[0] < 0;
  if (g < 1 || g >= w.rank()) throw std::invalid_argument("generator index out of rank");
  return win[g - 1] > win[g];
}

inline bool is_left_descent(const SignedPerm& w, Gen g) {
  // s is a left descent of w iff it is a right descent of w^{-1}; read the
  // needed inverse values straight off the window.
  const auto& win = w.window();
  const int n = w.rank();
  auto inv_at = [&](int v) {  // w^{-1}(v), v > 0
    for (int i = 0; i < n; ++i) {
      if (win[i] == v) return i + 1;
      if (win[i] == -v) return -(i + 1);
    }
    throw std::logic_error("value not found in window");
  };
  if (g == 0) return inv_at(1) < 0;
  if (g < 1 || g >= n) throw std::invalid_argument("generator index out of rank");
  return inv_at(g) > inv_at(g + 1);
}

inline std::vector<Gen> descents(const SignedPerm& w, Side side) {
  if (side == Side::TwoSided) throw std::invalid_argument("descents: side must be left or right");
  std::vector<Gen> r;
  for (Gen g = 0; g < w.rank(); ++g) {
    bool d = (side == Side::Right) ? is_right_descent(w, g) : is_left_descent(w, g);
    if (d) r.push_back(g);
  }
  return r;
}

/// First left descent under the generator priority t < s_1 < ... < s_{n-1},
/// or -1 for the identity.
inline Gen first_left_descent(const SignedPerm& w) {
  for (Gen g = 0; g < w.rank(); ++g)
    if (is_left_descent(w, g)) return g;
  return -1;
}

inline std::string gen_name(Gen g) { return g == 0 ? "t" : "s" + std::to_string(g); }

/// Parses a whitespace-separated generator word ("s2 t"); "e" and the empty
/// string denote the identity.
inline std::vector<Gen> parse_word(std::string_view text, int n) {
  std::vector<Gen> gens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    Gen g;
    if (tok == "t") {
      g = 0;
    } else if (tok.size() >= 2 && tok[0] == 's') {
      try {
        g = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("unknown generator token: " + tok);
      }
      if (g < 1) throw std::invalid_argument("unknown generator token: " + tok);
    } else {
      throw std::invalid_argument("unknown generator token: " + tok);
    }
    if (g >= n) throw std::invalid_argument("generator " + tok + " out of range for rank " + std::to_string(n));
    gens.push_back(g);
  }
  return gens;
}

inline SignedPerm from_word(const std::vector<Gen>& gens, int n) {
  SignedPerm w(n);
  for (Gen g : gens) w = right_mul_gen(w, g);
  return w;
}

inline SignedPerm from_word(std::string_view text, int n) {
  return from_word(parse_word(text, n), n);
}

/// Canonical reduced word: repeatedly strip the first left descent. The
/// identity yields the empty word.
inline std::vector<Gen> canonical_word(SignedPerm w) {
  std::vector<Gen> out;
  for (Gen g = first_left_descent(w); g != -1; g = first_left_descent(w)) {
    out.push_back(g);
    w = left_mul_gen(g, w);
  }
  return out;
}

inline std::string word_string(const std::vector<Gen>& gens) {
  if (gens.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ' ';
    s += gen_name(gens[i]);
  }
  return s;
}

/// Canonical display name of an element ("e", "t s2", ...).
inline std::string element_name(const SignedPerm& w) { return word_string(canonical_word(w)); }

/// Bruhat--Chevalley order via the lifting property. Each call recurses along
/// a single chain of length l(w), so no memoization is needed.
inline bool bruhat_leq(const SignedPerm& y, const SignedPerm& w) {
  if (y.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  if (y.is_identity()) return true;
  if (length(y) >= length(w)) return y == w;
  Gen s = first_left_descent(w);
  SignedPerm sw = left_mul_gen(s, w);
  if (is_left_descent(y, s)) return bruhat_leq(left_mul_gen(s, y), sw);
  return bruhat_leq(y, sw);
}

/// All 2^n n! elements sorted by (length, lexicographic window).
inline std::vector<SignedPerm> enumerate_group(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("rank out of supported range");
  std::vector<SignedPerm> all;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> win(perm);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) win[i] = -win[i];
      all.push_back(SignedPerm::from_window(std::move(win)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(all.begin(), all.end(), [](const SignedPerm& a, const SignedPerm& b) {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a.window() < b.window();
  });
  return all;
}

/// The elements a_l = t(s_1 t)(s_2 s_1 t)...(s_{l-1}...s_1 t), sigma_l (the
/// longest element of the symmetric group on {1..l}) and w_l (the longest
/// element of the rank-l type-B parabolic), satisfying a_l = w_l * sigma_l.
struct SpecialElements {
  SignedPerm a, sigma, w;
};

inline SpecialElements special_elements(int n, int l) {
  if (l < 0 || l > n) throw std::invalid_argument("l out of range");
  std::vector<Gen> word;
  for (int j = 1; j <= l; ++j) {
    for (int k = j - 1; k >= 1; --k) word.push_back(k);
    word.push_back(0);
  }
  SignedPerm a = from_word(word, n);
  std::vector<int> sig(n), wl(n);
  for (int i = 1; i <= n; ++i) {
    sig[i - 1] = i <= l ? l + 1 - i : i;
    wl[i - 1] = i <= l ? -i : i;
  }
  return {a, SignedPerm::from_window(std::move(sig)), SignedPerm::from_window(std::move(wl))};
}

/// Distinguished left coset representatives Y_{l,n-l} of the Young subgroup
/// S_{l,n-l} in S_n: windows increasing on 1..l and on l+1..n. One per
/// l-subset of {1..n}, in subset-lexicographic order.
inline std::vector<SignedPerm> coset_reps_Y(int n, int l) {
  if (l < 0 || l > n) throw std::invalid_argument("l out of range");
  std::vector<SignedPerm> reps;
  std::vector<int> pick(l);
  std::function<void(int, int)> rec = [&](int from, int k) {
    if (k == l) {
      std::vector<int> win(pick.begin(), pick.end());
      std::vector<bool> used(n + 1, false);
      for (int x : pick) used[x] = true;
      for (int x = 1; x <= n; ++x)
        if (!used[x]) win.push_back(x);
      reps.push_back(SignedPerm::from_window(std::move(win)));
      return;
    }
    for (int x = from; x <= n; ++x) {
      pick[k] = x;
      rec(x + 1, k + 1);
    }
  };
  rec(1, 0);
  return reps;
}

/// The Clifford normal form w = a * a_l * sigma * b^{-1} with l the t-length
/// of w, sigma in the Young subgroup S_{l,n-l} and a, b in Y_{l,n-l}.
struct CliffordForm {
  SignedPerm a;
  int l;
  SignedPerm sigma;
  SignedPerm b;
};

inline CliffordForm clifford_form(const SignedPerm& w) {
  const int n = w.rank();
  const int l = t_length(w);
  // Minimal representative of the coset w*S_n is the ascending sort of the window.
  std::vector<int> ysort = w.window();
  std::sort(ysort.begin(), ysort.end());
  SignedPerm y = SignedPerm::from_window(std::move(ysort));
  SignedPerm a_l = special_elements(n, l).a;
  SignedPerm a = y * a_l;  // a_l is an involution
  SignedPerm sigma_full = y.inverse() * w;
  for (int x : sigma_full.window())
    if (x < 0) throw std::logic_error("clifford_form: coset part not in S_n");
  // Factor sigma_full = sigma * b^{-1} with b the block-sorted window of its inverse.
  SignedPerm tau = sigma_full.inverse();
  std::vector<int> bwin = tau.window();
  std::sort(bwin.begin(), bwin.begin() + l);
  std::sort(bwin.begin() + l, bwin.end());
  SignedPerm b = SignedPerm::from_window(std::move(bwin));
  SignedPerm sigma = sigma_full * b;
  return {a, l, sigma, b};
}

inline SignedPerm parse_window(std::string_view s) {
  std::string t(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("window must look like [-1,3,2]");
  t = t.substr(1, t.size() - 2);
  std::vector<int> win;
  std::istringstream in(t);
  std::string piece;
  while (std::getline(in, piece, ',')) win.push_back(std::stoi(piece));
  return SignedPerm::from_window(std::move(win));
}

inline std::string window_string(const SignedPerm& w) {
  std::string s = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.window()[i]);
  }
  return s + "]";
}

}  // namespace heckeb
