#pragma once

// Bipartitions of n, the dominance order, row-standard and standard
// bitableaux, the permutations d(t), the generalized Robinson--Schensted
// correspondence for signed permutations, and the distinguished left cell
// attached to a bipartition.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heckeb/signed_perm.hpp"

namespace heckeb {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline Partition conjugate_partition(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.resize(p[0]);
  for (int col = 0; col < p[0]; ++col) {
    int cnt = 0;
    for (int part : p)
      if (part > col) ++cnt;
    c[col] = cnt;
  }
  return c;
}

inline std::vector<Partition> partitions_of(int k) {
  // Descending lexicographic: (k), (k-1,1), ..., (1,...,1).
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

/// An ordered pair of partitions with |first| + |second| = n.
struct Bipartition {
  Partition first, second;

  int n() const {
    return std::accumulate(first.begin(), first.end(), 0) +
           std::accumulate(second.begin(), second.end(), 0);
  }
  int l() const { return std::accumulate(first.begin(), first.end(), 0); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

  /// Parts dot-separated, components bar-separated, empty component "-";
  /// e.g. "2.1|-" or "1|2".
  std::string to_string() const {
    auto one = [](const Partition& p) {
      if (p.empty()) return std::string("-");
      std::string s;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
      }
      return s;
    };
    return one(first) + "|" + one(second);
  }

  static Bipartition parse(std::string_view s) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos)
      throw std::invalid_argument("bipartition must contain '|'");
    auto one = [](std::string_view part) {
      Partition p;
      if (part == "-" || part.empty()) return p;
      std::istringstream in{std::string(part)};
      std::string piece;
      while (std::getline(in, piece, '.')) {
        int v = std::stoi(piece);
        if (v <= 0) throw std::invalid_argument("parts must be positive");
        p.push_back(v);
      }
      if (!std::is_sorted(p.rbegin(), p.rend()))
        throw std::invalid_argument("parts must be weakly decreasing");
      return p;
    };
    return Bipartition{one(s.substr(0, bar)), one(s.substr(bar + 1))};
  }
};

/// All bipartitions of n: |first| descending from n to 0, each component in
/// descending lexicographic order.
inline std::vector<Bipartition> bipartitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Bipartition> out;
  for (int l = n; l >= 0; --l)
    for (const auto& p1 : partitions_of(l))
      for (const auto& p2 : partitions_of(n - l)) out.push_back({p1, p2});
  return out;
}

/// Dominance order on bipartitions of the same n: partial sums of the first
/// components compare at every index, and partial sums of the second
/// components offset by |first| compare at every index.
inline bool dominance_leq(const Bipartition& lam, const Bipartition& mu) {
  if (lam.n() != mu.n()) throw std::invalid_argument("bipartition size mismatch");
  auto psum = [](const Partition& p, std::size_t j) {
    int s = 0;
    for (std::size_t i = 0; i < j && i < p.size(); ++i) s += p[i];
    return s;
  };
  std::size_t j1 = std::max(lam.first.size(), mu.first.size());
  for (std::size_t j = 1; j <= j1; ++j)
    if (psum(lam.first, j) > psum(mu.first, j)) return false;
  if (lam.l() > mu.l()) return false;
  std::size_t j2 = std::max(lam.second.size(), mu.second.size());
  for (std::size_t j = 1; j <= j2; ++j)
    if (lam.l() + psum(lam.second, j) > mu.l() + psum(mu.second, j)) return false;
  return true;
}

/// A filling of the pair of Young diagrams by 1..n, each number used once.
struct Bitableau {
  std::array<std::vector<std::vector<int>>, 2> comps;  // rows of each component

  Bipartition shape() const {
    Bipartition s;
    for (const auto& row : comps[0]) s.first.push_back(static_cast<int>(row.size()));
    for (const auto& row : comps[1]) s.second.push_back(static_cast<int>(row.size()));
    return s;
  }

  int n() const {
    int c = 0;
    for (const auto& comp : comps)
      for (const auto& row : comp) c += static_cast<int>(row.size());
    return c;
  }

  bool is_row_standard() const {
    for (const auto& comp : comps)
      for (const auto& row : comp)
        if (!std::is_sorted(row.begin(), row.end())) return false;
    return true;
  }

  bool is_standard() const {
    if (!is_row_standard()) return false;
    for (const auto& comp : comps)
      for (std::size_t r = 1; r < comp.size(); ++r)
        for (std::size_t c = 0; c < comp[r].size(); ++c)
          if (comp[r - 1][c] >= comp[r][c]) return false;
    return true;
  }

  /// Concatenated rows, first component then second; used as a canonical sort
  /// key for tableaux of equal shape.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& comp : comps)
      for (const auto& row : comp) w.insert(w.end(), row.begin(), row.end());
    return w;
  }

  std::string to_string() const {
    auto one = [](const std::vector<std::vector<int>>& comp) {
      if (comp.empty()) return std::string("-");
      std::string s;
      for (std::size_t r = 0; r < comp.size(); ++r) {
        if (r) s += ';';
        for (std::size_t c = 0; c < comp[r].size(); ++c) {
          if (c) s += ' ';
          s += std::to_string(comp[r][c]);
        }
      }
      return s;
    };
    return one(comps[0]) + " | " + one(comps[1]);
  }

  friend bool operator==(const Bitableau&, const Bitableau&) = default;
  friend auto operator<=>(const Bitableau&, const Bitableau&) = default;
};

/// The canonical tableau of shape lambda: first component filled row by row
/// with 1..l, second with l+1..n.
inline Bitableau canonical_bitableau(const Bipartition& lam) {
  Bitableau t;
  int next = 1;
  for (int part : lam.first) {
    std::vector<int> row(part);
    std::iota(row.begin(), row.end(), next);
    next += part;
    t.comps[0].push_back(std::move(row));
  }
  for (int part : lam.second) {
    std::vector<int> row(part);
    std::iota(row.begin(), row.end(), next);
    next += part;
    t.comps[1].push_back(std::move(row));
  }
  return t;
}

/// All standard bitableaux of shape lambda, by peeling removable corners from
/// the largest entry down.
inline std::vector<Bitableau> standard_bitableaux(const Bipartition& lam) {
  const int n = lam.n();
  std::vector<Bitableau> out;
  Bitableau work;
  work.comps[0].resize(lam.first.size());
  work.comps[1].resize(lam.second.size());
  // rows grow to their final lengths; fill positions recorded top-down
  std::array<Partition, 2> shapes = {lam.first, lam.second};
  std::array<std::vector<std::vector<int>>, 2> cells;
  cells[0].resize(lam.first.size());
  cells[1].resize(lam.second.size());
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t r = 0; r < shapes[c].size(); ++r) cells[c][r].assign(shapes[c][r], 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      Bitableau t;
      t.comps = cells;
      out.push_back(t);
      return;
    }
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t r = 0; r < shapes[c].size(); ++r) {
        int len = shapes[c][r];
        if (len == 0) continue;
        bool corner = (r + 1 == shapes[c].size()) || shapes[c][r + 1] < len;
        if (!corner) continue;
        shapes[c][r] -= 1;
        cells[c][r][len - 1] = k;
        rec(k - 1);
        shapes[c][r] += 1;
      }
    }
  };
  rec(n);
  return out;
}

/// All row-standard bitableaux: each row increasing, rows filled by choosing
/// entry sets in lexicographic order.
inline std::vector<Bitableau> row_standard_bitableaux(const Bipartition& lam) {
  const int n = lam.n();
  std::vector<int> rowlens;
  for (int p : lam.first) rowlens.push_back(p);
  for (int p : lam.second) rowlens.push_back(p);
  std::vector<Bitableau> out;
  std::vector<std::vector<int>> rows(rowlens.size());
  std::vector<bool> used(n + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == rowlens.size()) {
      Bitableau t;
      for (std::size_t i = 0; i < lam.first.size(); ++i) t.comps[0].push_back(rows[i]);
      for (std::size_t i = 0; i < lam.second.size(); ++i)
        t.comps[1].push_back(rows[lam.first.size() + i]);
      out.push_back(std::move(t));
      return;
    }
    // choose rowlens[r] of the unused numbers, increasing
    std::vector<int> avail;
    for (int x = 1; x <= n; ++x)
      if (!used[x]) avail.push_back(x);
    const int k = rowlens[r];
    std::vector<int> idx(k);
    std::function<void(int, int)> choose = [&](int from, int at) {
      if (at == k) {
        rows[r].clear();
        for (int i : idx) rows[r].push_back(avail[i]);
        for (int x : rows[r]) used[x] = true;
        rec(r + 1);
        for (int x : rows[r]) used[x] = false;
        return;
      }
      for (int i = from; i < static_cast<int>(avail.size()); ++i) {
        idx[at] = i;
        choose(i + 1, at + 1);
      }
    };
    choose(0, 0);
  };
  rec(0);
  return out;
}

/// Row-standard bitableaux whose first component is filled by 1..l and second
/// by l+1..n.
inline std::vector<Bitableau> row_standard_l_bitableaux(const Bipartition& lam) {
  const int l = lam.l();
  std::vector<Bitableau> out;
  for (const auto& t : row_standard_bitableaux(lam)) {
    bool ok = true;
    for (const auto& row : t.comps[0])
      for (int x : row)
        if (x > l) ok = false;
    if (ok) out.push_back(t);
  }
  return out;
}

/// The unique permutation d with d . t^lambda = t (entrywise on boxes).
inline SignedPerm d_of(const Bitableau& t) {
  const Bipartition lam = t.shape();
  if (!t.is_row_standard()) throw std::invalid_argument("d_of requires a row-standard bitableau");
  const Bitableau canon = canonical_bitableau(lam);
  const int n = lam.n();
  std::vector<int> win(n, 0);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t r = 0; r < canon.comps[c].size(); ++r)
      for (std::size_t j = 0; j < canon.comps[c][r].size(); ++j)
        win[canon.comps[c][r][j] - 1] = t.comps[c][r][j];
  return SignedPerm::from_window(std::move(win));
}

/// Factorization d(s) = y * d(t) with y in Y_{l,n-l} and t filled by 1..l /
/// l+1..n: relabel each component order-preservingly.
inline std::pair<SignedPerm, Bitableau> coset_decomposition(const Bitableau& s) {
  const Bipartition lam = s.shape();
  const int l = lam.l(), n = lam.n();
  std::vector<int> ent1, ent2;
  for (const auto& row : s.comps[0]) ent1.insert(ent1.end(), row.begin(), row.end());
  for (const auto& row : s.comps[1]) ent2.insert(ent2.end(), row.begin(), row.end());
  std::sort(ent1.begin(), ent1.end());
  std::sort(ent2.begin(), ent2.end());
  std::vector<int> ywin;
  ywin.insert(ywin.end(), ent1.begin(), ent1.end());
  ywin.insert(ywin.end(), ent2.begin(), ent2.end());
  SignedPerm y = SignedPerm::from_window(std::move(ywin));
  std::map<int, int> relabel;
  for (int i = 0; i < l; ++i) relabel[ent1[i]] = i + 1;
  for (int i = 0; i < n - l; ++i) relabel[ent2[i]] = l + 1 + i;
  Bitableau t = s;
  for (auto& comp : t.comps)
    for (auto& row : comp)
      for (int& x : row) x = relabel.at(x);
  return {y, t};
}

namespace detail {
/// Row-inserts val into an increasing-row tableau; returns the row index of
/// the box that was appended.
inline int row_insert(std::vector<std::vector<int>>& rows, int val) {
  std::size_t r = 0;
  while (true) {
    if (r == rows.size()) {
      rows.push_back({val});
      return static_cast<int>(r);
    }
    auto it = std::upper_bound(rows[r].begin(), rows[r].end(), val);
    if (it == rows[r].end()) {
      rows[r].push_back(val);
      return static_cast<int>(r);
    }
    std::swap(*it, val);
    ++r;
  }
}
}  // namespace detail

/// Generalized Robinson--Schensted map w -> (P, Q). The window is scanned
/// left to right; a positive entry is row-inserted by value into the first
/// component of P, a negative one contributes its absolute value to the
/// second component, and Q records the scan position in the box created.
inline std::pair<Bitableau, Bitableau> rs_pair(const SignedPerm& w) {
  Bitableau P, Q;
  for (int i = 1; i <= w.rank(); ++i) {
    int val = w.window()[i - 1];
    int c = val > 0 ? 0 : 1;
    int r = detail::row_insert(P.comps[c], std::abs(val));
    if (r == static_cast<int>(Q.comps[c].size()))
      Q.comps[c].push_back({i});
    else
      Q.comps[c][r].push_back(i);
  }
  return {P, Q};
}

/// The shape of P(w) (equivalently of Q(w)).
inline Bipartition type_of(const SignedPerm& w) { return rs_pair(w).first.shape(); }

/// Longest element of the Young subgroup S_lambda, acting on consecutive
/// blocks: the parts of lambda.first partition {1..l} left to right, those of
/// lambda.second partition {l+1..n}.
inline SignedPerm sigma_lambda(const Bipartition& lam) {
  const int n = lam.n();
  std::vector<int> win(n);
  std::iota(win.begin(), win.end(), 1);
  int start = 1;
  auto reverse_block = [&](int size) {
    for (int i = 0; i < size; ++i) win[start - 1 + i] = start + size - 1 - i;
    start += size;
  };
  for (int p : lam.first) reverse_block(p);
  for (int p : lam.second) reverse_block(p);
  return SignedPerm::from_window(std::move(win));
}

/// The set {d(t) * sigma_lambda * a_l : t standard of shape lambda}.
inline std::vector<SignedPerm> distinguished_cell(const Bipartition& lam) {
  const int n = lam.n();
  const SpecialElements sp = special_elements(n, lam.l());
  const SignedPerm core = sigma_lambda(lam) * sp.a;
  std::vector<SignedPerm> out;
  for (const auto& t : standard_bitableaux(lam)) out.push_back(d_of(t) * core);
  return out;
}

}  // namespace heckeb
