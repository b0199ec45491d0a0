#pragma once

// Kazhdan--Lusztig cells: the left/right/two-sided preorder graphs generated
// by h_{s,y,z} != 0, their strongly connected components, cell modules with
// explicit generator matrices over A, and Hom spaces between matrix
// representations over the field of fractions.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heckeb/bipartition.hpp"
#include "heckeb/kl.hpp"
#include "heckeb/linalg.hpp"

namespace heckeb {

struct CellPartition {
  int n = 0;
  MonomialOrder ord = MonomialOrder::asymptotic();
  Side side = Side::Left;
  std::vector<std::vector<int>> cells;  // element ids, ascending; cells sorted by min id
  std::vector<int> cell_of;             // element id -> cell index
  std::vector<std::vector<char>> reach;  // reach[a][b]: cell b is reachable from cell a

  /// b <= a in the induced partial order on cells (every element of b is
  /// below every element of a in the preorder).
  bool cell_leq(int b, int a) const { return reach[a][b]; }
};

namespace detail {

/// Adjacency y -> z meaning C_z occurs in some C_s C_y, over the given
/// vertex set and generator set. Vertices are global element ids; the
/// adjacency is indexed by position in `verts`.
inline std::vector<std::vector<int>> preorder_edges(KLTable& kl, const std::vector<int>& verts,
                                                    const std::vector<Gen>& gens) {
  std::vector<int> local(kl.group().size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (Gen s : gens) {
      for (const auto& [z, h] : kl.c_gen_product(s, verts[i])) {
        if (z == verts[i]) continue;
        int j = local[z];
        if (j >= 0) adj[i].push_back(j);
      }
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }
  return adj;
}

/// Tarjan's algorithm, iterative.
inline std::vector<int> scc_of(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n), num(n, -1), stack;
  std::vector<char> on_stack(n, false);
  int counter = 0, ncomp = 0;
  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < adj[v].size()) {
        int w = adj[v][edge++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return comp;
}

inline CellPartition partition_from_edges(KLTable& kl, Side side, const std::vector<int>& verts,
                                          const std::vector<std::vector<int>>& adj) {
  CellPartition part;
  part.n = kl.group().rank();
  part.ord = kl.order();
  part.side = side;
  std::vector<int> comp = scc_of(adj);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> raw(ncomp);
  for (std::size_t i = 0; i < verts.size(); ++i) raw[comp[i]].push_back(verts[i]);
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  part.cells = std::move(raw);
  part.cell_of.assign(kl.group().size(), -1);
  for (std::size_t ci = 0; ci < part.cells.size(); ++ci)
    for (int id : part.cells[ci]) part.cell_of[id] = static_cast<int>(ci);
  // condensation reachability
  std::vector<int> local(kl.group().size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  const int nc = static_cast<int>(part.cells.size());
  std::vector<std::vector<int>> cadj(nc);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int a = part.cell_of[verts[i]];
    for (int j : adj[i]) {
      int b = part.cell_of[verts[j]];
      if (a != b) cadj[a].push_back(b);
    }
  }
  part.reach.assign(nc, std::vector<char>(nc, 0));
  for (int c = 0; c < nc; ++c) {
    std::vector<int> todo{c};
    part.reach[c][c] = 1;
    while (!todo.empty()) {
      int a = todo.back();
      todo.pop_back();
      for (int b : cadj[a])
        if (!part.reach[c][b]) {
          part.reach[c][b] = 1;
          todo.push_back(b);
        }
    }
  }
  return part;
}

}  // namespace detail

/// Cells of W_n for the given order and side. Left edges come from the
/// generator products C_s C_y; right edges are the left edges of the
/// inverses; two-sided edges are the union.
inline CellPartition cell_partition(KLTable& kl, Side side) {
  kl.ensure_all();
  const WGroup& W = kl.group();
  std::vector<int> verts(W.size());
  for (int i = 0; i < W.size(); ++i) verts[i] = i;
  std::vector<Gen> gens;
  for (Gen g = 0; g < W.rank(); ++g) gens.push_back(g);
  auto adjL = detail::preorder_edges(kl, verts, gens);
  std::vector<std::vector<int>> adj;
  if (side == Side::Left) {
    adj = std::move(adjL);
  } else {
    std::vector<std::vector<int>> adjR(W.size());
    for (int y = 0; y < W.size(); ++y)
      for (int z : adjL[W.inv(y)]) adjR[y].push_back(W.inv(z));
    if (side == Side::Right) {
      adj = std::move(adjR);
    } else {
      adj = std::move(adjL);
      for (int y = 0; y < W.size(); ++y) {
        adj[y].insert(adj[y].end(), adjR[y].begin(), adjR[y].end());
        std::sort(adj[y].begin(), adj[y].end());
        adj[y].erase(std::unique(adj[y].begin(), adj[y].end()), adj[y].end());
      }
    }
  }
  return detail::partition_from_edges(kl, side, verts, adj);
}

/// The left cell containing w, as ascending element ids.
inline std::vector<int> left_cell_of(KLTable& kl, const SignedPerm& w) {
  CellPartition part = cell_partition(kl, Side::Left);
  int id = kl.group().id_of(w);
  return part.cells[part.cell_of[id]];
}

/// Left cells of the parabolic subgroup S_{l,n-l} (an equal-parameter
/// situation), computed inside the same table: vertices are the Young
/// subgroup elements and only the generators s_i with i != l act.
inline CellPartition parabolic_left_cells(KLTable& kl, int l) {
  const WGroup& W = kl.group();
  const int n = W.rank();
  if (l < 0 || l > n) throw std::invalid_argument("l out of range");
  kl.ensure_all();
  std::vector<int> verts;
  for (int id = 0; id < W.size(); ++id) {
    const auto& w = W.elem(id);
    if (t_length(w) != 0) continue;
    bool inside = true;
    for (int i = 0; i < l; ++i)
      if (w.window()[i] > l) inside = false;
    if (inside) verts.push_back(id);
  }
  std::vector<Gen> gens;
  for (Gen g = 1; g < n; ++g)
    if (g != l) gens.push_back(g);
  auto adj = detail::preorder_edges(kl, verts, gens);
  return detail::partition_from_edges(kl, Side::Left, verts, adj);
}

/// A left cell module: the action of each T_g on the basis {e_w : w in cell}.
struct CellModule {
  int n = 0;
  MonomialOrder ord = MonomialOrder::asymptotic();
  std::vector<int> basis;             // element ids in basis order
  std::vector<LaurentMatrix> gen_mats;  // indexed by generator
};

/// Generator matrices of the cell module on the given left cell. The default
/// basis order is ascending (length, lex window); an explicit order must be a
/// permutation of the cell.
inline CellModule cell_module(KLTable& kl, const std::vector<int>& cell,
                              const std::vector<SignedPerm>* basis_order = nullptr) {
  const WGroup& W = kl.group();
  CellModule mod;
  mod.n = W.rank();
  mod.ord = kl.order();
  if (basis_order) {
    std::vector<int> given;
    for (const auto& w : *basis_order) given.push_back(W.id_of(w));
    std::vector<int> a = given, b = cell;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("basis order is not a permutation of the cell");
    mod.basis = given;
  } else {
    mod.basis = cell;
    std::sort(mod.basis.begin(), mod.basis.end());
  }
  const int d = static_cast<int>(mod.basis.size());
  std::vector<int> pos(W.size(), -1);
  for (int i = 0; i < d; ++i) pos[mod.basis[i]] = i;
  for (Gen s = 0; s < W.rank(); ++s) {
    LaurentMatrix m(d, std::vector<Laurent2>(d));
    for (int j = 0; j < d; ++j) {
      // T_s e_x = sum_z h_{s,x,z} e_z - v_s^{-1} e_x restricted to the cell
      for (const auto& [z, h] : kl.c_gen_product(s, mod.basis[j]))
        if (pos[z] >= 0) m[pos[z]][j] += h;
      m[j][j] -= gen_param(s, -1);
    }
    mod.gen_mats.push_back(std::move(m));
  }
  return mod;
}

/// Basis of the space of intertwiners {X : X rho1(T_g) = rho2(T_g) X for all
/// g} over the field of fractions, returned as matrices over A with integer
/// and monomial content divided out.
inline std::vector<LaurentMatrix> hom_space(const std::vector<LaurentMatrix>& rep1,
                                            const std::vector<LaurentMatrix>& rep2) {
  if (rep1.size() != rep2.size()) throw std::invalid_argument("generator set mismatch");
  const int d1 = rep1.empty() ? 0 : static_cast<int>(rep1[0].size());
  const int d2 = rep2.empty() ? 0 : static_cast<int>(rep2[0].size());
  const int unknowns = d1 * d2;  // X is d2 x d1, X[i][k] at index i*d1+k
  LaurentMatrix rows;
  for (std::size_t g = 0; g < rep1.size(); ++g) {
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d1; ++j) {
        std::vector<Laurent2> row(unknowns);
        for (int k = 0; k < d1; ++k) row[i * d1 + k] += rep1[g][k][j];
        for (int k = 0; k < d2; ++k) row[k * d1 + j] -= rep2[g][i][k];
        rows.push_back(std::move(row));
      }
  }
  std::vector<LaurentMatrix> basis;
  for (auto& vec : nullspace(rows)) {
    normalize_content(vec);
    LaurentMatrix X(d2, std::vector<Laurent2>(d1));
    for (int i = 0; i < d2; ++i)
      for (int k = 0; k < d1; ++k) X[i][k] = vec[i * d1 + k];
    basis.push_back(std::move(X));
  }
  return basis;
}

inline std::vector<LaurentMatrix> hom_space(const CellModule& m1, const CellModule& m2) {
  return hom_space(m1.gen_mats, m2.gen_mats);
}

/// Orders a cell by the insertion tableaux of its elements (lexicographic on
/// the row-reading word, first component then second).
inline std::vector<int> p_tableau_basis_order(const WGroup& W, std::vector<int> cell) {
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (int id : cell) keyed.emplace_back(rs_pair(W.elem(id)).first.reading_word(), id);
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& [k, id] : keyed) out.push_back(id);
  return out;
}

/// Whether two same-type left cells carry identical generator matrices once
/// each basis is ordered canonically by the insertion tableau of its
/// elements. Throws if the cells have different types.
inline bool same_type_matrices_agree(KLTable& kl, const std::vector<int>& cell1,
                                     const std::vector<int>& cell2) {
  const WGroup& W = kl.group();
  if (type_of(W.elem(cell1.front())) != type_of(W.elem(cell2.front())))
    throw std::invalid_argument("cells have different types");
  auto b1 = p_tableau_basis_order(W, cell1);
  auto b2 = p_tableau_basis_order(W, cell2);
  std::vector<SignedPerm> e1, e2;
  for (int id : b1) e1.push_back(W.elem(id));
  for (int id : b2) e2.push_back(W.elem(id));
  CellModule m1 = cell_module(kl, cell1, &e1);
  CellModule m2 = cell_module(kl, cell2, &e2);
  for (std::size_t g = 0; g < m1.gen_mats.size(); ++g)
    if (!(m1.gen_mats[g] == m2.gen_mats[g])) return false;
  return true;
}

}  // namespace heckeb
