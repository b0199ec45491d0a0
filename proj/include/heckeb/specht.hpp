#pragma once

// The bridge between Specht modules and cell modules in the asymptotic case:
// Murphy elements x_lambda, membership in the two-sided ideals N^lambda and
// N-hat^lambda, the change-of-basis matrix of the canonical isomorphism, and
// Specht generator matrices over A.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "heckeb/bipartition.hpp"
#include "heckeb/cells.hpp"
#include "heckeb/kl.hpp"
#include "heckeb/linalg.hpp"

namespace heckeb {

namespace specht_detail {
inline void require_asymptotic(const KLTable& kl) {
  if (!(kl.order() == MonomialOrder::asymptotic()))
    throw std::invalid_argument("asymptotic order required");
}
}  // namespace specht_detail

/// The Murphy element x_lambda, in the T-basis:
///   x_lambda = V^{-l} v^{l(sigma_lambda) - l(l-1)} T_{sigma_l} C_{a_l sigma_lambda}.
/// The mirror route C_{sigma_lambda a_l} T_{sigma_l} is computed as well and
/// must give the same element.
inline HeckeElt murphy_element(const Bipartition& lam, KLTable& kl) {
  specht_detail::require_asymptotic(kl);
  const int n = lam.n(), l = lam.l();
  if (n != kl.group().rank()) throw std::invalid_argument("rank mismatch");
  const SpecialElements sp = special_elements(n, l);
  const SignedPerm sig = sigma_lambda(lam);
  HeckeElt left = mul_basis_left(sp.sigma, kl.c_basis_element(sp.a * sig));
  HeckeElt right = mul(kl.c_basis_element(sig * sp.a), HeckeElt::unit(sp.sigma));
  if (!(left == right)) throw std::logic_error("murphy element: the two product routes differ");
  const Laurent2 scalar =
      Laurent2::monomial(1, Gamma{-l, length(sig) - l * (l - 1)});
  return scalar * left;
}

/// Membership in N^lambda: every C-basis support element must have type
/// (nu1|nu2) with (lambda1|lambda2) dominated by (nu2|nu1*). With strict set,
/// equality of bipartitions is excluded as well (the ideal N-hat^lambda).
inline bool in_n_ideal(const HeckeElt& h, const Bipartition& lam, KLTable& kl,
                       bool strict = false) {
  specht_detail::require_asymptotic(kl);
  HeckeElt c = h.basis == HeckeElt::Basis::C ? h : kl.to_c_basis(h);
  for (const auto& [w, coef] : c.coeffs) {
    Bipartition nu = type_of(w);
    Bipartition target{nu.second, conjugate_partition(nu.first)};
    if (!dominance_leq(lam, target)) return false;
    if (strict && target == lam) return false;
  }
  return true;
}

/// Standard bitableaux of shape lambda ordered by d(t) in (length, lex
/// window) order; the ordering that makes the transition matrix
/// unitriangular.
inline std::vector<Bitableau> tableaux_by_d(const Bipartition& lam, const WGroup& W) {
  std::vector<std::pair<int, Bitableau>> keyed;
  for (const auto& t : standard_bitableaux(lam)) keyed.emplace_back(W.id_of(d_of(t)), t);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Bitableau> out;
  for (auto& [id, t] : keyed) out.push_back(std::move(t));
  return out;
}

/// The matrix of the canonical isomorphism from the Specht module onto the
/// distinguished cell module, both in their standard bases.
struct SpechtCellMatrix {
  Bipartition shape;
  std::vector<Bitableau> tabs;   // row/column index order
  std::vector<int> cell_basis;   // ids of d(t) sigma_lambda a_l, same order
  LaurentMatrix g;               // upper unitriangular
};

/// Column t of the matrix: expand T_{d(t)} C_{sigma_lambda a_l} in the
/// C-basis and read off the coordinates at C_{d(s) sigma_lambda a_l}. Any
/// support not matching a standard tableau must lie outside the cell.
inline SpechtCellMatrix g_matrix(const Bipartition& lam, KLTable& kl,
                                 const CellPartition* left_cells = nullptr) {
  specht_detail::require_asymptotic(kl);
  const WGroup& W = kl.group();
  if (lam.n() != W.rank()) throw std::invalid_argument("rank mismatch");
  SpechtCellMatrix out;
  out.shape = lam;
  out.tabs = tableaux_by_d(lam, W);
  const SignedPerm core = sigma_lambda(lam) * special_elements(W.rank(), lam.l()).a;
  const int core_id = W.id_of(core);
  std::vector<char> in_cell(W.size(), 0);
  if (left_cells) {
    for (int id : left_cells->cells[left_cells->cell_of[core_id]]) in_cell[id] = 1;
  } else {
    for (int id : left_cell_of(kl, core)) in_cell[id] = 1;
  }
  const int d = static_cast<int>(out.tabs.size());
  std::vector<int> pos(W.size(), -1);
  for (int i = 0; i < d; ++i) {
    int id = W.id_of(d_of(out.tabs[i]) * core);
    out.cell_basis.push_back(id);
    pos[id] = i;
  }
  const HeckeElt c_core = kl.c_basis_element(core_id);
  out.g.assign(d, std::vector<Laurent2>(d));
  for (int j = 0; j < d; ++j) {
    HeckeElt prod = mul_basis_left(d_of(out.tabs[j]), c_core);
    HeckeElt cexp = kl.to_c_basis(prod);
    for (const auto& [w, c] : cexp.coeffs) {
      int id = W.id_of(w);
      if (pos[id] >= 0) {
        out.g[pos[id]][j] = c;
      } else if (in_cell[id]) {
        throw std::logic_error("support inside the cell not indexed by a standard tableau");
      }
    }
  }
  return out;
}

/// Inverse of an upper unitriangular matrix, over A.
inline LaurentMatrix unitriangular_inverse(const LaurentMatrix& G) {
  const int d = static_cast<int>(G.size());
  LaurentMatrix X = identity_matrix(d);
  for (int j = 0; j < d; ++j)
    for (int i = j - 1; i >= 0; --i) {
      Laurent2 s;
      for (int k = i + 1; k <= j; ++k) s += G[i][k] * X[k][j];
      X[i][j] = -s;
    }
  return X;
}

/// Action of the generators on the Specht standard basis, as
/// G^{-1} rho_cell(T_g) G; entries remain in A by unitriangularity.
inline std::vector<LaurentMatrix> specht_matrices(const Bipartition& lam, KLTable& kl,
                                                  const CellPartition* left_cells = nullptr) {
  SpechtCellMatrix G = g_matrix(lam, kl, left_cells);
  const WGroup& W = kl.group();
  std::vector<SignedPerm> basis;
  for (int id : G.cell_basis) basis.push_back(W.elem(id));
  const SignedPerm core = sigma_lambda(lam) * special_elements(W.rank(), lam.l()).a;
  const int core_id = W.id_of(core);
  std::vector<int> cell = left_cells
                              ? left_cells->cells[left_cells->cell_of[core_id]]
                              : left_cell_of(kl, core);
  CellModule mod = cell_module(kl, cell, &basis);
  LaurentMatrix Ginv = unitriangular_inverse(G.g);
  std::vector<LaurentMatrix> out;
  for (Gen s = 0; s < W.rank(); ++s)
    out.push_back(mat_mul(Ginv, mat_mul(mod.gen_mats[s], G.g)));
  return out;
}

/// Coordinates of phi_lambda: Specht standard coordinates to cell-module
/// coordinates, i.e. multiplication by G.
inline std::vector<Laurent2> phi_lambda(const std::vector<Laurent2>& coords,
                                        const SpechtCellMatrix& G) {
  const int d = static_cast<int>(G.g.size());
  if (static_cast<int>(coords.size()) != d) throw std::invalid_argument("dimension mismatch");
  std::vector<Laurent2> out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i] += G.g[i][j] * coords[j];
  return out;
}

}  // namespace heckeb
