#pragma once

// Exact linear algebra over A for Hom-space computations: fraction-free
// (Bareiss) Gauss--Jordan elimination and nullspace extraction. All divisions
// are exact in A; a failed division signals a logic error.

#include <stdexcept>
#include <vector>

#include "heckeb/laurent.hpp"

namespace heckeb {

using LaurentMatrix = std::vector<std::vector<Laurent2>>;

inline LaurentMatrix identity_matrix(int d) {
  LaurentMatrix I(d, std::vector<Laurent2>(d));
  for (int i = 0; i < d; ++i) I[i][i] = Laurent2(1);
  return I;
}

inline LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  const int m = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int n = k ? static_cast<int>(b[0].size()) : 0;
  LaurentMatrix r(m, std::vector<Laurent2>(n));
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

inline LaurentMatrix mat_sub(LaurentMatrix a, const LaurentMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
  return a;
}

inline bool mat_is_zero(const LaurentMatrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

inline Laurent2 mat_det(const LaurentMatrix& a) {
  // cofactor expansion; only used on small matrices
  const int d = static_cast<int>(a.size());
  if (d == 0) return Laurent2(1);
  if (d == 1) return a[0][0];
  Laurent2 det;
  for (int j = 0; j < d; ++j) {
    if (a[0][j].is_zero()) continue;
    LaurentMatrix minor(d - 1, std::vector<Laurent2>(d - 1));
    for (int r = 1; r < d; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c)
        if (c != j) minor[r - 1][cc++] = a[r][c];
    }
    Laurent2 term = a[0][j] * mat_det(minor);
    if (j % 2) det -= term; else det += term;
  }
  return det;
}

struct Echelon {
  LaurentMatrix mat;            // after fraction-free Gauss--Jordan
  std::vector<int> pivot_cols;  // column of the pivot in row r
  Laurent2 pivot;               // common value of all pivot entries
  int rank = 0;
};

/// One-step fraction-free Gauss--Jordan: at every step the whole pivot column
/// is eliminated and every updated entry is divided by the previous pivot,
/// which is an exact division in the ring. Afterwards each pivot row carries
/// the single nonzero entry `pivot` in its pivot column.
inline Echelon ff_gauss_jordan(LaurentMatrix A) {
  Echelon e;
  const int m = static_cast<int>(A.size());
  const int k = m ? static_cast<int>(A[0].size()) : 0;
  Laurent2 prev(1);
  int r = 0;
  for (int col = 0; col < k && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (!A[i][col].is_zero()) { piv = i; break; }
    if (piv == -1) continue;
    std::swap(A[r], A[piv]);
    const Laurent2 p = A[r][col];
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const Laurent2 f = A[i][col];
      for (int j = 0; j < k; ++j) {
        if (j == col) { A[i][j] = Laurent2(); continue; }
        Laurent2 num = p * A[i][j] - f * A[r][j];
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        A[i][j] = std::move(*q);
      }
    }
    // the uniform update has rescaled every earlier pivot entry to p as well
    prev = p;
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.mat = std::move(A);
  e.pivot = prev;
  e.rank = r;
  return e;
}

/// Basis of the right nullspace {x : A x = 0}, one vector per free column,
/// with entries in A.
inline std::vector<std::vector<Laurent2>> nullspace(const LaurentMatrix& A) {
  const int k = A.empty() ? 0 : static_cast<int>(A[0].size());
  Echelon e = ff_gauss_jordan(A);
  std::vector<bool> is_pivot(k, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Laurent2>> basis;
  for (int f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Laurent2> x(k);
    x[f] = e.pivot;
    for (int r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = -e.mat[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Divides out the full common content of the entries: the polynomial gcd,
/// the componentwise-minimal monomial, and the overall sign (the leading
/// coefficient of the first nonzero entry ends up positive). The result is a
/// canonical generator of the line spanned by the input, up to nothing.
inline void normalize_content(std::vector<Laurent2>& entries) {
  Laurent2 g;
  for (const auto& f : entries) g = laurent_gcd(g, f);
  if (g.is_zero()) return;
  for (auto& f : entries) {
    auto q = f.divide_exact(g);
    if (!q) throw std::logic_error("content normalization: inexact division");
    f = std::move(*q);
  }
  Gamma mins{0, 0};
  int sign = 1;
  bool any = false;
  for (const auto& f : entries) {
    if (f.is_zero()) continue;
    Gamma m = f.min_exponents();
    if (!any) {
      mins = m;
      sign = std::prev(f.terms().end())->second < 0 ? -1 : 1;
      any = true;
    } else {
      mins.eV = std::min(mins.eV, m.eV);
      mins.ev = std::min(mins.ev, m.ev);
    }
  }
  Laurent2 divisor = Laurent2::monomial(sign, mins);
  for (auto& f : entries) f = *f.divide_exact(divisor);
}

}  // namespace heckeb
