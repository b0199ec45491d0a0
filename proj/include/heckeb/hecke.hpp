#pragma once

// Sparse elements of the generic two-parameter Iwahori--Hecke algebra of type
// B_n in the T-basis: generator multiplication, general products, T-basis
// inverses, the bar involution and the flat anti-automorphism.
//
// Parameters: v_t = V and v_{s_i} = v, with multiplication
//   T_s T_w = T_{sw}                          if l(sw) > l(w),
//   T_s T_w = T_{sw} + (v_s - v_s^{-1}) T_w   if l(sw) < l(w).

#include <map>
#include <optional>
#include <stdexcept>

#include "heckeb/laurent.hpp"
#include "heckeb/signed_perm.hpp"

namespace heckeb {

/// v_s^e for generator s.
inline Laurent2 gen_param(Gen s, int e = 1) { return s == 0 ? Vpow(e) : vpow(e); }

struct HeckeElt {
  enum class Basis { T, C };

  int n = 0;
  Basis basis = Basis::T;
  std::optional<MonomialOrder> ord;  // present iff basis == C
  std::map<SignedPerm, Laurent2> coeffs;

  static HeckeElt zero(int n) { return HeckeElt{n, Basis::T, std::nullopt, {}}; }

  static HeckeElt unit(const SignedPerm& w) {
    HeckeElt h = zero(w.rank());
    h.coeffs.emplace(w, Laurent2(1));
    return h;
  }

  static HeckeElt unit(const SignedPerm& w, const Laurent2& c) {
    HeckeElt h = zero(w.rank());
    h.add(w, c);
    return h;
  }

  bool is_zero() const { return coeffs.empty(); }

  void add(const SignedPerm& w, const Laurent2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  Laurent2 coeff(const SignedPerm& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? Laurent2() : it->second;
  }

  void check_compatible(const HeckeElt& o) const {
    if (n != o.n) throw std::invalid_argument("rank mismatch");
    if (basis != o.basis) throw std::invalid_argument("basis mismatch");
    if (basis == Basis::C && !(*ord == *o.ord))
      throw std::invalid_argument("mixed monomial orders");
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.coeffs) add(w, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.coeffs) add(w, -c);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { a += b; return a; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { a -= b; return a; }

  friend HeckeElt operator*(const Laurent2& c, const HeckeElt& h) {
    HeckeElt r = h;
    r.coeffs.clear();
    for (const auto& [w, a] : h.coeffs) r.add(w, c * a);
    return r;
  }

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    a.check_compatible(b);
    return a.coeffs == b.coeffs;
  }
};

/// T_s * h for h in the T-basis.
inline HeckeElt mul_gen_left(Gen s, const HeckeElt& h) {
  if (h.basis != HeckeElt::Basis::T) throw std::invalid_argument("T-basis required");
  if (s < 0 || s >= h.n) throw std::invalid_argument("generator index out of rank");
  HeckeElt r = HeckeElt::zero(h.n);
  const Laurent2 qs = gen_param(s, 1) - gen_param(s, -1);
  for (const auto& [w, c] : h.coeffs) {
    SignedPerm sw = left_mul_gen(s, w);
    if (length(sw) > length(w)) {
      r.add(sw, c);
    } else {
      r.add(sw, c);
      r.add(w, qs * c);
    }
  }
  return r;
}

/// T_w * h via a reduced word of w, applied right to left.
inline HeckeElt mul_basis_left(const SignedPerm& w, const HeckeElt& h) {
  auto word = canonical_word(w);
  HeckeElt acc = h;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_gen_left(*it, acc);
  return acc;
}

/// Product in the T-basis.
inline HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  a.check_compatible(b);
  if (a.basis != HeckeElt::Basis::T) throw std::invalid_argument("T-basis required");
  HeckeElt r = HeckeElt::zero(a.n);
  for (const auto& [w, c] : a.coeffs) r += c * mul_basis_left(w, b);
  return r;
}

/// The inverse of T_w, expanded in the T-basis. Built from
/// T_s^{-1} = T_s - (v_s - v_s^{-1}) T_e along a reduced word.
inline HeckeElt invert_T(const SignedPerm& w) {
  HeckeElt acc = HeckeElt::unit(SignedPerm(w.rank()));
  for (Gen s : canonical_word(w)) {
    const Laurent2 qs = gen_param(s, 1) - gen_param(s, -1);
    acc = mul_gen_left(s, acc) - qs * acc;
  }
  return acc;
}

/// The bar involution: bar(sum a_y T_y) = sum bar(a_y) (T_{y^{-1}})^{-1}.
inline HeckeElt bar_involution(const HeckeElt& h) {
  if (h.basis != HeckeElt::Basis::T) throw std::invalid_argument("T-basis required");
  HeckeElt r = HeckeElt::zero(h.n);
  for (const auto& [y, c] : h.coeffs) r += c.bar() * invert_T(y.inverse());
  return r;
}

/// The A-linear anti-automorphism T_w -> T_{w^{-1}}.
inline HeckeElt flat(const HeckeElt& h) {
  HeckeElt r = h;
  r.coeffs.clear();
  for (const auto& [w, c] : h.coeffs) r.add(w.inverse(), c);
  return r;
}

}  // namespace heckeb
