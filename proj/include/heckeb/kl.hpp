#pragma once

// The Kazhdan--Lusztig basis {C_w} of the two-parameter Hecke algebra of type
// B_n relative to an explicit monomial order: the polynomials p*_{y,w} (all in
// A_{<0}), the bar-invariant correction terms M^s_{z,w}, basis conversions and
// structure constants.
//
// C_w = T_w + sum_{y<w} p*_{y,w} T_y is computed by induction on length: for s
// the first left descent of w and u = sw,
//   C_w = C_s C_u - sum_{z<u, sz<z} M^s_{z,u} C_z,
// and M^s_{y,u} is the bar-invariant element congruent mod A_{<0} to
//   v_s p*_{y,u} - sum_{y<z<u, sz<z} p*_{y,z} M^s_{z,u}.

#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "heckeb/hecke.hpp"
#include "heckeb/laurent.hpp"
#include "heckeb/wgroup.hpp"

namespace heckeb {

// Concurrency: filling (ensure_length/ensure_all) and the memoizing queries
// (m_polynomial, c_gen_product, structure_constants) require exclusive
// access. Once the table is complete, pstar, c_basis_element and the basis
// conversions touch no shared state and may run concurrently.
class KLTable {
 public:
  KLTable(const WGroup& W, MonomialOrder ord) : W_(&W), ord_(ord) {
    if (ord_.sign({1, 0}) <= 0 || ord_.sign({0, 1}) <= 0)
      throw std::invalid_argument("order violates weight positivity");
    pstar_.resize(W_->size());
    done_ = 1;  // C_e = T_e
  }

  const WGroup& group() const { return *W_; }
  const MonomialOrder& order() const { return ord_; }

  /// Computes every C_w with l(w) <= L. Elements are processed in id order,
  /// which refines the length order.
  void ensure_length(int L) {
    while (done_ < W_->size() && W_->len(done_) <= L) compute_next();
  }
  void ensure_all() { ensure_length(W_->rank() * W_->rank()); }
  bool complete() const { return done_ == W_->size(); }

  /// p*_{y,w}; by convention 1 for y = w and 0 whenever y is not below w.
  Laurent2 pstar(int y, int w) {
    if (y == w) return Laurent2(1);
    require(w);
    auto it = pstar_[w].find(y);
    return it == pstar_[w].end() ? Laurent2() : it->second;
  }

  Laurent2 pstar(const SignedPerm& y, const SignedPerm& w) {
    return pstar(W_->id_of(y), W_->id_of(w));
  }

  /// M^s_{y,w} for y < w, sy < y, sw > w.
  Laurent2 m_polynomial(Gen s, int y, int w) {
    require(w);
    if (!W_->is_left_descent(y, s) || W_->is_left_descent(w, s) || !W_->bruhat_leq(y, w) || y == w)
      throw std::invalid_argument("m_polynomial requires y < w, sy < y, sw > w");
    return m_value(s, y, w, closure(w));
  }

  Laurent2 m_polynomial(Gen s, const SignedPerm& y, const SignedPerm& w) {
    return m_polynomial(s, W_->id_of(y), W_->id_of(w));
  }

  /// The T-basis expansion of C_w.
  HeckeElt c_basis_element(int w) {
    require(w);
    HeckeElt h = HeckeElt::unit(W_->elem(w));
    for (const auto& [y, p] : pstar_[w]) h.add(W_->elem(y), p);
    return h;
  }

  HeckeElt c_basis_element(const SignedPerm& w) { return c_basis_element(W_->id_of(w)); }

  /// C_w computed afresh through the given left descent; used to check that
  /// the expansion does not depend on the descent chosen.
  HeckeElt c_basis_element_via(int w, Gen s) {
    if (!W_->is_left_descent(w, s)) throw std::invalid_argument("not a left descent");
    ensure_length(W_->len(w) - 1);
    auto D = expand_via(w, s);
    HeckeElt h = HeckeElt::zero(W_->rank());
    for (const auto& [y, p] : D) h.add(W_->elem(y), p);
    return h;
  }

  /// C_s C_y in the C-basis: the pairs (z, h_{s,y,z}) with nonzero h.
  std::vector<std::pair<int, Laurent2>> c_gen_product(Gen s, int y) {
    ensure_length(W_->len(y) + 1);
    std::vector<std::pair<int, Laurent2>> out;
    if (W_->is_left_descent(y, s)) {
      out.emplace_back(y, gen_param(s, 1) + gen_param(s, -1));
      return out;
    }
    out.emplace_back(W_->left(s, y), Laurent2(1));
    const auto& clos = closure(y);
    for (int z : clos)
      if (W_->is_left_descent(z, s)) {
        Laurent2 M = m_value(s, z, y, clos);
        if (!M.is_zero()) out.emplace_back(z, M);
      }
    return out;
  }

  /// T-basis element re-expressed in the C-basis (and back). The two maps are
  /// exact mutual inverses.
  HeckeElt to_c_basis(const HeckeElt& h) {
    if (h.basis != HeckeElt::Basis::T) throw std::invalid_argument("T-basis required");
    if (h.n != W_->rank()) throw std::invalid_argument("rank mismatch");
    HeckeElt out = HeckeElt::zero(h.n);
    out.basis = HeckeElt::Basis::C;
    out.ord = ord_;
    std::map<int, Laurent2> rest;
    for (const auto& [w, c] : h.coeffs) rest.emplace(W_->id_of(w), c);
    while (!rest.empty()) {
      auto top = std::prev(rest.end());  // id order refines (length, lex window)
      int w = top->first;
      Laurent2 c = top->second;
      rest.erase(top);
      require(w);
      out.add(W_->elem(w), c);
      for (const auto& [y, p] : pstar_[w]) {
        auto [it, inserted] = rest.emplace(y, -(c * p));
        if (!inserted) {
          it->second -= c * p;
          if (it->second.is_zero()) rest.erase(it);
        }
      }
    }
    return out;
  }

  HeckeElt to_t_basis(const HeckeElt& h) {
    if (h.basis != HeckeElt::Basis::C) throw std::invalid_argument("C-basis required");
    if (!(*h.ord == ord_)) throw std::invalid_argument("mixed monomial orders");
    HeckeElt out = HeckeElt::zero(h.n);
    for (const auto& [w, c] : h.coeffs) out += c * c_basis_element(W_->id_of(w));
    return out;
  }

  /// Structure constants of C_x C_y = sum_z h_{x,y,z} C_z.
  std::map<SignedPerm, Laurent2> structure_constants(const SignedPerm& x, const SignedPerm& y) {
    ensure_all();
    HeckeElt prod = mul(c_basis_element(x), c_basis_element(y));
    return to_c_basis(prod).coeffs;
  }

  /// Writes the full table, one line per nonzero p*_{y,w} as
  /// "y_window;w_window;poly" under a descriptive header.
  void save_cache(std::ostream& os) {
    ensure_all();
    os << "# heckeb-kl n=" << W_->rank() << " order=" << ord_.descriptor() << "\n";
    for (int w = 0; w < W_->size(); ++w)
      for (const auto& [y, p] : pstar_[w])
        os << window_string(W_->elem(y)) << ";" << window_string(W_->elem(w)) << ";"
           << p.to_string() << "\n";
    os << "# end\n";
  }

  /// Loads a cache written by save_cache for the same (n, order); returns
  /// false (leaving the table untouched) on any mismatch.
  bool load_cache(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) return false;
    std::ostringstream expect;
    expect << "# heckeb-kl n=" << W_->rank() << " order=" << ord_.descriptor();
    if (header != expect.str()) return false;
    std::vector<std::map<int, Laurent2>> loaded(W_->size());
    std::string line;
    bool terminated = false;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      if (line == "# end") {
        terminated = true;
        break;
      }
      auto c1 = line.find(';');
      auto c2 = line.find(';', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) return false;
      try {
        int y = W_->id_of(parse_window(line.substr(0, c1)));
        int w = W_->id_of(parse_window(line.substr(c1 + 1, c2 - c1 - 1)));
        loaded[w][y] = Laurent2::parse(line.substr(c2 + 1));
      } catch (const std::exception&) {
        return false;
      }
    }
    if (!terminated) return false;
    pstar_ = std::move(loaded);
    done_ = W_->size();
    m_.clear();
    closures_.clear();
    return true;
  }

 private:
  void require(int w) {
    if (w >= done_) ensure_length(W_->len(w));
    if (w >= done_) throw std::logic_error("element not computed");
  }

  void compute_next() {
    const int w = done_;
    auto D = expand_via(w, W_->first_left_descent(w));
    auto it = D.find(w);
    if (it == D.end() || !(it->second == Laurent2(1)))
      throw std::logic_error("leading coefficient of C_w is not 1");
    D.erase(it);
    pstar_[w] = std::move(D);
    ++done_;
  }

  // Full T-expansion of C_w computed through left descent s (including the
  // leading coefficient 1 at w). All shorter elements must be computed.
  std::map<int, Laurent2> expand_via(int w, Gen s) {
    const int u = W_->left(s, w);
    const Laurent2 vs = gen_param(s, 1), vsi = gen_param(s, -1);
    std::map<int, Laurent2> D;
    auto add = [&D](int y, const Laurent2& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = D.emplace(y, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) D.erase(it);
      }
    };
    auto contribute = [&](int y, const Laurent2& p) {
      int sy = W_->left(s, y);
      add(sy, p);
      add(y, (W_->len(sy) < W_->len(y) ? vs : vsi) * p);
    };
    contribute(u, Laurent2(1));
    for (const auto& [y, p] : pstar_[u]) contribute(y, p);
    const auto& clos = closure(u);
    for (int z : clos) {
      if (!W_->is_left_descent(z, s)) continue;
      Laurent2 M = m_value(s, z, u, clos);
      if (M.is_zero()) continue;
      add(z, -M);
      for (const auto& [y, p] : pstar_[z]) add(y, -(M * p));
    }
    return D;
  }

  // Elements that can carry a nonzero M^s_{.,u}: the closure of supp(C_u)
  // under taking supports, every member strictly below u. Sorted by
  // decreasing id (hence decreasing length).
  const std::vector<int>& closure(int u) {
    auto found = closures_.find(u);
    if (found != closures_.end()) return found->second;
    std::vector<int> stack, clos;
    std::map<int, bool> seen;
    for (const auto& [y, p] : pstar_[u]) {
      stack.push_back(y);
      seen[y] = true;
    }
    while (!stack.empty()) {
      int z = stack.back();
      stack.pop_back();
      clos.push_back(z);
      for (const auto& [y, p] : pstar_[z])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(clos.rbegin(), clos.rend());
    return closures_.emplace(u, std::move(clos)).first->second;
  }

  // M^s_{y,u}; clos must be closure(u).
  Laurent2 m_value(Gen s, int y, int u, const std::vector<int>& clos) {
    auto key = std::make_tuple(s, y, u);
    auto found = m_.find(key);
    if (found != m_.end()) return found->second;
    Laurent2 g = gen_param(s, 1) * pstar(y, u);
    for (int z : clos) {
      if (W_->len(z) <= W_->len(y) || !W_->is_left_descent(z, s)) continue;
      Laurent2 p = pstar(y, z);
      if (p.is_zero()) continue;
      g -= p * m_value(s, z, u, clos);
    }
    auto parts = g.split(ord_);
    Laurent2 M = parts.zero + parts.pos + parts.pos.bar();
    m_.emplace(key, M);
    return M;
  }

  const WGroup* W_;
  MonomialOrder ord_;
  int done_;
  std::vector<std::map<int, Laurent2>> pstar_;
  std::map<std::tuple<Gen, int, int>, Laurent2> m_;
  std::map<int, std::vector<int>> closures_;
};

}  // namespace heckeb
