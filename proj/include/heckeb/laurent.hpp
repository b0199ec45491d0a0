#pragma once

// Exact arithmetic in the ring A = Z[V^{±1}, v^{±1}] of Laurent polynomials in
// two indeterminates, together with the total monomial orders on the exponent
// group Z^2 that drive all degree splits elsewhere in the library.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace heckeb {

/// Exponent vector in Z^2: eV is the exponent of V, ev the exponent of v.
struct Gamma {
  int eV = 0;
  int ev = 0;

  friend auto operator<=>(const Gamma&, const Gamma&) = default;
  Gamma operator+(Gamma o) const { return {eV + o.eV, ev + o.ev}; }
  Gamma operator-(Gamma o) const { return {eV - o.eV, ev - o.ev}; }
  Gamma operator-() const { return {-eV, -ev}; }
};

/// A total order on Z^2 compatible with addition. Three kinds are supported:
/// asymptotic (lexicographic, V-exponent dominant), revlex (v-exponent
/// dominant), and weighted lexicographic with exact positive rational weights
/// and first-coordinate tie-break. Under every kind both (1,0) and (0,1) are
/// strictly positive.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Asymptotic, RevLex, Weighted };

  static MonomialOrder asymptotic() { return MonomialOrder(Kind::Asymptotic, 1, 1, 1, 1); }
  static MonomialOrder revlex() { return MonomialOrder(Kind::RevLex, 1, 1, 1, 1); }

  /// Weighted lexicographic order with weights x = xn/xd, y = yn/yd.
  static MonomialOrder weighted(long xn, long xd, long yn, long yd) {
    if (xn <= 0 || xd <= 0 || yn <= 0 || yd <= 0)
      throw std::invalid_argument("weighted order requires positive weights");
    return MonomialOrder(Kind::Weighted, xn, xd, yn, yd);
  }

  Kind kind() const { return kind_; }

  /// Three-way comparison of exponents: negative, zero or positive as a <, =, > b.
  int compare(Gamma a, Gamma b) const {
    switch (kind_) {
      case Kind::Asymptotic:
        if (a.eV != b.eV) return a.eV < b.eV ? -1 : 1;
        if (a.ev != b.ev) return a.ev < b.ev ? -1 : 1;
        return 0;
      case Kind::RevLex:
        if (a.ev != b.ev) return a.ev < b.ev ? -1 : 1;
        if (a.eV != b.eV) return a.eV < b.eV ? -1 : 1;
        return 0;
      case Kind::Weighted: {
        // x*i + y*j over the common denominator xd*yd; fits well inside 128 bits.
        __int128 wa = (__int128)xn_ * yd_ * a.eV + (__int128)yn_ * xd_ * a.ev;
        __int128 wb = (__int128)xn_ * yd_ * b.eV + (__int128)yn_ * xd_ * b.ev;
        if (wa != wb) return wa < wb ? -1 : 1;
        if (a.eV != b.eV) return a.eV < b.eV ? -1 : 1;
        return 0;
      }
    }
    return 0;
  }

  bool less(Gamma a, Gamma b) const { return compare(a, b) < 0; }

  /// Sign of a gamma relative to 0 in this order.
  int sign(Gamma g) const { return compare(g, Gamma{0, 0}); }

  std::string descriptor() const {
    switch (kind_) {
      case Kind::Asymptotic: return "asymptotic";
      case Kind::RevLex: return "revlex";
      case Kind::Weighted: {
        std::ostringstream os;
        os << "weighted:";
        if (xd_ == 1) os << xn_; else os << xn_ << "/" << xd_;
        os << ",";
        if (yd_ == 1) os << yn_; else os << yn_ << "/" << yd_;
        return os.str();
      }
    }
    return "?";
  }

  /// Parses "asymptotic", "revlex" or "weighted:x,y" with x, y positive
  /// integers or fractions "p/q".
  static std::optional<MonomialOrder> parse(std::string_view s) {
    if (s == "asymptotic") return asymptotic();
    if (s == "revlex") return revlex();
    constexpr std::string_view prefix = "weighted:";
    if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = s.substr(prefix.size());
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    long xn, xd, yn, yd;
    if (!parse_rational(rest.substr(0, comma), xn, xd)) return std::nullopt;
    if (!parse_rational(rest.substr(comma + 1), yn, yd)) return std::nullopt;
    if (xn <= 0 || xd <= 0 || yn <= 0 || yd <= 0) return std::nullopt;
    return weighted(xn, xd, yn, yd);
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::Weighted) return true;
    // Same order iff the weight vectors are proportional: x/y agree.
    return (__int128)a.xn_ * a.yd_ * b.xd_ * b.yn_ ==
           (__int128)b.xn_ * b.yd_ * a.xd_ * a.yn_;
  }

 private:
  MonomialOrder(Kind k, long xn, long xd, long yn, long yd)
      : kind_(k), xn_(xn), xd_(xd), yn_(yn), yd_(yd) {}

  static bool parse_rational(std::string_view s, long& num, long& den) {
    den = 1;
    auto slash = s.find('/');
    std::string n1(s.substr(0, slash));
    char* end = nullptr;
    num = std::strtol(n1.c_str(), &end, 10);
    if (end == n1.c_str() || *end != '\0') return false;
    if (slash != std::string_view::npos) {
      std::string n2(s.substr(slash + 1));
      den = std::strtol(n2.c_str(), &end, 10);
      if (end == n2.c_str() || *end != '\0') return false;
    }
    return true;
  }

  Kind kind_;
  long xn_, xd_, yn_, yd_;
};

/// Sparse Laurent polynomial in V and v with arbitrary-precision integer
/// coefficients. No zero coefficient is ever stored, so equality is equality
/// of the term maps. Terms are kept sorted by (eV, ev) independently of any
/// monomial order.
class Laurent2 {
 public:
  using TermMap = std::map<Gamma, mpz_class>;

  Laurent2() = default;
  Laurent2(long c) { if (c != 0) terms_[Gamma{0, 0}] = c; }  // NOLINT: implicit constants are convenient
  Laurent2(const mpz_class& c) { if (c != 0) terms_[Gamma{0, 0}] = c; }

  static Laurent2 monomial(const mpz_class& c, Gamma g) {
    Laurent2 f;
    if (c != 0) f.terms_[g] = c;
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of epsilon^g (zero if absent).
  mpz_class coeff(Gamma g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  Laurent2& operator+=(const Laurent2& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  Laurent2& operator-=(const Laurent2& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  Laurent2& operator*=(const Laurent2& o) { *this = *this * o; return *this; }

  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { a += b; return a; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { a -= b; return a; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    Laurent2 r;
    for (const auto& [ga, ca] : a.terms_)
      for (const auto& [gb, cb] : b.terms_) r.add_term(ga + gb, ca * cb);
    return r;
  }
  Laurent2 operator-() const {
    Laurent2 r;
    for (const auto& [g, c] : terms_) r.terms_[g] = -c;
    return r;
  }

  friend bool operator==(const Laurent2& a, const Laurent2& b) { return a.terms_ == b.terms_; }

  /// The bar involution: epsilon^g -> epsilon^{-g}.
  Laurent2 bar() const {
    Laurent2 r;
    for (const auto& [g, c] : terms_) r.terms_[-g] = c;
    return r;
  }

  bool is_bar_invariant() const { return *this == bar(); }

  /// True iff this is a unit of A, i.e. of the form ±epsilon^g.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  bool is_monomial() const { return terms_.size() == 1; }

  struct Split;

  /// Decomposition f = f_neg + f_zero + f_pos with supports strictly below,
  /// at, and strictly above 0 in the given order. f_zero is an integer.
  Split split(const MonomialOrder& ord) const;

  /// Componentwise minimum of all exponents; requires a nonzero polynomial.
  Gamma min_exponents() const {
    if (terms_.empty()) throw std::logic_error("min_exponents of zero");
    Gamma m = terms_.begin()->first;
    for (const auto& [g, c] : terms_) {
      m.eV = std::min(m.eV, g.eV);
      m.ev = std::min(m.ev, g.ev);
    }
    return m;
  }

  /// Gcd of all integer coefficients (positive; zero polynomial gives 0).
  mpz_class integer_content() const {
    mpz_class g = 0;
    for (const auto& [gamma, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  /// Exact quotient this / d, or nullopt if d does not divide this in A.
  ///
  /// Both operands are shifted by unit monomials so that all exponents are
  /// nonnegative; componentwise minima of exponents are additive under
  /// multiplication, so divisibility is preserved and the reduction below
  /// terminates (leading monomials decrease strictly in the lex well-order
  /// on N^2).
  std::optional<Laurent2> divide_exact(const Laurent2& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero");
    if (is_zero()) return Laurent2();
    const Gamma mf = min_exponents(), md = d.min_exponents();
    Laurent2 rem = *this * monomial(1, -mf);
    const Laurent2 dd = d * monomial(1, -md);
    const auto dlead = std::prev(dd.terms_.end());
    Laurent2 quot;
    while (!rem.is_zero()) {
      const auto rlead = std::prev(rem.terms_.end());
      const Gamma ge = rlead->first - dlead->first;
      if (ge.eV < 0 || ge.ev < 0) return std::nullopt;
      mpz_class qc, rc;
      mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), rlead->second.get_mpz_t(),
                  dlead->second.get_mpz_t());
      if (rc != 0) return std::nullopt;
      Laurent2 t = monomial(qc, ge);
      quot += t;
      rem -= t * dd;
    }
    return quot * monomial(1, mf - md);
  }

  /// Textual form: terms sorted by (eV, ev), each "c*V^i*v^j" with the
  /// coefficient omitted when it is ±1; e.g. "V^1*v^-2 + V^-1*v^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      const bool negative = c < 0;
      if (first) {
        if (negative) os << "-";
        first = false;
      } else {
        os << (negative ? " - " : " + ");
      }
      mpz_class a = abs(c);
      if (a != 1) os << a.get_str() << "*";
      os << "V^" << g.eV << "*v^" << g.ev;
    }
    return os.str();
  }

  /// Parses the format produced by to_string (plus bare integers like "5" or
  /// "-3" and partial monomials like "V^2"). Throws on malformed input.
  static Laurent2 parse(std::string_view s) {
    Laurent2 r;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty polynomial");
    if (s.substr(i) == "0") return r;
    bool first = true;
    while (true) {
      skip_ws();
      if (i == s.size()) {
        if (first) throw std::invalid_argument("empty polynomial");
        break;
      }
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = (s[i] == '-') ? -1 : 1;
        ++i;
        skip_ws();
      } else if (!first) {
        throw std::invalid_argument("expected + or - between terms");
      }
      if (i == s.size()) throw std::invalid_argument("dangling sign in polynomial");
      // term: [int] [*] [V[^int]] [*] [v[^int]]
      mpz_class coeff = 1;
      bool saw_factor = false;
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        coeff = mpz_class(std::string(s.substr(i, j - i)), 10);
        i = j;
        saw_factor = true;
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
      }
      Gamma g{0, 0};
      auto read_power = [&](char name, int& out) {
        if (i >= s.size() || s[i] != name) return;
        ++i;
        out = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t j = i;
          if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
          std::size_t k = j;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == j) throw std::invalid_argument("bad exponent");
          out = std::stoi(std::string(s.substr(i, k - i)));
          i = k;
        }
        saw_factor = true;
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
      };
      read_power('V', g.eV);
      read_power('v', g.ev);
      if (!saw_factor) throw std::invalid_argument("malformed term in polynomial");
      r.add_term(g, sign * coeff);
      first = false;
    }
    return r;
  }

 private:
  void add_term(Gamma g, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

struct Laurent2::Split {
  Laurent2 neg, zero, pos;
};

inline Laurent2::Split Laurent2::split(const MonomialOrder& ord) const {
  Split s;
  for (const auto& [g, c] : terms_) {
    int sg = ord.sign(g);
    (sg < 0 ? s.neg : sg > 0 ? s.pos : s.zero).terms_[g] = c;
  }
  return s;
}

inline Laurent2 Vpow(int k) { return Laurent2::monomial(1, Gamma{k, 0}); }
inline Laurent2 vpow(int k) { return Laurent2::monomial(1, Gamma{0, k}); }

namespace gcd_detail {

// Dense univariate polynomials, ascending coefficients; zero is the empty
// vector. Used only as scratch representation for gcd computations.
using ZPoly = std::vector<mpz_class>;
using ZZPoly = std::vector<ZPoly>;  // polynomial in v with coefficients in Z[V]

inline void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  z_trim(r);
  return r;
}

inline ZPoly z_sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  z_trim(a);
  return a;
}

inline mpz_class z_content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline ZPoly z_divide_scalar(ZPoly p, const mpz_class& d) {
  for (auto& c : p) c /= d;
  return p;
}

// pseudo-remainder of a by b (b nonzero)
inline ZPoly z_prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class lb = b.back();
  while (a.size() > db) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    z_trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline ZPoly z_gcd(ZPoly a, ZPoly b) {
  z_trim(a);
  z_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), z_content(a).get_mpz_t(), z_content(b).get_mpz_t());
  a = z_divide_scalar(std::move(a), z_content(a));
  b = z_divide_scalar(std::move(b), z_content(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = z_prem(a, b);
    if (!r.empty()) r = z_divide_scalar(std::move(r), z_content(r));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& c : a) c *= cont;
  if (a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

inline void zz_trim(ZZPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline ZZPoly zz_scale(const ZZPoly& a, const ZPoly& s) {
  ZZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = z_mul(a[i], s);
  return r;
}

inline ZZPoly zz_sub(ZZPoly a, const ZZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = z_sub(std::move(a[i]), b[i]);
  zz_trim(a);
  return a;
}

inline ZPoly zz_content(const ZZPoly& p) {
  ZPoly g;
  for (const auto& c : p) g = z_gcd(g, c);
  return g;
}

inline ZPoly z_divide_exact(const ZPoly& a, const ZPoly& b) {
  // remainder is known to vanish here
  ZPoly rem = a, quot;
  quot.assign(a.size(), mpz_class(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    mpz_class q = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
    z_trim(rem);
    if (rem.empty()) break;
  }
  z_trim(quot);
  return quot;
}

inline ZZPoly zz_primitive(ZZPoly p) {
  ZPoly c = zz_content(p);
  if (c.empty()) return p;
  for (auto& coef : p)
    if (!coef.empty()) coef = z_divide_exact(coef, c);
  return p;
}

inline ZZPoly zz_prem(ZZPoly a, const ZZPoly& b) {
  const std::size_t db = b.size() - 1;
  const ZPoly& lb = b.back();
  while (a.size() > db && !a.empty()) {
    ZPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    a = zz_scale(a, lb);
    ZZPoly sub(shift + db + 1);
    for (std::size_t i = 0; i <= db; ++i) sub[shift + i] = z_mul(la, b[i]);
    a = zz_sub(std::move(a), sub);
    zz_trim(a);
  }
  return a;
}

inline ZZPoly zz_gcd(ZZPoly a, ZZPoly b) {
  zz_trim(a);
  zz_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  ZPoly cont = z_gcd(zz_content(a), zz_content(b));
  a = zz_primitive(std::move(a));
  b = zz_primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZZPoly r = zz_prem(a, b);
    r = zz_primitive(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  return zz_scale(a, cont);
}

}  // namespace gcd_detail

/// Gcd in A, well-defined up to a unit. The representative returned has
/// nonnegative exponents, no monomial factor, and positive leading
/// coefficient.
inline Laurent2 laurent_gcd(const Laurent2& a, const Laurent2& b) {
  if (a.is_zero() && b.is_zero()) return Laurent2();
  if (a.is_zero() || b.is_zero()) {
    const Laurent2& f = a.is_zero() ? b : a;
    auto q = f.divide_exact(Laurent2::monomial(1, f.min_exponents()));
    return std::prev(q->terms().end())->second < 0 ? -*q : *q;
  }
  auto to_zz = [](const Laurent2& f) {
    Gamma m = f.min_exponents();
    gcd_detail::ZZPoly p;
    for (const auto& [g, c] : f.terms()) {
      std::size_t dv = static_cast<std::size_t>(g.ev - m.ev);
      std::size_t dV = static_cast<std::size_t>(g.eV - m.eV);
      if (p.size() <= dv) p.resize(dv + 1);
      if (p[dv].size() <= dV) p[dv].resize(dV + 1);
      p[dv][dV] = c;
    }
    return p;
  };
  gcd_detail::ZZPoly g = gcd_detail::zz_gcd(to_zz(a), to_zz(b));
  Laurent2 r;
  for (std::size_t dv = 0; dv < g.size(); ++dv)
    for (std::size_t dV = 0; dV < g[dv].size(); ++dV)
      if (g[dv][dV] != 0)
        r += Laurent2::monomial(g[dv][dV], Gamma{static_cast<int>(dV), static_cast<int>(dv)});
  if (std::prev(r.terms().end())->second < 0) r = -r;
  return r;
}

}  // namespace heckeb
