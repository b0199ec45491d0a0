#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heckeb/hecke.hpp"
#include "test_util.hpp"

using namespace heckeb;
using testutil::T;

namespace {

HeckeElt word_product(const std::vector<Gen>& word, int n) {
  HeckeElt acc = T(SignedPerm(n));
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_gen_left(*it, acc);
  return acc;
}

HeckeElt random_elt(std::mt19937& rng, const std::vector<SignedPerm>& pool) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> expd(-2, 2), coefd(-3, 3);
  HeckeElt h = HeckeElt::zero(pool.front().rank());
  for (int i = 0; i < 3; ++i) {
    int c = coefd(rng);
    if (c == 0) c = 1;
    h.add(pool[pick(rng)], Laurent2::monomial(c, {expd(rng), expd(rng)}));
  }
  return h;
}

}  // namespace

TEST_CASE("generator multiplication", "[hecke]") {
  const Laurent2 V = Vpow(1), Vi = Vpow(-1), v = vpow(1), vi = vpow(-1);
  CHECK(mul(T("t", 3), T(SignedPerm(3))) == T("t", 3));
  CHECK(mul(T("t", 3), T("t", 3)) == T(SignedPerm(3)) + (V - Vi) * T("t", 3));
  CHECK(mul(T("s1", 3), T("s2 t", 3)) == T("s1 s2 t", 3));
  CHECK_THROWS(mul_gen_left(3, T(SignedPerm(3))));
}

TEST_CASE("defining relations", "[hecke]") {
  const int n = 3;
  const HeckeElt one = T(SignedPerm(n));
  // quadratic: (T_s - v_s)(T_s + v_s^{-1}) = 0
  for (Gen s = 0; s < n; ++s) {
    HeckeElt Ts = word_product({s}, n);
    HeckeElt lhs = mul(Ts - gen_param(s, 1) * one, Ts + gen_param(s, -1) * one);
    CHECK(lhs.is_zero());
  }
  // braid: tst s1 has order 4, s1 s2 order 3, t s2 commute
  CHECK(word_product({0, 1, 0, 1}, n) == word_product({1, 0, 1, 0}, n));
  CHECK(word_product({1, 2, 1}, n) == word_product({2, 1, 2}, n));
  CHECK(word_product({0, 2}, n) == word_product({2, 0}, n));
}

TEST_CASE("products agree across reduced words", "[hecke]") {
  for (const auto& w : enumerate_group(3)) {
    auto w1 = canonical_word(w);
    auto w2 = testutil::highest_descent_word(w);
    CHECK(from_word(w2, 3) == w);
    CHECK(word_product(w1, 3) == word_product(w2, 3));
    CHECK(word_product(w1, 3) == T(w));
  }
}

TEST_CASE("associativity", "[hecke]") {
  CHECK(mul(mul(T("t", 3), T("s1", 3)), T("t", 3)) ==
        mul(T("t", 3), mul(T("s1", 3), T("t", 3))));
  auto pool = enumerate_group(3);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    HeckeElt a = random_elt(rng, pool), b = random_elt(rng, pool), c = random_elt(rng, pool);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, T(SignedPerm(3))) == a);
  }
}

TEST_CASE("T-basis inverses", "[hecke]") {
  CHECK(invert_T(SignedPerm(3)) == T(SignedPerm(3)));
  CHECK(invert_T(from_word("t", 3)) ==
        T("t", 3) - (Vpow(1) - Vpow(-1)) * T(SignedPerm(3)));
  for (const auto& w : enumerate_group(3)) {
    CHECK(mul(invert_T(w), T(w)) == T(SignedPerm(3)));
    CHECK(mul(T(w), invert_T(w)) == T(SignedPerm(3)));
  }
}

TEST_CASE("bar involution", "[hecke]") {
  CHECK(bar_involution(T(SignedPerm(3))) == T(SignedPerm(3)));
  CHECK(bar_involution(T("t", 3)) == invert_T(from_word("t", 3)));

  auto pool = enumerate_group(3);
  std::mt19937 rng(9);
  for (int i = 0; i < 20; ++i) {
    HeckeElt a = random_elt(rng, pool);
    CHECK(bar_involution(bar_involution(a)) == a);
    HeckeElt b = random_elt(rng, pool);
    CHECK(bar_involution(mul(a, b)) == mul(bar_involution(a), bar_involution(b)));
  }
  // on up to 3 random basis elements
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  for (int i = 0; i < 20; ++i) {
    HeckeElt p = mul(mul(T(pool[pick(rng)]), T(pool[pick(rng)])), T(pool[pick(rng)]));
    HeckeElt q = mul(mul(bar_involution(T(pool[pick(rng)])), p), T(SignedPerm(3)));
    CHECK(bar_involution(bar_involution(q)) == q);
  }
}

TEST_CASE("flat anti-automorphism", "[hecke]") {
  CHECK(flat(T(SignedPerm(3))) == T(SignedPerm(3)));
  CHECK(flat(T("s1 s2", 3)) == T("s2 s1", 3));
  auto pool = enumerate_group(3);
  std::mt19937 rng(21);
  for (int i = 0; i < 20; ++i) {
    HeckeElt a = random_elt(rng, pool), b = random_elt(rng, pool);
    CHECK(flat(mul(a, b)) == mul(flat(b), flat(a)));
    CHECK(flat(flat(a)) == a);
  }
}

TEST_CASE("compatibility guards", "[hecke]") {
  HeckeElt a = T(SignedPerm(2)), b = T(SignedPerm(3));
  CHECK_THROWS(a + b);
  CHECK_THROWS(mul(a, b));
  HeckeElt c = T(SignedPerm(3));
  c.basis = HeckeElt::Basis::C;
  c.ord = MonomialOrder::asymptotic();
  CHECK_THROWS(b + c);
  CHECK_THROWS(mul_gen_left(0, c));
}
