#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "heckeb/signed_perm.hpp"
#include "heckeb/wgroup.hpp"

using namespace heckeb;

namespace {

SignedPerm W(std::vector<int> win) { return SignedPerm::from_window(std::move(win)); }

// Every product of every generator word of length <= maxlen.
void for_each_word(int n, int maxlen, const std::function<void(const std::vector<Gen>&)>& fn) {
  std::vector<Gen> word;
  std::function<void()> rec = [&] {
    fn(word);
    if (static_cast<int>(word.size()) == maxlen) return;
    for (Gen g = 0; g < n; ++g) {
      word.push_back(g);
      rec();
      word.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("words and windows", "[signed_perm]") {
  CHECK(from_word("t", 3) == W({-1, 2, 3}));
  CHECK(from_word("s2 t", 3) == W({-1, 3, 2}));
  CHECK(length(from_word("s2 t", 3)) == 2);
  CHECK(from_word("", 3) == SignedPerm(3));
  CHECK(from_word("e", 3) == SignedPerm(3));
  CHECK_THROWS(from_word("s3", 3));
  CHECK_THROWS(from_word("q", 3));
  CHECK_THROWS(parse_word("s0", 3));

  CHECK(parse_window("[-1,3,2]") == W({-1, 3, 2}));
  CHECK(window_string(W({-1, 3, 2})) == "[-1,3,2]");
  CHECK_THROWS(parse_window("[1,1]"));
}

TEST_CASE("length", "[signed_perm]") {
  CHECK(length(SignedPerm(3)) == 0);
  CHECK(length(from_word("t", 3)) == 1);
  CHECK(length(from_word("t s1 t", 3)) == 3);  // a_2 is reduced

  // l(product) <= word length, with matching parity, over all short words in W_3;
  // the canonical word realizes the length exactly.
  for_each_word(3, 5, [](const std::vector<Gen>& word) {
    SignedPerm w = from_word(word, 3);
    int l = length(w);
    CHECK(l <= static_cast<int>(word.size()));
    CHECK((static_cast<int>(word.size()) - l) % 2 == 0);
  });
  for (const auto& w : enumerate_group(3)) {
    auto cw = canonical_word(w);
    CHECK(static_cast<int>(cw.size()) == length(w));
    CHECK(from_word(cw, 3) == w);
  }
}

TEST_CASE("t-length", "[signed_perm]") {
  CHECK(t_length(from_word("s2 t", 3)) == 1);
  CHECK(t_length(SignedPerm(3)) == 0);
  for (int n : {3, 4})
    for (int l = 0; l <= n; ++l) CHECK(t_length(special_elements(n, l).a) == l);

  // negative-entry count agrees with the min and max number of t's over all
  // reduced words, explored through the descent DAG of W_3
  std::map<SignedPerm, std::pair<int, int>> memo;  // (minT, maxT)
  std::function<std::pair<int, int>(const SignedPerm&)> trange =
      [&](const SignedPerm& w) -> std::pair<int, int> {
    if (w.is_identity()) return {0, 0};
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    int lo = 1 << 20, hi = -1;
    for (Gen g : descents(w, Side::Left)) {
      auto [a, b] = trange(left_mul_gen(g, w));
      int inc = g == 0 ? 1 : 0;
      lo = std::min(lo, a + inc);
      hi = std::max(hi, b + inc);
    }
    return memo[w] = {lo, hi};
  };
  for (const auto& w : enumerate_group(3)) {
    auto [lo, hi] = trange(w);
    CHECK(lo == t_length(w));
    CHECK(hi == t_length(w));
  }
  for (const auto& w : enumerate_group(4)) {
    int neg = 0;
    for (int x : w.window())
      if (x < 0) ++neg;
    CHECK(t_length(w) == neg);
  }
}

TEST_CASE("descents", "[signed_perm]") {
  CHECK(descents(from_word("t", 3), Side::Right) == std::vector<Gen>{0});
  CHECK(descents(from_word("s2 t", 3), Side::Left) == std::vector<Gen>({0, 2}));
  CHECK(descents(SignedPerm(3), Side::Left).empty());
  CHECK(descents(SignedPerm(3), Side::Right).empty());

  for (const auto& w : enumerate_group(3))
    for (Gen g = 0; g < 3; ++g) {
      CHECK(is_right_descent(w, g) == (length(right_mul_gen(w, g)) < length(w)));
      CHECK(is_left_descent(w, g) == (length(left_mul_gen(g, w)) < length(w)));
      CHECK(is_left_descent(w, g) == is_right_descent(w.inverse(), g));
    }
}

TEST_CASE("bruhat order", "[signed_perm]") {
  auto all3 = enumerate_group(3);
  for (const auto& w : all3) CHECK(bruhat_leq(SignedPerm(3), w));
  CHECK(bruhat_leq(from_word("s2 t", 3), from_word("s1 s2 t", 3)));

  // subword oracle: y <= w iff y is the product of a subsequence of a fixed
  // reduced word of w
  for (const auto& w : all3) {
    auto word = canonical_word(w);
    const int k = static_cast<int>(word.size());
    std::set<SignedPerm> below;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<Gen> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(word[i]);
      below.insert(from_word(sub, 3));
    }
    for (const auto& y : all3) {
      CHECK(bruhat_leq(y, w) == (below.count(y) > 0));
      if (length(y) > length(w)) CHECK_FALSE(bruhat_leq(y, w));
    }
  }
}

TEST_CASE("enumeration", "[signed_perm]") {
  CHECK(enumerate_group(2).size() == 8);
  CHECK(enumerate_group(3).size() == 48);
  CHECK(enumerate_group(4).size() == 384);
  auto all = enumerate_group(3);
  CHECK(all.front().is_identity());
  CHECK(std::set<SignedPerm>(all.begin(), all.end()).size() == all.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    int a = length(all[i - 1]), b = length(all[i]);
    CHECK((a < b || (a == b && all[i - 1].window() < all[i].window())));
  }
  CHECK_THROWS(enumerate_group(0));
  CHECK_THROWS(enumerate_group(8));
}

TEST_CASE("special elements", "[signed_perm]") {
  auto s0 = special_elements(3, 0);
  CHECK(s0.a.is_identity());
  CHECK(s0.sigma.is_identity());
  CHECK(s0.w.is_identity());

  auto s1 = special_elements(3, 1);
  CHECK(s1.a == from_word("t", 3));
  CHECK(s1.sigma.is_identity());
  CHECK(s1.w == from_word("t", 3));

  auto s2 = special_elements(3, 2);
  CHECK(s2.a == from_word("t s1 t", 3));
  CHECK(s2.sigma == from_word("s1", 3));
  CHECK(length(s2.w) == 4);

  for (int n : {2, 3, 4})
    for (int l = 0; l <= n; ++l) {
      auto sp = special_elements(n, l);
      CHECK(sp.a == sp.w * sp.sigma);
      CHECK(length(sp.a) == l * (l + 1) / 2);
      CHECK(sp.a * sp.a == SignedPerm(n));
    }
}

TEST_CASE("distinguished coset representatives", "[signed_perm]") {
  CHECK(coset_reps_Y(3, 0) == std::vector<SignedPerm>{SignedPerm(3)});
  CHECK(coset_reps_Y(3, 1).size() == 3);

  for (int n : {2, 3, 4})
    for (int l = 0; l <= n; ++l) {
      auto Y = coset_reps_Y(n, l);
      // |Y| = C(n, l)
      long binom = 1;
      for (int i = 0; i < l; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(static_cast<long>(Y.size()) == binom);
      // length additivity over the Young subgroup
      std::vector<SignedPerm> young;
      for (const auto& w : enumerate_group(n)) {
        if (t_length(w) != 0) continue;
        bool blocks = true;
        for (int i = 0; i < l; ++i)
          if (w.window()[i] > l) blocks = false;
        if (blocks) young.push_back(w);
      }
      for (const auto& y : Y)
        for (const auto& sig : young) CHECK(length(y * sig) == length(y) + length(sig));
      // Y * a_l consists of the t-length-l elements minimal in their coset
      auto a_l = special_elements(n, l).a;
      for (const auto& y : Y) CHECK(t_length(y * a_l) == l);
    }
}

TEST_CASE("clifford normal form", "[signed_perm]") {
  for (int l = 0; l <= 3; ++l) {
    auto cf = clifford_form(special_elements(3, l).a);
    CHECK(cf.a.is_identity());
    CHECK(cf.l == l);
    CHECK(cf.sigma.is_identity());
    CHECK(cf.b.is_identity());
  }
  auto cf = clifford_form(from_word("s2 t", 3));
  CHECK(cf.a.is_identity());
  CHECK(cf.l == 1);
  CHECK(cf.sigma == from_word("s2", 3));
  CHECK(cf.b.is_identity());

  for (int n : {3, 4}) {
    auto Ysets = std::map<int, std::set<SignedPerm>>{};
    for (int l = 0; l <= n; ++l) {
      auto Y = coset_reps_Y(n, l);
      Ysets[l] = std::set<SignedPerm>(Y.begin(), Y.end());
    }
    for (const auto& w : enumerate_group(n)) {
      auto f = clifford_form(w);
      CHECK(f.l == t_length(w));
      auto a_l = special_elements(n, f.l).a;
      CHECK(f.a * a_l * f.sigma * f.b.inverse() == w);
      CHECK(Ysets[f.l].count(f.a) == 1);
      CHECK(Ysets[f.l].count(f.b) == 1);
      CHECK(t_length(f.sigma) == 0);
      for (int i = 0; i < f.l; ++i) CHECK(f.sigma.window()[i] <= f.l);
      CHECK(length(w) == length(f.a) + length(a_l) + length(f.sigma) + length(f.b));
    }
  }
}

TEST_CASE("group context tables", "[signed_perm]") {
  WGroup G(3);
  CHECK(G.size() == 48);
  CHECK(G.elem(G.identity()).is_identity());
  for (int id = 0; id < G.size(); ++id) {
    const auto& w = G.elem(id);
    CHECK(G.id_of(w) == id);
    CHECK(G.len(id) == length(w));
    CHECK(G.tlen(id) == t_length(w));
    CHECK(G.elem(G.inv(id)) == w.inverse());
    for (Gen g = 0; g < 3; ++g) {
      CHECK(G.elem(G.left(g, id)) == left_mul_gen(g, w));
      CHECK(G.elem(G.right(id, g)) == right_mul_gen(w, g));
    }
  }
  for (int y = 0; y < G.size(); ++y)
    for (int w = 0; w < G.size(); ++w)
      CHECK(G.bruhat_leq(y, w) == bruhat_leq(G.elem(y), G.elem(w)));
}
