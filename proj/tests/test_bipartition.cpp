#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "heckeb/bipartition.hpp"
#include "heckeb/signed_perm.hpp"

using namespace heckeb;

namespace {
Bipartition BP(const char* s) { return Bipartition::parse(s); }

long group_order(int n) {
  long r = 1;
  for (int i = 1; i <= n; ++i) r *= 2L * i;
  return r;
}
}  // namespace

TEST_CASE("bipartition enumeration and syntax", "[bipartition]") {
  auto l2 = bipartitions(2);
  REQUIRE(l2.size() == 5);
  CHECK(l2[0] == BP("2|-"));
  CHECK(l2[1] == BP("1.1|-"));
  CHECK(l2[2] == BP("1|1"));
  CHECK(l2[3] == BP("-|2"));
  CHECK(l2[4] == BP("-|1.1"));
  CHECK(bipartitions(3).size() == 10);

  CHECK(BP("2.1|-").to_string() == "2.1|-");
  CHECK(BP("1|2").to_string() == "1|2");
  CHECK_THROWS(BP("1.2|-"));  // parts must decrease
  CHECK_THROWS(BP("2"));

  for (const auto& lam : bipartitions(4)) {
    CHECK(lam.n() == 4);
    CHECK(Bipartition::parse(lam.to_string()) == lam);
    // conjugation is an involution
    CHECK(conjugate_partition(conjugate_partition(lam.first)) == lam.first);
  }
}

TEST_CASE("dominance order", "[bipartition]") {
  CHECK(dominance_leq(BP("1|2"), BP("2|1")));
  CHECK_FALSE(dominance_leq(BP("2|1"), BP("1|2")));
  for (const auto& lam : bipartitions(4)) CHECK(dominance_leq(lam, lam));

  auto l5 = bipartitions(5);
  for (const auto& a : l5)
    for (const auto& b : l5) {
      if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
      for (const auto& c : l5)
        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
    }
}

TEST_CASE("standard and row-standard bitableaux", "[bipartition]") {
  CHECK(standard_bitableaux(BP("1|2")).size() == 3);
  CHECK(standard_bitableaux(BP("3|-")).size() == 1);
  CHECK(standard_bitableaux(BP("4|-")).size() == 1);

  for (int n = 1; n <= 5; ++n) {
    long sum = 0;
    for (const auto& lam : bipartitions(n)) {
      long d = static_cast<long>(standard_bitableaux(lam).size());
      sum += d * d;
    }
    CHECK(sum == group_order(n));
  }

  for (const auto& lam : bipartitions(3)) {
    auto canon = canonical_bitableau(lam);
    CHECK(canon.is_standard());
    CHECK(d_of(canon).is_identity());
    auto rs = row_standard_bitableaux(lam);
    auto rsl = row_standard_l_bitableaux(lam);
    std::set<Bitableau> rset(rs.begin(), rs.end());
    CHECK(rset.size() == rs.size());
    for (const auto& t : rsl) {
      CHECK(rset.count(t) == 1);
      int l = lam.l();
      for (const auto& row : t.comps[0])
        for (int x : row) CHECK(x <= l);
      for (const auto& row : t.comps[1])
        for (int x : row) CHECK(x > l);
    }
    for (const auto& t : standard_bitableaux(lam)) {
      CHECK(t.is_standard());
      CHECK(rset.count(t) == 1);
    }
  }
}

TEST_CASE("d maps", "[bipartition]") {
  Bitableau t;
  t.comps[0] = {{2}};
  t.comps[1] = {{1, 3}};
  CHECK(d_of(t) == from_word("s1", 3));
  Bitableau t2;
  t2.comps[0] = {{3}};
  t2.comps[1] = {{1, 2}};
  CHECK(d_of(t2) == SignedPerm::from_window({3, 1, 2}));
}

TEST_CASE("coset decomposition of row-standard tableaux", "[bipartition]") {
  for (int n : {3, 4}) {
    for (const auto& lam : bipartitions(n)) {
      auto canon = canonical_bitableau(lam);
      auto [y0, t0] = coset_decomposition(canon);
      CHECK(y0.is_identity());
      CHECK(t0 == canon);
      for (const auto& s : row_standard_bitableaux(lam)) {
        auto [y, t] = coset_decomposition(s);
        CHECK(d_of(s) == y * d_of(t));
        CHECK(length(d_of(s)) == length(y) + length(d_of(t)));
        CHECK(s.is_standard() == t.is_standard());
        // t is filled componentwise by 1..l and l+1..n
        for (const auto& row : t.comps[0])
          for (int x : row) CHECK(x <= lam.l());
      }
    }
  }
}

TEST_CASE("robinson-schensted correspondence", "[bipartition]") {
  auto [Pe, Qe] = rs_pair(SignedPerm(3));
  CHECK(Pe == Qe);
  CHECK(Pe.shape() == BP("3|-"));

  auto [P, Q] = rs_pair(from_word("s2 t", 3));
  CHECK(P.shape() == BP("1.1|1"));
  CHECK(Q.shape() == BP("1.1|1"));

  for (int n : {2, 3, 4}) {
    std::set<std::pair<Bitableau, Bitableau>> images;
    for (const auto& w : enumerate_group(n)) {
      auto [p, q] = rs_pair(w);
      CHECK(p.is_standard());
      CHECK(q.is_standard());
      CHECK(p.shape() == q.shape());
      images.insert({p, q});
    }
    CHECK(static_cast<long>(images.size()) == group_order(n));
    // every same-shape pair of standard bitableaux is hit
    long total = 0;
    for (const auto& lam : bipartitions(n)) {
      long d = static_cast<long>(standard_bitableaux(lam).size());
      total += d * d;
    }
    CHECK(static_cast<long>(images.size()) == total);
  }
}

TEST_CASE("types", "[bipartition]") {
  CHECK(type_of(SignedPerm(3)) == BP("3|-"));
  CHECK(type_of(SignedPerm(4)) == BP("4|-"));

  // type(sigma_lambda * a_l) = (lambda_2^* | lambda_1)
  for (int n : {2, 3, 4})
    for (const auto& lam : bipartitions(n)) {
      auto sp = special_elements(n, lam.l());
      Bipartition expected{conjugate_partition(lam.second), lam.first};
      CHECK(type_of(sigma_lambda(lam) * sp.a) == expected);
      CHECK(type_of(sp.a * sigma_lambda(lam)) == expected);
    }

  for (const auto& w : enumerate_group(3)) {
    CHECK(type_of(w) == type_of(w.inverse()));
    // P and Q swap under inversion
    auto [p, q] = rs_pair(w);
    auto [pi, qi] = rs_pair(w.inverse());
    CHECK(p == qi);
    CHECK(q == pi);
  }
}

TEST_CASE("longest Young subgroup elements", "[bipartition]") {
  for (const auto& lam : bipartitions(4)) {
    auto sig = sigma_lambda(lam);
    int expect = 0;
    for (int p : lam.first) expect += p * (p - 1) / 2;
    for (int p : lam.second) expect += p * (p - 1) / 2;
    CHECK(length(sig) == expect);
    CHECK(sig * sig == SignedPerm(4));
  }
}

TEST_CASE("distinguished cells", "[bipartition]") {
  auto cell = distinguished_cell(BP("1|2"));
  std::set<SignedPerm> got(cell.begin(), cell.end());
  std::set<SignedPerm> expect = {from_word("s2 t", 3), from_word("s1 s2 t", 3),
                                 from_word("s2 s1 s2 t", 3)};
  CHECK(got == expect);

  for (int n : {2, 3, 4}) {
    Bipartition lam{{}, {}};
    lam.first = {n};
    auto c1 = distinguished_cell(lam);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == sigma_lambda(lam) * special_elements(n, n).a);

    for (const auto& mu : bipartitions(n)) {
      auto core = sigma_lambda(mu) * special_elements(n, mu.l()).a;
      for (const auto& t : standard_bitableaux(mu))
        CHECK(length(d_of(t) * core) == length(d_of(t)) + length(core));
    }
  }
}
