#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "heckeb/specht.hpp"
#include "test_util.hpp"

using namespace heckeb;
using testutil::T;

namespace {

const MonomialOrder kAsym = MonomialOrder::asymptotic();

Bipartition BP(const char* s) { return Bipartition::parse(s); }

std::vector<Gen> young_generators(const Bipartition& lam) {
  std::vector<Gen> gens;
  int start = 1;
  for (const auto* comp : {&lam.first, &lam.second})
    for (int p : *comp) {
      for (int i = start; i < start + p - 1; ++i) gens.push_back(i);
      start += p;
    }
  return gens;
}

Laurent2 trace(const LaurentMatrix& m) {
  Laurent2 t;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

TEST_CASE("murphy elements", "[specht]") {
  {
    WGroup G(2);
    KLTable kl(G, kAsym);
    HeckeElt x = murphy_element(BP("-|2"), kl);
    CHECK(x == T(SignedPerm(2)) + vpow(1) * T("s1", 2));
  }
  WGroup G(3);
  KLTable kl(G, kAsym);
  HeckeElt x = murphy_element(BP("1|2"), kl);
  CHECK(mul_gen_left(0, x) == Vpow(1) * x);

  for (const auto& lam : bipartitions(3)) {
    HeckeElt xl = murphy_element(lam, kl);
    for (Gen s : young_generators(lam)) CHECK(mul_gen_left(s, xl) == vpow(1) * xl);
    if (lam.l() == 3) {
      // t acts by V on x_lambda when the whole first component is used:
      // sigma_lambda a_3 has t as a left descent
      CHECK(mul_gen_left(0, xl) == Vpow(1) * xl);
    }
  }

  KLTable w11(G, MonomialOrder::weighted(1, 1, 1, 1));
  CHECK_THROWS_AS(murphy_element(BP("1|2"), w11), std::invalid_argument);
}

TEST_CASE("ideal membership", "[specht]") {
  WGroup G(3);
  KLTable kl(G, kAsym);
  auto lams = bipartitions(3);
  for (const auto& lam : lams) {
    for (const auto& mu : lams) {
      if (dominance_leq(lam, mu)) CHECK(in_n_ideal(murphy_element(mu, kl), lam, kl));
    }
    SignedPerm als = special_elements(3, lam.l()).a * sigma_lambda(lam);
    CHECK(in_n_ideal(kl.c_basis_element(als), lam, kl));
    CHECK_FALSE(in_n_ideal(kl.c_basis_element(als), lam, kl, /*strict=*/true));
    CHECK(in_n_ideal(HeckeElt::zero(3), lam, kl, /*strict=*/true));
  }
}

TEST_CASE("N ideals are closed under generator multiplication", "[specht]") {
  WGroup G(3);
  KLTable kl(G, kAsym);
  for (const auto& lam : bipartitions(3)) {
    for (int y = 0; y < G.size(); ++y) {
      HeckeElt cy = kl.c_basis_element(y);
      if (!in_n_ideal(cy, lam, kl)) continue;
      for (Gen s = 0; s < 3; ++s) {
        CHECK(in_n_ideal(mul_gen_left(s, cy), lam, kl));
        CHECK(in_n_ideal(mul(cy, T(gen_elem(3, s))), lam, kl));
      }
    }
  }
}

TEST_CASE("left ideals of x_lambda and C_{a_l sigma_lambda} have equal support closure",
          "[specht]") {
  WGroup G(3);
  KLTable kl(G, kAsym);
  auto closure_of = [&](const HeckeElt& h) {
    std::set<int> seen;
    std::vector<int> todo;
    for (const auto& [w, c] : kl.to_c_basis(h).coeffs) {
      int id = G.id_of(w);
      if (seen.insert(id).second) todo.push_back(id);
    }
    while (!todo.empty()) {
      int y = todo.back();
      todo.pop_back();
      for (Gen s = 0; s < 3; ++s)
        for (const auto& [z, hc] : kl.c_gen_product(s, y))
          if (seen.insert(z).second) todo.push_back(z);
    }
    return seen;
  };
  for (const auto& lam : bipartitions(3)) {
    SignedPerm als = special_elements(3, lam.l()).a * sigma_lambda(lam);
    CHECK(closure_of(murphy_element(lam, kl)) == closure_of(kl.c_basis_element(als)));
  }
}

TEST_CASE("transition matrices", "[specht]") {
  for (int n : {2, 3}) {
    WGroup G(n);
    KLTable kl(G, kAsym);
    for (const auto& lam : bipartitions(n)) {
      SpechtCellMatrix M = g_matrix(lam, kl);
      const int d = static_cast<int>(M.tabs.size());
      REQUIRE(d == static_cast<int>(standard_bitableaux(lam).size()));
      // canonical tableau sits first and gives the unit column
      CHECK(d_of(M.tabs[0]).is_identity());
      for (int i = 0; i < d; ++i) CHECK(M.g[i][0] == (i == 0 ? Laurent2(1) : Laurent2()));
      for (int i = 0; i < d; ++i) CHECK(M.g[i][i] == Laurent2(1));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (i == j) continue;
          const Laurent2& e = M.g[i][j];
          if (e.is_zero()) continue;
          CHECK(bruhat_leq(d_of(M.tabs[i]), d_of(M.tabs[j])));
          for (const auto& [gam, c] : e.terms()) {
            CHECK(gam.eV == 0);
            CHECK(gam.ev <= -1);
          }
        }
      CHECK(mat_det(M.g) == Laurent2(1));
      LaurentMatrix inv = unitriangular_inverse(M.g);
      CHECK(mat_mul(inv, M.g) == identity_matrix(d));
      CHECK(mat_mul(M.g, inv) == identity_matrix(d));
    }
  }
}

TEST_CASE("specht generator matrices", "[specht]") {
  WGroup G(3);
  KLTable kl(G, kAsym);

  // one-dimensional module: T_t acts by V, each T_{s_i} by v
  auto one = specht_matrices(BP("3|-"), kl);
  CHECK(one[0] == LaurentMatrix{{Vpow(1)}});
  CHECK(one[1] == LaurentMatrix{{vpow(1)}});
  CHECK(one[2] == LaurentMatrix{{vpow(1)}});

  std::mt19937 rng(55);
  std::uniform_int_distribution<int> coefd(-3, 3), expd(-2, 2);
  for (const auto& lam : bipartitions(3)) {
    SpechtCellMatrix M = g_matrix(lam, kl);
    auto mats = specht_matrices(lam, kl);
    const int d = static_cast<int>(M.g.size());

    // defining relations
    auto quad = [&](Gen s) {
      LaurentMatrix t1 = mats[s], t2 = mats[s];
      for (int i = 0; i < d; ++i) {
        t1[i][i] -= gen_param(s, 1);
        t2[i][i] += gen_param(s, -1);
      }
      return mat_is_zero(mat_mul(t1, t2));
    };
    for (Gen s = 0; s < 3; ++s) CHECK(quad(s));
    CHECK(mat_mul(mat_mul(mats[0], mats[1]), mat_mul(mats[0], mats[1])) ==
          mat_mul(mat_mul(mats[1], mats[0]), mat_mul(mats[1], mats[0])));
    CHECK(mat_mul(mat_mul(mats[1], mats[2]), mats[1]) ==
          mat_mul(mat_mul(mats[2], mats[1]), mats[2]));
    CHECK(mat_mul(mats[0], mats[2]) == mat_mul(mats[2], mats[0]));

    // conjugation: G rho_specht = rho_cell G, and characters agree
    std::vector<SignedPerm> basis;
    for (int id : M.cell_basis) basis.push_back(G.elem(id));
    std::vector<int> cell = M.cell_basis;
    std::sort(cell.begin(), cell.end());
    CellModule mod = cell_module(kl, cell, &basis);
    for (Gen s = 0; s < 3; ++s) {
      CHECK(mat_mul(M.g, mats[s]) == mat_mul(mod.gen_mats[s], M.g));
      CHECK(trace(mats[s]) == trace(mod.gen_mats[s]));
    }
    CHECK(trace(mat_mul(mats[0], mats[1])) == trace(mat_mul(mod.gen_mats[0], mod.gen_mats[1])));

    // phi intertwines on random vectors
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Laurent2> u(d);
      for (auto& e : u) e = Laurent2::monomial(coefd(rng), {expd(rng), expd(rng)});
      for (Gen s = 0; s < 3; ++s) {
        std::vector<Laurent2> gu(d), phi_gu, g_phiu(d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) gu[i] += mats[s][i][j] * u[j];
        phi_gu = phi_lambda(gu, M);
        auto phiu = phi_lambda(u, M);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) g_phiu[i] += mod.gen_mats[s][i][j] * phiu[j];
        CHECK(phi_gu == g_phiu);
      }
    }

    // class of x_lambda maps to the class of C_{sigma_lambda a_l}
    std::vector<Laurent2> e0(d);
    e0[0] = Laurent2(1);
    auto img = phi_lambda(e0, M);
    CHECK(img[0] == Laurent2(1));
    for (int i = 1; i < d; ++i) CHECK(img[i].is_zero());
  }
}

TEST_CASE("specht module dimensions", "[specht]") {
  WGroup G(3);
  KLTable kl(G, kAsym);
  long sq = 0;
  for (const auto& lam : bipartitions(3)) {
    long d = static_cast<long>(g_matrix(lam, kl).g.size());
    CHECK(d == static_cast<long>(standard_bitableaux(lam).size()));
    sq += d * d;
  }
  CHECK(sq == 48);
}
