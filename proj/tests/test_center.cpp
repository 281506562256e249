#include <gtest/gtest.h>

#include "wpsm/center.hpp"

using namespace wpsm;

namespace {

struct Fixture {
  RootDatum d;
  CenterGroup z;
  std::vector<ParabolicProfile> profiles;
  explicit Fixture(SimpleType t)
      : d(build_root_system(t)), z(center_group(d)), profiles(all_parabolic_profiles(d)) {}
  OrbitProfile orbits(int c) const { return orbit_data(d, z.at(c)); }
};

// Rank of an integer matrix over Q.
std::size_t rational_rank(RatMatrix a) {
  std::size_t rank = 0;
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Center, GroupStructure) {
  for (int n = 2; n <= 10; ++n) {
    Fixture s({Family::A, n - 1});
    EXPECT_EQ(s.z.order(), n);
    EXPECT_TRUE(s.z.cyclic());
  }
  EXPECT_EQ(Fixture({Family::E, 8}).z.order(), 1);
  EXPECT_EQ(Fixture({Family::F, 4}).z.order(), 1);
  EXPECT_EQ(Fixture({Family::G, 2}).z.order(), 1);
  for (int m = 2; m <= 5; ++m) {
    Fixture s({Family::D, 2 * m});
    EXPECT_EQ(s.z.factors, (IntVec{2, 2}));
    EXPECT_FALSE(s.z.cyclic());
  }
  EXPECT_EQ(Fixture({Family::D, 5}).z.factors, IntVec{4});
  EXPECT_EQ(Fixture({Family::E, 6}).z.order(), 3);
  EXPECT_EQ(Fixture({Family::E, 7}).z.order(), 2);
  EXPECT_THROW(Fixture({Family::E, 8}).z.at(1), ElementDomainError);
}

// |Z| equals det of the Cartan matrix, and element orders divide it.
TEST(Center, OrderIsCartanDeterminant) {
  for (auto t : {SimpleType{Family::A, 5}, {Family::B, 4}, {Family::C, 3}, {Family::D, 6}, {Family::D, 7},
                 {Family::E, 6}, {Family::E, 7}}) {
    Fixture s(t);
    RatMatrix c;
    for (const auto& row : s.d.cartan) c.emplace_back(row.begin(), row.end());
    EXPECT_EQ(Rat(s.z.order()), determinant(c)) << t.name();
    for (const auto& e : s.z.elements) EXPECT_EQ(s.z.order() % e.order, 0);
    EXPECT_EQ(s.z.elements[0].order, 1);
  }
}

TEST(Center, DiagramAutomorphisms) {
  Fixture a1({Family::A, 1});
  EXPECT_EQ(a1.orbits(0).aut.tau, (std::vector<int>{0, 1}));
  EXPECT_EQ(a1.orbits(1).aut.tau, (std::vector<int>{1, 0}));
  // A_n: rotation of the cycle by the node of c
  for (int n = 2; n <= 7; ++n) {
    Fixture s({Family::A, n});
    for (const auto& e : s.z.elements) {
      auto tau = s.orbits(e.index).aut.tau;
      for (int i = 0; i <= n; ++i) EXPECT_EQ(tau[i], (i + e.node) % (n + 1));
    }
  }
  // E7: flip of the long chain fixing alpha_2 and alpha_4
  Fixture e7({Family::E, 7});
  auto tau = e7.orbits(1).aut.tau;
  EXPECT_EQ(tau, (std::vector<int>{7, 6, 2, 5, 4, 3, 1, 0}));
}

TEST(Center, Orbits) {
  Fixture e7({Family::E, 7});
  OrbitProfile o = e7.orbits(1);
  IntVec gb = o.g_bar;
  std::sort(gb.begin(), gb.end());
  EXPECT_EQ(gb, (IntVec{2, 2, 4, 4, 6}));
  EXPECT_EQ(o.n0, 2);
  EXPECT_EQ(o.r_c, 4);

  Fixture a1({Family::A, 1});
  OrbitProfile p = a1.orbits(1);
  EXPECT_EQ(p.orbits.size(), 1u);
  EXPECT_EQ(p.g_bar, IntVec{2});
  EXPECT_EQ(p.n0, 2);
  EXPECT_EQ(p.r_c, 0);

  Fixture f4({Family::F, 4});
  OrbitProfile q = f4.orbits(0);
  EXPECT_EQ(q.n0, 1);
  EXPECT_EQ(q.r_c, 4);
}

TEST(Center, Lattices) {
  Fixture a1({Family::A, 1});
  LatticeProfile l0 = lattice_profile(a1.d, a1.orbits(0));
  EXPECT_EQ(l0.basis, (std::vector<IntVec>{{1}}));
  EXPECT_EQ(l0.det, 2);
  LatticeProfile l1 = lattice_profile(a1.d, a1.orbits(1));
  EXPECT_TRUE(l1.basis.empty());
  EXPECT_EQ(l1.det, 1);
  EXPECT_EQ(l1.coinv_torsion, IntVec{2});

  for (auto t : {SimpleType{Family::A, 5}, {Family::B, 3}, {Family::C, 4}, {Family::D, 4}, {Family::D, 5},
                 {Family::E, 6}, {Family::E, 7}}) {
    Fixture s(t);
    for (const auto& e : s.z.elements) {
      OrbitProfile o = s.orbits(e.index);
      LatticeProfile L = lattice_profile(s.d, o);
      // invariants have rank r - rank(A - 1)
      RatMatrix am;
      for (int i = 0; i < s.d.rank; ++i) {
        am.emplace_back(L.action[i].begin(), L.action[i].end());
        am[i][i] -= 1;
      }
      EXPECT_EQ(static_cast<std::size_t>(s.d.rank) - rational_rank(am), static_cast<std::size_t>(o.r_c));
      EXPECT_EQ(L.basis.size(), static_cast<std::size_t>(o.r_c));
      EXPECT_EQ(L.torsion_order, o.n0) << t.name() << " c" << e.index;
      EXPECT_LE(L.coinv_torsion.size(), 1u);
      // the orbit sums are fixed by w_c
      for (const auto& v : L.basis)
        for (int i = 0; i < s.d.rank; ++i) {
          Int w = 0;
          for (int j = 0; j < s.d.rank; ++j) w += L.action[i][j] * v[j];
          EXPECT_EQ(w, v[i]);
        }
    }
  }
}

TEST(Center, PairingDegree) {
  Fixture a1({Family::A, 1});
  EXPECT_EQ(pairing_degree(a1.d, a1.orbits(0), lattice_profile(a1.d, a1.orbits(0))), 2);
  EXPECT_EQ(pairing_degree(a1.d, a1.orbits(1), lattice_profile(a1.d, a1.orbits(1))), 1);
  Fixture e8({Family::E, 8});
  EXPECT_EQ(pairing_degree(e8.d, e8.orbits(0), lattice_profile(e8.d, e8.orbits(0))), 696729600);
  for (auto t : {SimpleType{Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                 {Family::F, 4}, {Family::G, 2}}) {
    Fixture s(t);
    OrbitProfile o = s.orbits(0);
    EXPECT_EQ(pairing_degree(s.d, o, lattice_profile(s.d, o)), weyl_group_order_bruteforce(s.d)) << t.name();
  }
}

TEST(Center, OrderAndIndexOfCenterOnRoots) {
  Fixture a3({Family::A, 3});
  const CenterElement& c2 = a3.z.at(2);
  EXPECT_EQ(c2.order, 2);
  EXPECT_EQ(o_c_alpha(c2, 1), 2);
  EXPECT_EQ(o_c_alpha(a3.z.at(0), 1), 1);

  Fixture e7({Family::E, 7});
  EXPECT_EQ(n_c_alpha(e7.d, e7.z, e7.z.at(1), 5), 1);
  Fixture d6({Family::D, 6});
  for (const auto& e : d6.z.elements) {
    if (e.node != 5 && e.node != 6) continue;
    for (int a : c_special_roots(d6.d, d6.orbits(e.index), d6.profiles))
      EXPECT_EQ(n_c_alpha(d6.d, d6.z, e, a), 2);
  }
  for (int a = 1; a <= 6; ++a)
    EXPECT_EQ(n_c_alpha(d6.d, d6.z, d6.z.at(0), a), d6.profiles[a - 1].n_alpha);
}

TEST(Center, CSpecialRoots) {
  for (int n = 2; n <= 7; ++n) {
    Fixture b({Family::B, n});
    EXPECT_EQ(c_special_roots(b.d, b.orbits(1), b.profiles), std::vector<int>{n});
    Fixture c({Family::C, n});
    EXPECT_EQ(c_special_roots(c.d, c.orbits(1), c.profiles), std::vector<int>{n % 2 ? n : n - 1});
  }
  for (int n = 4; n <= 8; ++n) {
    Fixture d({Family::D, n});
    for (const auto& e : d.z.elements)
      if (e.node == 1) EXPECT_EQ(c_special_roots(d.d, d.orbits(e.index), d.profiles), (std::vector<int>{n - 1, n}));
  }
  Fixture e6({Family::E, 6});
  for (int c = 1; c <= 2; ++c) {
    auto cs = c_special_roots(e6.d, e6.orbits(c), e6.profiles);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_TRUE(cs[0] == 3 || cs[0] == 5);
    EXPECT_EQ(varpi_of_center(e6.z.at(c), cs[0]), make_rat(2, 3));
    EXPECT_EQ(e6.profiles[cs[0] - 1].d1, 9);
  }
  Fixture e7({Family::E, 7});
  EXPECT_EQ(c_special_roots(e7.d, e7.orbits(1), e7.profiles), std::vector<int>{5});
  EXPECT_EQ(e7.profiles[4].d1, 10);
}

TEST(Center, AllChecksPass) {
  for (auto t : {SimpleType{Family::A, 1}, {Family::A, 6}, {Family::B, 4}, {Family::C, 5}, {Family::D, 4},
                 {Family::D, 7}, {Family::E, 6}, {Family::E, 7}, {Family::G, 2}}) {
    Fixture s(t);
    for (const auto& e : s.z.elements) {
      OrbitProfile o = s.orbits(e.index);
      LatticeProfile L = lattice_profile(s.d, o);
      FixedSimplex f = alcove_fixed_simplex(s.d, o, L);
      for (const Check& c : center_checks(s.d, s.z, o, L, f))
        EXPECT_TRUE(c.pass) << t.name() << " c" << e.index << " " << c.tag << " " << c.witness;
    }
  }
}
