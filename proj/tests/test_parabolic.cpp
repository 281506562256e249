#include <gtest/gtest.h>

#include "wpsm/parabolic.hpp"

using namespace wpsm;

namespace {

std::vector<SimpleType> sample_types() {
  std::vector<SimpleType> out;
  for (int r = 1; r <= 7; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= 6; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= 6; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= 7; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

// Number of roots with alpha-coefficient exactly k, straight from the list.
long count_level(const RootDatum& d, int alpha, int k) {
  long n = 0;
  for (const Root& b : d.roots) n += b[alpha - 1] == k;
  return n;
}

}  // namespace

TEST(Parabolic, E8SpecialSequence) {
  RootDatum d = build_root_system({Family::E, 8});
  ASSERT_EQ(special_roots(d), std::vector<int>{4});
  ParabolicProfile p = parabolic_profile(d, 4);
  EXPECT_EQ(p.h_alpha, 6);
  EXPECT_EQ(p.d_seq, (IntVec{9, 5, 3, 2, 1, 1}));
  EXPECT_EQ(p.d_seq[0] + p.d_seq[5], 2 * d.dual_coxeter / p.g_alpha);
  EXPECT_EQ(p.n_alpha, 1);
}

TEST(Parabolic, LevelsAgainstDirectEnumeration) {
  for (const auto& t : sample_types()) {
    RootDatum d = build_root_system(t);
    for (int a = 1; a <= d.rank; ++a) {
      ParabolicProfile p = parabolic_profile(d, a);
      EXPECT_EQ(p.h_alpha, d.highest_root[a - 1]);
      ASSERT_EQ(static_cast<int>(p.levels.size()), p.h_alpha);
      for (const Level& lv : p.levels) {
        EXPECT_EQ(lv.count, count_level(d, a, lv.k)) << t.name() << " a" << a;
        // i = k n c / m, a positive integer
        Int num = lv.k * p.n_alpha * lv.count;
        EXPECT_EQ(num % p.m_alpha, 0);
        EXPECT_EQ(lv.i, num / p.m_alpha);
        EXPECT_GT(lv.i, 0);
      }
      EXPECT_EQ(count_level(d, a, p.h_alpha + 1), 0);
      // d_k = sum over multiples of k
      for (int k = 1; k <= p.h_alpha; ++k) {
        Int s = 0;
        for (int x = k; x <= p.h_alpha; x += k) s += p.levels[x - 1].i;
        EXPECT_EQ(p.d_seq[k - 1], s);
      }
      // phi-weighted sum
      Int phi_sum = 0;
      for (int k = 1; k <= p.h_alpha; ++k) phi_sum += euler_phi(k) * p.d_seq[k - 1];
      EXPECT_EQ(phi_sum, p.h_alpha * d.dual_coxeter / p.g_alpha) << t.name() << " a" << a;
      // d1 as a sum of Cartan integers over roots above the Levi
      Int s = 0;
      for (std::size_t k = 0; k < d.num_positive; ++k)
        if (d.roots[k][a - 1] > 0) s += d.pair_coroot(d.roots[k], a - 1);
      EXPECT_EQ(p.d1, s) << t.name() << " a" << a;
      EXPECT_EQ(p.d_seq[0] + p.d_seq[p.h_alpha - 1], 2 * d.dual_coxeter / p.g_alpha);
    }
  }
}

TEST(Parabolic, AllChecksPass) {
  for (const auto& t : sample_types()) {
    RootDatum d = build_root_system(t);
    for (int a = 1; a <= d.rank; ++a)
      for (const Check& c : parabolic_checks(d, parabolic_profile(d, a)))
        EXPECT_TRUE(c.pass) << t.name() << " a" << a << " " << c.tag << " " << c.witness;
  }
}

TEST(Parabolic, NAlpha) {
  for (int n = 2; n <= 9; ++n) {
    RootDatum d = build_root_system({Family::A, n - 1});
    for (int k = 1; k < n; ++k) EXPECT_EQ(parabolic_profile(d, k).n_alpha, n / std::gcd(k, n));
  }
  for (int n = 2; n <= 6; ++n) {
    RootDatum c = build_root_system({Family::C, n});
    EXPECT_EQ(parabolic_profile(c, n).n_alpha, 2);
  }
  RootDatum e8 = build_root_system({Family::E, 8});
  for (int a = 1; a <= 8; ++a) EXPECT_EQ(parabolic_profile(e8, a).n_alpha, 1);
}

TEST(Parabolic, SpecialRootsAndFirstDegree) {
  EXPECT_EQ(special_roots(build_root_system({Family::G, 2})), std::vector<int>{2});
  EXPECT_EQ(special_roots(build_root_system({Family::F, 4})), std::vector<int>{2});
  EXPECT_EQ(special_roots(build_root_system({Family::E, 7})), std::vector<int>{4});
  EXPECT_EQ(special_roots(build_root_system({Family::B, 5})), std::vector<int>{4});
  EXPECT_EQ(special_roots(build_root_system({Family::C, 5})), std::vector<int>{5});
  EXPECT_EQ(special_roots(build_root_system({Family::D, 6})), std::vector<int>{4});
  EXPECT_EQ(special_roots(build_root_system({Family::A, 4})), (std::vector<int>{1, 2, 3, 4}));
  for (const auto& t : sample_types()) {
    RootDatum d = build_root_system(t);
    for (int a : special_roots(d)) EXPECT_EQ(parabolic_profile(d, a).d1, d.rank + 1) << t.name();
  }
}

TEST(Parabolic, LeviStructure) {
  RootDatum e8 = build_root_system({Family::E, 8});
  LeviSpecial s = levi_special_structure(e8, 4);
  EXPECT_EQ(s.n, (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(s.m_alpha, 30);
  EXPECT_EQ(parabolic_profile(e8, 4).m_alpha, 30);
  for (int n = 2; n <= 7; ++n) {
    RootDatum a = build_root_system({Family::A, n});
    for (int k = 1; k <= n; ++k) {
      LeviSpecial l = levi_special_structure(a, k);
      EXPECT_EQ(l.m_alpha, std::lcm(k, n + 1 - k));
    }
  }
  RootDatum g2 = build_root_system({Family::G, 2});
  EXPECT_EQ(levi_special_structure(g2, 2).n, std::vector<int>{2});
  EXPECT_EQ(levi_special_structure(g2, 2).m_alpha, 2);
  EXPECT_THROW(levi_special_structure(g2, 1), PreconditionError);
  EXPECT_THROW(parabolic_profile(g2, 3), RangeError);
}

TEST(Parabolic, SubsystemTypes) {
  RootDatum e8 = build_root_system({Family::E, 8});
  auto names = [](const Subsystem& s) {
    std::multiset<std::string> n;
    for (const auto& c : s.components) n.insert(c.type.name());
    return n;
  };
  EXPECT_EQ(names(subsystem_R_alpha_k(e8, 4, 2)), (std::multiset<std::string>{"A1", "E7"}));
  EXPECT_EQ(names(subsystem_R_alpha_k(e8, 4, 4)).count("A7"), 1u);
  Subsystem full = subsystem_R_alpha_k(e8, 4, 1);
  EXPECT_EQ(full.generated.size(), 240u);
}
