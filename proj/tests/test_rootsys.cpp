#include <gtest/gtest.h>

#include "wpsm/parabolic.hpp"
#include "wpsm/rootsys.hpp"

using namespace wpsm;

namespace {

std::vector<SimpleType> types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

std::size_t expected_root_count(const SimpleType& t) {
  const std::size_t r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
    case Family::E: return r == 6 ? 72 : r == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

// |W| from the classical product formulas.
Int expected_weyl_order(const SimpleType& t) {
  const long r = t.rank;
  switch (t.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return ipow(2, r) * factorial(r);
    case Family::D: return ipow(2, r - 1) * factorial(r);
    case Family::F: return 1152;
    case Family::G: return 12;
    default: return 0;
  }
}

}  // namespace

TEST(RootSystem, RejectsInvalidTypes) {
  EXPECT_THROW(build_root_system({Family::A, 0}), ConstructionError);
  EXPECT_THROW(build_root_system({Family::B, 1}), ConstructionError);
  EXPECT_THROW(build_root_system({Family::D, 2}), ConstructionError);
  EXPECT_THROW(build_root_system({Family::E, 9}), ConstructionError);
  EXPECT_THROW(build_root_system({Family::F, 3}), ConstructionError);
  EXPECT_THROW(parse_family("H"), ConstructionError);
  EXPECT_EQ(parse_family("e"), Family::E);
}

TEST(RootSystem, RootCountsMatchClosedForms) {
  for (const auto& t : types_up_to(9)) {
    RootDatum d = build_root_system(t);
    EXPECT_EQ(d.roots.size(), expected_root_count(t)) << t.name();
    EXPECT_EQ(d.num_positive * 2, d.roots.size()) << t.name();
  }
}

TEST(RootSystem, SmallExamples) {
  RootDatum a1 = build_root_system({Family::A, 1});
  EXPECT_EQ(a1.roots, (std::vector<Root>{{1}, {-1}}));
  RootDatum g2 = build_root_system({Family::G, 2});
  EXPECT_EQ(g2.coxeter, 6);
  EXPECT_EQ(g2.dual_coxeter, 4);
  RootDatum e8 = build_root_system({Family::E, 8});
  EXPECT_EQ(e8.coxeter, 30);
  EXPECT_EQ(e8.dual_coxeter, 30);
  EXPECT_EQ(e8.highest_root, (Root{2, 3, 4, 6, 5, 4, 3, 2}));
  // the closure is stable under one more pass
  std::set<Root> all(e8.roots.begin(), e8.roots.end());
  EXPECT_EQ(reflection_closure(e8.cartan, all).size(), 240u);
}

TEST(RootSystem, CoxeterNumbers) {
  for (int n = 1; n <= 8; ++n) {
    RootDatum a = build_root_system({Family::A, n});
    EXPECT_EQ(a.coxeter, n + 1);
    EXPECT_EQ(a.dual_coxeter, n + 1);
  }
  for (int n = 2; n <= 8; ++n) {
    RootDatum c = build_root_system({Family::C, n});
    EXPECT_EQ(c.coxeter, 2 * n);
    EXPECT_EQ(c.dual_coxeter, n + 1);
    RootDatum b = build_root_system({Family::B, n});
    EXPECT_EQ(b.coxeter, 2 * n);
    EXPECT_EQ(b.dual_coxeter, 2 * n - 1);
  }
}

TEST(RootSystem, CartanMatrixShapes) {
  EXPECT_EQ(cartan_matrix({Family::G, 2}), (std::vector<std::vector<int>>{{2, -1}, {-3, 2}}));
  EXPECT_EQ(cartan_matrix({Family::B, 2}), (std::vector<std::vector<int>>{{2, -2}, {-1, 2}}));
  EXPECT_EQ(cartan_matrix({Family::C, 2}), (std::vector<std::vector<int>>{{2, -1}, {-2, 2}}));
  for (const auto& t : types_up_to(8)) {
    if (t.family == Family::D && t.rank == 3) continue;  // classified as A3
    if (t.family == Family::C && t.rank == 2) continue;  // same diagram as B2
    EXPECT_EQ(classify_cartan(cartan_matrix(t)), t) << t.name();
  }
}

TEST(RootSystem, D3IsFlaggedAsA3) {
  RootDatum d3 = build_root_system({Family::D, 3});
  EXPECT_TRUE(d3.d3_as_a3);
  EXPECT_EQ(d3.roots.size(), 12u);
}

// Every identity of the root datum holds on the whole sweep.
TEST(RootSystem, AllIdentitiesHold) {
  for (const auto& t : types_up_to(9)) {
    RootDatum d = build_root_system(t);
    for (const Check& c : rootsys_checks(d)) EXPECT_TRUE(c.pass) << t.name() << " " << c.tag << " " << c.witness;
  }
}

TEST(RootSystem, CorruptedComarkFailsFormIdentityFirst) {
  RootDatum d = with_corrupted_comark(build_root_system({Family::E, 7}), 1, 1);
  Checks cs = rootsys_checks(d);
  auto first = std::find_if(cs.begin(), cs.end(), [](const Check& c) { return !c.pass; });
  ASSERT_NE(first, cs.end());
  EXPECT_EQ(first->tag, "looform");
}

TEST(RootSystem, BasisConversionsRoundTrip) {
  for (const auto& t : types_up_to(5)) {
    RootDatum d = build_root_system(t);
    for (int i = 0; i < d.rank; ++i) {
      RatVec e(d.rank, Rat(0));
      e[i] = make_rat(i + 1, 3);
      RationalVector w{e, Basis::FundamentalWeight};
      EXPECT_EQ(convert(d, convert(d, w, Basis::SimpleRoot), Basis::FundamentalWeight), w);
      RationalVector c{e, Basis::SimpleCoroot};
      EXPECT_EQ(convert(d, convert(d, c, Basis::FundamentalCoweight), Basis::SimpleCoroot), c);
    }
    EXPECT_THROW(convert(d, {RatVec(d.rank, Rat(0)), Basis::SimpleRoot}, Basis::SimpleCoroot), PreconditionError);
  }
}

TEST(RootSystem, FundamentalCoweightsAreDual) {
  for (const auto& t : types_up_to(6)) {
    RootDatum d = build_root_system(t);
    for (int a = 0; a < d.rank; ++a)
      for (int b = 0; b < d.rank; ++b) EXPECT_EQ(d.pair_root(d.fund_coweights[a], b), a == b ? 1 : 0);
  }
}

TEST(RootSystem, Sweeps) {
  RootDatum a2 = build_root_system({Family::A, 2});
  RationalVector w1{{1, 0}, Basis::FundamentalWeight};
  EXPECT_EQ(make_antidominant_within(a2, all_labels(a2), w1), (RationalVector{{0, -1}, Basis::FundamentalWeight}));
  EXPECT_EQ(make_antidominant_within(a2, {}, w1), w1);
  // the dominant sweep inside the Levi carries sigma_k to lambda_k
  for (const auto& t : types_up_to(5)) {
    RootDatum d = build_root_system(t);
    for (int alpha = 1; alpha <= d.rank; ++alpha) {
      ParabolicProfile p = parabolic_profile(d, alpha);
      for (const Level& lv : p.levels) {
        RationalVector s{RatVec(lv.sigma.begin(), lv.sigma.end()), Basis::SimpleRoot};
        RationalVector l{RatVec(lv.lambda.begin(), lv.lambda.end()), Basis::SimpleRoot};
        EXPECT_EQ(make_dominant_within(d, labels_except(d, alpha), s), l) << t.name() << " a" << alpha;
        EXPECT_EQ(make_antidominant_within(d, labels_except(d, alpha), l), s) << t.name() << " a" << alpha;
      }
    }
  }
}

// Brute-force orbit enumeration against the product formulas.
TEST(RootSystem, WeylGroupOrder) {
  for (const auto& t : types_up_to(5)) {
    if (t.family == Family::E) continue;
    RootDatum d = build_root_system(t);
    EXPECT_EQ(weyl_group_order_bruteforce(d), expected_weyl_order(t)) << t.name();
  }
  // longest word length = number of positive roots
  for (const auto& t : types_up_to(6)) {
    RootDatum d = build_root_system(t);
    EXPECT_EQ(longest_word(d, all_labels(d)).size(), d.num_positive) << t.name();
  }
}
