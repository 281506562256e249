#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "wpsm/farey.hpp"

using namespace wpsm;

namespace {

// Farey sequence by repeated mediant insertion (Stern-Brocot).
std::vector<Fraction> stern_brocot(long n) {
  std::vector<Fraction> out{{0, 1}};
  std::function<void(Fraction, Fraction)> rec = [&](Fraction a, Fraction b) {
    Fraction m{a.num + b.num, a.den + b.den};
    if (m.den > n) return;
    rec(a, m);
    out.push_back(m);
    rec(m, b);
  };
  rec({0, 1}, {1, 1});
  out.push_back({1, 1});
  return out;
}

}  // namespace

TEST(Farey, SmallCases) {
  EXPECT_EQ(farey_sequence(1).entries, (std::vector<Fraction>{{0, 1}, {1, 1}}));
  EXPECT_EQ(farey_sequence(3).entries, (std::vector<Fraction>{{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}}));
  EXPECT_EQ(farey_sequence(5).entries.size(), 11u);
  EXPECT_THROW(farey_sequence(0), RangeError);
}

TEST(Farey, MatchesSternBrocotAndTotientCount) {
  for (long n = 1; n <= 40; ++n) {
    auto f = farey_sequence(n).entries;
    EXPECT_EQ(f, stern_brocot(n)) << n;
    long expect = 1;
    for (long k = 1; k <= n; ++k) expect += euler_phi(k);
    EXPECT_EQ(static_cast<long>(f.size()), expect);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_EQ(f[i + 1].num * f[i].den - f[i].num * f[i + 1].den, 1);
  }
}

TEST(Farey, CircularSymmetry) {
  EXPECT_TRUE(is_circularly_symmetric({7}, 1, 7).symmetric);
  EXPECT_FALSE(is_circularly_symmetric({6}, 1, 7).symmetric);
  EXPECT_TRUE(is_circularly_symmetric({9, 5, 3, 2, 1, 1}, 6, 30).symmetric);
  SymmetryResult bad = is_circularly_symmetric({9, 5, 3, 2, 1, 2}, 6, 30);
  EXPECT_FALSE(bad.symmetric);
  EXPECT_EQ(bad.x, 1);
  EXPECT_EQ(bad.y, 6);
  EXPECT_THROW(is_circularly_symmetric({1, 2}, 3, 1), PreconditionError);
}

TEST(Farey, CompletionFromFirstTerm) {
  EXPECT_EQ(circular_complete(5, 1, 5), IntVec{5});
  EXPECT_EQ(circular_complete(9, 6, 30), (IntVec{9, 5, 3, 2, 1, 1}));
  EXPECT_FALSE(circular_complete(8, 6, 30).has_value());
}

// Any completed sequence is circular, and completion inverts the check.
TEST(Farey, CompletionIsConsistent) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    long n = 1 + trial % 7;
    Int m = std::uniform_int_distribution<int>(1, 200)(rng);
    Int d1 = std::uniform_int_distribution<int>(1, 60)(rng);
    auto c = circular_complete(d1, n, m);
    if (!c) continue;
    EXPECT_TRUE(is_circularly_symmetric(*c, n, m).symmetric);
    EXPECT_EQ((*c)[0], d1);
  }
}
