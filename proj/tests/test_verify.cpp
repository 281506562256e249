#include <gtest/gtest.h>

#include <set>

#include "wpsm/verify.hpp"

using namespace wpsm;

TEST(Verify, SmallSweepPasses) {
  SweepConfig cfg;
  cfg.max_rank = 4;
  VerificationReport r = run_verification(cfg);
  EXPECT_TRUE(r.pass()) << (r.first_failure() ? claim_text(*r.first_failure()) : "");
  EXPECT_EQ(r.count(Status::Skip), 0u);
  std::set<std::string> ids;
  for (const auto& c : r.claims) EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
}

TEST(Verify, DeterministicAcrossJobCounts) {
  SweepConfig cfg;
  cfg.max_rank = 5;
  cfg.families = {Family::A, Family::D, Family::E};
  cfg.jobs = 1;
  std::string one = report_json(run_verification(cfg));
  cfg.jobs = 4;
  EXPECT_EQ(one, report_json(run_verification(cfg)));
  cfg.jobs = 3;
  EXPECT_EQ(report_csv(run_verification(cfg)), report_csv([&] {
              SweepConfig c = cfg;
              c.jobs = 1;
              return run_verification(c);
            }()));
}

TEST(Verify, E7AdjointClaims) {
  SweepConfig cfg;
  cfg.types = {{Family::E, 7}};
  cfg.center_policy = CenterPolicy::Explicit;
  cfg.center_index = 1;
  VerificationReport r = run_verification(cfg);
  const ClaimRecord* cthm = r.find("cthm/E7-adj");
  ASSERT_NE(cthm, nullptr);
  EXPECT_EQ(claim_text(*cthm), "PASS cthm/E7-adj: d1/o = r_c+1 → 10/2 = 5");
  const ClaimRecord* ow = r.find("orbit-weights/E7-adj/a5");
  ASSERT_NE(ow, nullptr);
  EXPECT_TRUE(ow->pass());
  EXPECT_EQ(ow->lhs, "2,2,4,4,6");
  const ClaimRecord* md = r.find("moddegree/E7-adj");
  ASSERT_NE(md, nullptr);
  EXPECT_EQ(md->rhs, "8748");
}

TEST(Verify, JsonSchema) {
  SweepConfig cfg;
  cfg.types = {{Family::A, 1}};
  auto j = nlohmann::json::parse(report_json(run_verification(cfg)));
  ASSERT_FALSE(j["claims"].empty());
  for (const auto& c : j["claims"]) {
    for (const char* k : {"id", "anchor", "group", "params", "lhs", "rhs", "pass"}) EXPECT_TRUE(c.contains(k)) << k;
    EXPECT_TRUE(c["group"].contains("family"));
    EXPECT_TRUE(c["group"].contains("rank"));
    EXPECT_TRUE(c["group"].contains("center"));
    EXPECT_TRUE(c["lhs"].is_string());
  }
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Verify, CorruptedComarkFailsFormIdentityFirst) {
  SweepConfig cfg;
  cfg.types = {{Family::E, 6}, {Family::E, 7}};
  cfg.inject_comark_fault = true;
  VerificationReport r = run_verification(cfg);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.first_failure()->id, "looform/E6-sc");
}

TEST(Verify, FailFastRecordsSkips) {
  SweepConfig cfg;
  cfg.types = {{Family::A, 2}, {Family::E, 6}, {Family::G, 2}};
  cfg.inject_comark_fault = true;
  cfg.fail_fast = true;
  cfg.jobs = 2;
  VerificationReport r = run_verification(cfg);
  EXPECT_GT(r.count(Status::Skip), 0u);
  // everything after the first failing task is a skip record, never silently dropped
  bool seen_skip = false;
  for (const auto& c : r.claims) {
    if (c.status == Status::Skip) seen_skip = true;
    else if (seen_skip) ADD_FAILURE() << "evaluated claim after a skip: " << c.id;
  }
}

TEST(Verify, InvalidConfig) {
  SweepConfig cfg;
  cfg.jobs = 0;
  EXPECT_THROW(run_verification(cfg), ConstructionError);
  SweepConfig bad;
  bad.types = {{Family::E, 5}};
  EXPECT_THROW(run_verification(bad), ConstructionError);
}
