#include <gtest/gtest.h>

#include <sstream>

#include "rootsum/audit.hpp"
#include "rootsum/report.hpp"

using namespace rootsum;

TEST(CauchyDavenport, Examples) {
  const ResidueSet a{1, 3, 9, 5, 4};
  EXPECT_TRUE(cauchy_davenport_check(11, a, a));
  EXPECT_GE(sumset(11, a, a).size(), 9u);
  EXPECT_TRUE(cauchy_davenport_check(11, {7}, a));
  EXPECT_EQ(sumset(11, {7}, a).size(), a.size());

  const ResidueSet h{1, 12, 5, 8};
  EXPECT_TRUE(cauchy_davenport_layers(13, h, 4));
  const auto layers = iterated_sumsets(13, h, 4);
  ASSERT_EQ(layers.size(), 4u);
  EXPECT_EQ(layers[2].size(), 12u);
  EXPECT_FALSE(std::binary_search(layers[2].begin(), layers[2].end(), 0));
  EXPECT_EQ(layers[3].size(), 13u);
}

TEST(CauchyDavenport, ExhaustiveSmallPrimes) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint32_t ma = 1; ma < (1u << p); ++ma)
      for (std::uint32_t mb = 1; mb < (1u << p); ++mb) {
        ResidueSet a, b;
        for (std::uint64_t i = 0; i < p; ++i) {
          if (ma >> i & 1) a.push_back(i);
          if (mb >> i & 1) b.push_back(i);
        }
        ASSERT_TRUE(cauchy_davenport_check(p, a, b));
      }
  }
}

TEST(IndexBound, Examples) {
  const auto f512 = std::make_shared<const FieldTable>(build_field(2, 9));
  const auto checks = verify_index_bound(f512, 4);
  bool saw7 = false;
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed()) << "d = " << c.d;
    EXPECT_EQ(c.solved, 5u);
    if (c.d == 7) saw7 = true;
  }
  EXPECT_TRUE(saw7);

  const auto f11 = std::make_shared<const FieldTable>(build_field(11, 1));
  for (const auto& c : verify_index_bound(f11, 22)) {
    EXPECT_TRUE(c.passed());
    EXPECT_NE(c.m, 2u);
  }

  const auto f5 = std::make_shared<const FieldTable>(build_field(5, 1));
  for (const auto& c : verify_index_bound(f5, 10)) EXPECT_NE(c.d, 4u);
}

TEST(Audit, PairRecords) {
  const auto r25 = audit_pair(2, 5, 1 << 20);
  EXPECT_EQ(r25.status, PairStatus::Checked);
  bool closed = false, sharp = false;
  for (const auto& c : r25.checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    if (c.name == "closed_form") closed = true;
    if (c.name == "sharp:3_not_weight") sharp = true;
  }
  EXPECT_TRUE(closed);
  EXPECT_TRUE(sharp);

  const auto r134 = audit_pair(13, 4, 1 << 20);
  bool d0 = false;
  for (const auto& c : r134.checks)
    if (c.name == "sharp:d0_not_weight") d0 = c.passed;
  EXPECT_TRUE(d0);

  EXPECT_EQ(audit_pair(2, 59, 1 << 20).status, PairStatus::SkippedCap);
}

TEST(Audit, SmallSweepPasses) {
  AuditOptions opts;
  opts.p_max = 7;
  opts.m_max = 20;
  opts.solve_field_max = 1 << 10;
  const auto rep = sweep(opts);
  for (const auto& f : rep.failures) ADD_FAILURE() << f.check << " " << f.detail << " " << f.reproduce;
  EXPECT_TRUE(rep.passed());
  EXPECT_GT(rep.counters.pairs_checked, 30u);
  // Deterministic order by (p, m).
  for (std::size_t i = 1; i < rep.pairs.size(); ++i)
    EXPECT_TRUE(std::pair(rep.pairs[i - 1].p, rep.pairs[i - 1].m) <
                std::pair(rep.pairs[i].p, rep.pairs[i].m));
  EXPECT_EQ(audit_json(rep)["passed"], true);
  std::ostringstream tsv;
  write_audit_tsv(tsv, rep);
  EXPECT_NE(tsv.str().find("sound:uniform_index"), std::string::npos);
}
