#include "singchain/verify.hpp"

#include <gtest/gtest.h>

using namespace singchain;

TEST(TrainLiteral, Conventions) {
  auto v = detail::expand_train_literal("[2,5]-1-[3,2^-2,3]");
  ASSERT_TRUE(v);
  EXPECT_EQ(detail::vehicles_string(*v), "[2,5]");
  v = detail::expand_train_literal("[2,5]-1-[3,2^-1,3]-1-[5,2]");
  ASSERT_TRUE(v);
  EXPECT_EQ(detail::vehicles_string(*v), "[2,5]-1-[4]-1-[5,2]");
  EXPECT_EQ(detail::vehicles_string(detail::mirror(*v)), "[2,5]-1-[4]-1-[5,2]");
  EXPECT_FALSE(detail::expand_train_literal("[3,2^-2,3]"));
  EXPECT_FALSE(detail::expand_train_literal("[2^-1,3]"));
}

TEST(TrainLiteral, Validity) {
  Chain c = parse_chain("[2,4,2,4,2]");
  auto v = detail::expand_train_literal("[2,5]-1-[3,2^-1,3]-1-[5,2]");
  ASSERT_TRUE(v);
  EXPECT_TRUE(detail::listed_train_valid(*v, c));
  EXPECT_EQ(detail::listed_cost(*v, c), 2);
  EXPECT_FALSE(detail::listed_train_valid(*v, parse_chain("[2,4,4,2]")));
}

TEST(Report, Tally) {
  VerifyReport r{"X", {{"a", "match", ""}, {"b", "inconclusive", ""}, {"c", "mismatch", ""}}};
  r.tally();
  EXPECT_EQ(r.match, 1);
  EXPECT_EQ(r.inconclusive, 1);
  EXPECT_EQ(r.mismatch, 1);
  EXPECT_FALSE(r.pass());
}

TEST(Verify, SmallGrids) {
  VerifyOptions o;
  o.budget = 12;
  o.ranges = {{"chi-max", 6}, {"pad-max", 3}};
  auto r = verify_C6(o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.match, 5);  // [4], [5,2], [2,5], [6,2,2], [2,2,6]
  o.ranges = {{"d", 5}};
  o.budget = 24;
  r = verify_C11(o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.match, 1);
  o.ranges = {{"param-max", 2}, {"n-max", 4}};
  r = verify_C8(o);
  EXPECT_TRUE(r.pass());
}

TEST(Verify, CuspFamilies) {
  VerifyOptions o;
  for (const char* id : {"B3", "B4", "B5", "B6"}) {
    auto r = run_verify(id, o);
    EXPECT_TRUE(r.pass()) << id;
    EXPECT_EQ(r.inconclusive, 0) << id;
  }
  EXPECT_THROW(run_verify("C99", o), std::invalid_argument);
}

TEST(Verify, DualInvolutionSmall) {
  for (int r = 2; r <= 7; ++r) {
    auto c = dual_involution_sweep(r, 6);
    EXPECT_EQ(c.failures, 0);
    EXPECT_GT(c.checked, 0);
  }
  // Necklace count for r=3 over 4 letters minus all-2: (64 + 2*4) / 3 - 1 = 23.
  auto c = dual_involution_sweep(3, 5);
  EXPECT_EQ(c.checked + c.skipped, 23);
}

TEST(Verify, ThreadCountDoesNotChangeReport) {
  VerifyOptions a, b;
  a.budget = b.budget = 10;
  a.ranges = b.ranges = {{"chi-max", 5}, {"pad-max", 2}};
  b.threads = 3;
  auto ra = verify_C6(a), rb = verify_C6(b);
  ASSERT_EQ(ra.cases.size(), rb.cases.size());
  for (std::size_t i = 0; i < ra.cases.size(); ++i) {
    EXPECT_EQ(ra.cases[i].params, rb.cases[i].params);
    EXPECT_EQ(ra.cases[i].verdict, rb.cases[i].verdict);
  }
}
