#include <gtest/gtest.h>

#include "rrc/partition.hpp"

using namespace rrc;

namespace {

// Oracle: partitions of m into parts <= k, by the classic two-index recurrence.
std::vector<Integer> partition_counts(int max_m) {
  std::vector<Integer> p(max_m + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= max_m; ++part)
    for (int m = part; m <= max_m; ++m) p[m] += p[m - part];
  return p;
}

}  // namespace

TEST(RRSubpartition, Examples) {
  EXPECT_EQ(rr_subpartition(Partition({8, 5, 3, 2, 2, 1, 1, 1})), 3);
  EXPECT_EQ(rr_subpartition(Partition({8, 8, 2, 2, 1, 1, 1})), 0);
  EXPECT_EQ(rr_subpartition(Partition({5})), 1);
  EXPECT_EQ(rr_subpartition(Partition({2, 2, 1})), 0);
  EXPECT_EQ(rr_subpartition(Partition({4, 1})), 2);
  EXPECT_EQ(rr_subpartition(Partition({3, 2})), 1);
  EXPECT_EQ(rr_subpartition(Partition({3, 3})), 0);
  EXPECT_EQ(rr_subpartition(Partition({3, 1, 1})), 1);
}

TEST(RRSubpartition, RejectsInvalidPartitions) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
}

TEST(BruteForce, WorkedExample) {
  const auto prof = a1_bruteforce(5);
  EXPECT_EQ(prof.counts.at(1), 4);
  EXPECT_EQ(prof.counts.at(2), 1);
  EXPECT_EQ(prof.a1, 6);
  EXPECT_EQ(prof.total(), 7);
}

TEST(BruteForce, SmallCases) {
  EXPECT_EQ(a1_bruteforce(1).a1, 1);
  EXPECT_EQ(a1_bruteforce(4).a1, 4);
  EXPECT_THROW(a1_bruteforce(kBruteForceBound + 1), BoundExceeded);
  EXPECT_THROW(a1_bruteforce(0), std::invalid_argument);
}

TEST(BruteForce, AgreesWithSeriesAndCountsAllPartitions) {
  const auto series = a1_series(Precision(61));
  const auto p = partition_counts(60);
  for (int m = 1; m <= 60; ++m) {
    const auto prof = a1_bruteforce(m);
    ASSERT_EQ(series.coeff(m), prof.a1) << m;
    ASSERT_EQ(Integer(prof.total()), p[m]) << m;
    std::int64_t weighted = 0;
    for (const auto& [l, c] : prof.counts) weighted += l * c;
    ASSERT_EQ(weighted, prof.a1);
  }
}

TEST(PartitionTable, MatchesOracle) {
  const auto want = partition_counts(400);
  const PartitionTable t(400);
  for (int m = 0; m <= 400; ++m) ASSERT_EQ(t.p(m), want[m]) << m;
  EXPECT_EQ(p_of(0), 1);
  EXPECT_EQ(p_of(5), 7);
  EXPECT_EQ(p_of(23), 1255);
}

TEST(Series, A1Examples) {
  const auto s = a1_series(Precision(30));
  EXPECT_EQ(s.coeff(1), 1);
  EXPECT_EQ(s.coeff(4), 4);
  EXPECT_EQ(s.coeff(5), 6);
  EXPECT_EQ(s.coeff(0), 0);
}

TEST(Series, AExamples) {
  const auto a = a_series(Precision(30));
  EXPECT_EQ(a.coeff(0), 1);
  EXPECT_EQ(a.coeff(4), 13);
  EXPECT_EQ(a.coeff(5), 19);
}

TEST(Identities, TwiceA1IsAMinusP) {
  const std::int64_t depth = 250;
  const auto a = a_series(Precision(depth));
  const auto a1 = a1_series(Precision(depth));
  const auto p = partition_counts(depth);
  for (int m = 1; m < depth; ++m) ASSERT_EQ(2 * a1.coeff(m), a.coeff(m) - p[m]) << m;
}

TEST(Identities, A1IsSumOfShiftedPartitionCounts) {
  const std::int64_t depth = 300;
  const auto a1 = a1_series(Precision(depth));
  const auto p = partition_counts(depth);
  const PartitionTable t(depth - 1);
  for (int m = 1; m < depth; ++m) {
    Integer sum = 0;
    for (int r = 1; r * r <= m; ++r) sum += p[m - r * r];
    ASSERT_EQ(a1.coeff(m), sum) << m;
    ASSERT_EQ(t.a1(m), sum) << m;
  }
}

TEST(Identities, JacobiTripleProductInstance) {
  const Precision prec(250);
  const auto rhs = divide(euler_product(5, 2, prec),
                          mul(euler_product(2, 1, prec), euler_product(2, 4, prec)));
  const auto lhs = theta_full(prec);
  EXPECT_GE(common_prec(lhs, rhs), 250);
  EXPECT_FALSE(first_mismatch(lhs, rhs).has_value());
}

TEST(Congruence, Arguments) {
  EXPECT_EQ(congruence_arguments(CongruenceTarget::A1, 1, 3), (std::vector<std::int64_t>{24, 49, 74}));
  EXPECT_EQ(congruence_arguments(CongruenceTarget::A1, 2, 1), (std::vector<std::int64_t>{599}));
  EXPECT_EQ(congruence_arguments(CongruenceTarget::P, 1, 2), (std::vector<std::int64_t>{4, 9}));
}

TEST(Congruence, FirstCase) {
  const auto rep = check_congruence(CongruenceTarget::A1, 1, 21, Precision(550));
  ASSERT_EQ(rep.entries.size(), 21u);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.entries[0].m, 24);
  // p(23) + p(20) + p(15) + p(8) = 1255 + 627 + 176 + 22
  EXPECT_EQ(rep.entries[0].value, 2080);
  EXPECT_EQ(rep.entries[0].quotient, 416);
}

TEST(Congruence, SecondPower) {
  const auto rep = check_congruence(CongruenceTarget::A1, 2, 1, Precision(650));
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(rep.entries[0].m, 599);
  EXPECT_TRUE(rep.entries[0].divisible);
  const auto p = partition_counts(599);
  Integer oracle = 0;
  for (int r = 1; r * r <= 599; ++r) oracle += p[599 - r * r];
  EXPECT_EQ(rep.entries[0].value, oracle);
}

TEST(Congruence, Ramanujan) {
  const auto rep = check_congruence(CongruenceTarget::P, 2, 3, Precision(100));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(check_congruence(CongruenceTarget::P, 1, 1, Precision(10)).entries[0].value, 5);
}

TEST(Congruence, InsufficientDepthIsAnError) {
  EXPECT_THROW(check_congruence(CongruenceTarget::A1, 2, 1, Precision(300)), InsufficientPrecision);
}
