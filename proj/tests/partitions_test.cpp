#include "ocrank/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ocrank {
namespace {

// Knapsack-style counters, independent of the enumerator.
std::vector<long> count_by_dp(int max_n, bool (*allowed)(int), int (*max_mult)(int)) {
  std::vector<long> ways(max_n + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= max_n; ++k) {
    if (!allowed(k)) continue;
    std::vector<long> next(max_n + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
      for (int c = 0; c <= max_mult(k) && c * k <= n; ++c) next[n] += ways[n - c * k];
    }
    ways = next;
  }
  return ways;
}

std::vector<long> p_counts(int max_n) {
  return count_by_dp(max_n, [](int) { return true; }, [](int) { return 1 << 20; });
}
std::vector<long> distinct_counts(int max_n) {
  return count_by_dp(max_n, [](int) { return true; }, [](int) { return 1; });
}
std::vector<long> no_rep_odd_counts(int max_n) {
  return count_by_dp(max_n, [](int) { return true; }, [](int k) { return k % 2 == 1 ? 1 : 1 << 20; });
}
std::vector<long> overpartition_counts(int max_n) {
  const auto d = distinct_counts(max_n);
  const auto p = p_counts(max_n);
  std::vector<long> out(max_n + 1, 0);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) out[n] += d[k] * p[n - k];
  }
  return out;
}

// Columns minus rows of the 2-modular diagram, built row by row.
int two_modular_rank(const Partition& p) {
  std::vector<std::vector<int>> rows;
  for (int k : p.parts()) {
    std::vector<int> row(k / 2, 2);
    if (k % 2 == 1) row.push_back(1);
    rows.push_back(row);
  }
  std::size_t columns = 0;
  for (const auto& row : rows) columns = std::max(columns, row.size());
  return static_cast<int>(columns) - static_cast<int>(rows.size());
}

Overpartition op(std::vector<int> over, std::vector<int> plain) {
  return Overpartition{Partition(std::move(over)), Partition(std::move(plain))};
}

TEST(PartitionTest, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1, 1}).sum(), 5);
  EXPECT_EQ(Partition().sum(), 0);
}

TEST(GenPartitionsTest, SevenPartitionsOfFive) {
  const auto parts = gen_partitions(5, PartitionClass::unrestricted);
  const std::vector<Partition> expected{Partition({5}),       Partition({4, 1}),       Partition({3, 2}),
                                        Partition({3, 1, 1}), Partition({2, 2, 1}),    Partition({2, 1, 1, 1}),
                                        Partition({1, 1, 1, 1, 1})};
  EXPECT_EQ(parts, expected);
}

TEST(GenPartitionsTest, ZeroGivesEmptyPartitionInEveryClass) {
  for (auto cls : {PartitionClass::unrestricted, PartitionClass::distinct, PartitionClass::odd, PartitionClass::even,
                   PartitionClass::distinct_odd, PartitionClass::no_repeated_odd}) {
    const auto parts = gen_partitions(0, cls);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_TRUE(parts[0].empty());
  }
  EXPECT_THROW(gen_partitions(-1, PartitionClass::unrestricted), std::invalid_argument);
}

TEST(GenPartitionsTest, NoRepeatedOddOfFour) {
  const std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2})};
  EXPECT_EQ(gen_partitions(4, PartitionClass::no_repeated_odd), expected);
}

TEST(GenPartitionsTest, ClassMembershipOrderAndCounts) {
  const int max_n = 22;
  const auto p = p_counts(max_n);
  const auto d = distinct_counts(max_n);
  const auto nro = no_rep_odd_counts(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (auto cls : {PartitionClass::unrestricted, PartitionClass::distinct, PartitionClass::odd, PartitionClass::even,
                     PartitionClass::distinct_odd, PartitionClass::no_repeated_odd}) {
      const auto parts = gen_partitions(n, cls);
      EXPECT_TRUE(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
      EXPECT_EQ(std::set<Partition>(parts.begin(), parts.end()).size(), parts.size());
      for (const auto& part : parts) {
        EXPECT_EQ(part.sum(), n);
        EXPECT_TRUE(belongs_to(part, cls));
      }
    }
    EXPECT_EQ(static_cast<long>(gen_partitions(n, PartitionClass::unrestricted).size()), p[n]);
    EXPECT_EQ(static_cast<long>(gen_partitions(n, PartitionClass::distinct).size()), d[n]);
    // Euler: distinct parts and odd parts are equinumerous.
    EXPECT_EQ(static_cast<long>(gen_partitions(n, PartitionClass::odd).size()), d[n]);
    EXPECT_EQ(static_cast<long>(gen_partitions(n, PartitionClass::no_repeated_odd).size()), nro[n]);
  }
}

TEST(GenOverpartitionsTest, Counts) {
  EXPECT_EQ(gen_overpartitions(4).size(), 14u);
  EXPECT_EQ(gen_overpartitions(3).size(), 8u);
  const auto zero = gen_overpartitions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].overlined.empty() && zero[0].plain.empty());

  const auto expected = overpartition_counts(14);
  for (int n = 0; n <= 14; ++n) {
    const auto ops = gen_overpartitions(n);
    EXPECT_EQ(static_cast<long>(ops.size()), expected[n]) << "n=" << n;
    std::set<std::pair<Partition, Partition>> seen;
    for (const auto& o : ops) {
      EXPECT_TRUE(o.overlined.has_distinct_parts());
      EXPECT_EQ(o.sum(), n);
      seen.emplace(o.overlined, o.plain);
    }
    EXPECT_EQ(seen.size(), ops.size());
  }
}

TEST(GenOverpartitionsTest, RowOrderOfOverpartitionsOfThree) {
  std::vector<std::string> shown;
  for (const auto& o : gen_overpartitions(3)) shown.push_back(o.to_string());
  const std::vector<std::string> expected{"3", "3̅", "2+1", "2̅+1", "2+1̅", "2̅+1̅",
                                          "1+1+1", "1̅+1+1"};
  EXPECT_EQ(shown, expected);
}

TEST(TripleTest, Examples) {
  EXPECT_EQ(to_triple(op({}, {2, 1})), (OverTriple{Partition(), Partition({2}), Partition({1})}));
  EXPECT_EQ(to_triple(op({3, 1}, {})), (OverTriple{Partition({3, 1}), Partition(), Partition()}));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& o : gen_overpartitions(n)) {
      const OverTriple t = to_triple(o);
      EXPECT_TRUE(belongs_to(t.plain_even, PartitionClass::even));
      EXPECT_TRUE(belongs_to(t.plain_odd, PartitionClass::odd));
      EXPECT_EQ(from_triple(t), o);
    }
  }
}

TEST(StatisticTest, Crank) {
  EXPECT_EQ(crank(Partition({5})), 5);
  EXPECT_EQ(crank(Partition({2, 1, 1, 1})), -3);
  EXPECT_THROW(crank(Partition()), std::invalid_argument);

  std::vector<int> cranks;
  for (const auto& p : gen_partitions(5, PartitionClass::unrestricted)) cranks.push_back(crank(p));
  EXPECT_EQ(cranks, (std::vector<int>{5, 0, 3, -1, 1, -3, -5}));
  const CountTable residues = count_residue(5, Statistic::crank, 5);
  EXPECT_EQ(residues.at(0), 3);
  EXPECT_EQ(residues.at(1), 1);
}

TEST(StatisticTest, Rank) {
  EXPECT_EQ(rank(Partition({5})), 4);
  EXPECT_EQ(rank(Partition({1, 1, 1, 1, 1})), -4);
  EXPECT_THROW(rank(Partition()), std::invalid_argument);
  const CountTable residues = count_residue(5, Statistic::rank, 5);
  EXPECT_EQ(residues.at(1), 2);
  EXPECT_EQ(residues.at(2), 1);
}

TEST(StatisticTest, Lambda) {
  EXPECT_EQ(lambda_stat(Partition({3})), 1);
  EXPECT_EQ(lambda_stat(Partition({2, 1})), 0);
  EXPECT_EQ(lambda_stat(Partition()), 0);
  EXPECT_EQ(lambda_stat(Partition({1})), 1);
  EXPECT_EQ(lambda_stat(Partition({5, 3})), 1);
  EXPECT_THROW(lambda_stat(Partition({2, 2})), std::invalid_argument);
}

TEST(StatisticTest, Kappa) {
  EXPECT_EQ(kappa_stat(Partition({4})), 1);
  EXPECT_EQ(kappa_stat(Partition({3, 1})), 0);
  EXPECT_EQ(kappa_stat(Partition({1})), 0);
  EXPECT_EQ(kappa_stat(Partition({2})), 1);
  EXPECT_EQ(kappa_stat(Partition({5, 3})), 0);
  EXPECT_EQ(kappa_stat(Partition({5, 2})), 1);
  EXPECT_THROW(kappa_stat(Partition()), std::invalid_argument);
  EXPECT_THROW(kappa_stat(Partition({3, 3})), std::invalid_argument);
}

TEST(StatisticTest, Theta) {
  EXPECT_EQ(theta_stat(Partition({1})), 0);
  EXPECT_EQ(theta_stat(Partition({3})), 1);
  EXPECT_EQ(theta_stat(Partition({5, 3})), 0);
  EXPECT_EQ(theta_stat(Partition({7, 3})), 1);
  EXPECT_EQ(theta_stat(Partition()), 0);
  EXPECT_THROW(theta_stat(Partition({2})), std::invalid_argument);
  EXPECT_THROW(theta_stat(Partition({3, 3})), std::invalid_argument);
}

TEST(StatisticTest, Crank1MatchesWorkedTable) {
  EXPECT_EQ(crank1(op({2}, {1})), -1);
  EXPECT_EQ(crank1(op({3}, {})), 1);
  EXPECT_EQ(crank1(op({}, {})), 0);
  std::vector<int> values;
  for (const auto& o : gen_overpartitions(3)) values.push_back(crank1(o));
  EXPECT_EQ(values, (std::vector<int>{3, 1, 0, -1, 2, 0, -3, -2}));
}

TEST(StatisticTest, Crank2MatchesWorkedTable) {
  EXPECT_EQ(crank2(op({2}, {2})), -1);
  EXPECT_EQ(crank2(op({2}, {1, 1})), 1);
  EXPECT_EQ(crank2(op({}, {4})), 2);
  EXPECT_EQ(crank2(op({}, {})), 0);
  std::vector<int> values;
  for (const auto& o : gen_overpartitions(4)) values.push_back(crank2(o));
  EXPECT_EQ(values, (std::vector<int>{2, 1, 0, 1, 0, 0, -2, -1, -1, 1, -1, 0, 0, 0}));
}

TEST(StatisticTest, M2CrankAndRank) {
  EXPECT_EQ(m2crank(NoRepOddPair::split(Partition({4}))), 2);
  EXPECT_EQ(m2crank(NoRepOddPair::split(Partition({3, 1}))), 0);
  EXPECT_EQ(m2crank(NoRepOddPair::split(Partition({2, 2}))), -2);
  EXPECT_EQ(m2rank(NoRepOddPair::split(Partition({4}))), 1);
  EXPECT_EQ(m2rank(NoRepOddPair::split(Partition({3, 1}))), 0);
  EXPECT_EQ(m2rank(NoRepOddPair::split(Partition({2, 2}))), -1);
  EXPECT_THROW(m2rank(NoRepOddPair{}), std::invalid_argument);
  EXPECT_THROW(NoRepOddPair::split(Partition({3, 3})), std::invalid_argument);
}

TEST(StatisticTest, M2RankAgreesWithTwoModularDiagram) {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : gen_partitions(n, PartitionClass::no_repeated_odd)) {
      EXPECT_EQ(m2rank(NoRepOddPair::split(p)), two_modular_rank(p)) << p.to_string();
    }
  }
}

TEST(StatisticTest, RankOver) {
  EXPECT_EQ(rank_over(op({3}, {1})), 1);
  EXPECT_EQ(rank_over(op({}, {1})), 0);
  EXPECT_EQ(rank_over(op({1}, {})), 0);
  EXPECT_THROW(rank_over(op({}, {})), std::invalid_argument);
  const CountTable residues = count_residue(4, Statistic::rank_over, 5);
  EXPECT_EQ(residues.at(0), 2);
  EXPECT_EQ(residues.at(1), 4);
  EXPECT_EQ(residues.at(2), 2);
  EXPECT_EQ(residues.at(0) + residues.at(1) - 2 * residues.at(2), 2);
  EXPECT_EQ(count_residue(1, Statistic::rank_over, 5).at(0), 2);
}

TEST(CountTest, StatisticExamples) {
  auto expect_table = [](const CountTable& t, std::map<int, long> expected) {
    std::map<int, BigInt> big;
    for (auto [m, c] : expected) big.emplace(m, c);
    EXPECT_EQ(t.counts, big) << t.statistic << " n=" << t.n;
  };
  expect_table(count_statistic(3, Statistic::crank1), {{-3, 1}, {-2, 1}, {-1, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}});
  expect_table(count_statistic(4, Statistic::crank2), {{-2, 1}, {-1, 3}, {0, 6}, {1, 3}, {2, 1}});
  expect_table(count_statistic(4, Statistic::m2crank), {{-2, 1}, {0, 1}, {2, 1}});
  expect_table(count_statistic(1, Statistic::crank), {{-1, 1}});
  for (Statistic s : all_statistics()) expect_table(count_statistic(0, s), {{0, 1}});
  EXPECT_THROW(count_statistic(-1, Statistic::crank), std::invalid_argument);
}

TEST(CountTest, ResidueExamples) {
  const CountTable t = count_residue(5, Statistic::crank, 5);
  EXPECT_EQ(t.counts, (std::map<int, BigInt>{{0, 3}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  EXPECT_EQ(count_residue(1, Statistic::rank_over, 5).counts,
            (std::map<int, BigInt>{{0, 2}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  EXPECT_EQ(count_residue(0, Statistic::crank, 5).counts,
            (std::map<int, BigInt>{{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  EXPECT_THROW(count_residue(3, Statistic::crank, 0), std::invalid_argument);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(count_residue(n, Statistic::crank2, 7).total(), count_statistic(n, Statistic::crank2).total());
  }
}

TEST(CountTest, StatisticNames) {
  for (Statistic s : all_statistics()) EXPECT_EQ(parse_statistic(statistic_name(s)), s);
  EXPECT_THROW(parse_statistic("spt"), std::invalid_argument);
}

TEST(BloTest, Examples) {
  EXPECT_EQ(blo_modified_count(3).counts,
            (std::map<int, BigInt>{{-3, 1}, {-2, 1}, {-1, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(blo_modified_count(1).counts, (std::map<int, BigInt>{{-1, 1}, {0, 0}, {1, 1}}));
  EXPECT_EQ(blo_modified_count(0).counts, (std::map<int, BigInt>{{0, 1}}));

  // Unadjusted plain-part cranks of the overpartitions of 3 other than 2-bar+1.
  std::vector<int> pre;
  for (const auto& o : gen_overpartitions(3)) {
    if (o.plain == Partition({1})) continue;
    pre.push_back(o.plain.empty() ? 0 : crank(o.plain));
  }
  EXPECT_EQ(pre, (std::vector<int>{3, 0, 0, 2, 0, -3, -2}));
}

TEST(CountProperties, SymmetrySupportAndColumnSums) {
  const int max_n = 16;
  const auto p = p_counts(max_n);
  const auto pbar = overpartition_counts(max_n);
  const auto nro = no_rep_odd_counts(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (Statistic s : all_statistics()) {
      const CountTable t = count_statistic(n, s);
      // The two anomalies: crank({1}) = -1 and M2crank({2}) = crank({1}) = -1.
      const bool anomaly = (s == Statistic::crank && n == 1) || (s == Statistic::m2crank && n == 2);
      for (const auto& [m, c] : t.counts) {
        if (!anomaly) EXPECT_EQ(t.at(-m), c) << statistic_name(s) << " n=" << n << " m=" << m;
        EXPECT_LE(std::abs(m), n);
        EXPECT_GT(c, 0);
      }
      const long expected = family_of(s) == ObjectFamily::partitions        ? p[n]
                            : family_of(s) == ObjectFamily::overpartitions ? pbar[n]
                                                                           : nro[n];
      EXPECT_EQ(t.total(), expected) << statistic_name(s) << " n=" << n;
    }
    const CountTable blo = blo_modified_count(n);
    EXPECT_EQ(blo.total(), pbar[n]);
    for (const auto& [m, c] : blo.counts) EXPECT_EQ(blo.at(-m), c);
  }
}

}  // namespace
}  // namespace ocrank
