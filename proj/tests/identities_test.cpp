#include "ocrank/identities.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "ocrank/genfun.hpp"

namespace ocrank {
namespace {

TEST(RegistryTest, ThirteenUniqueIds) {
  const auto& specs = registry();
  ASSERT_EQ(specs.size(), 13u);
  std::set<std::string> ids;
  for (const auto& s : specs) ids.insert(s.id);
  EXPECT_EQ(ids.size(), 13u);
  EXPECT_EQ(find_identity("tenth-phi").progression.residue, 1);
  EXPECT_THROW(find_identity("no-such-identity"), std::invalid_argument);
}

TEST(DiffSeriesTest, ConstantTerms) {
  EXPECT_EQ(diff_series(Statistic::rank_over, 5, {{0, 1}, {2, -1}}, {5, 1}, 0).coeff(0), LaurentPoly(2));
  EXPECT_EQ(diff_series(Statistic::rank_over, 5, {{0, 1}, {1, 1}, {2, -2}}, {5, 4}, 0).coeff(0), LaurentPoly(2));
  EXPECT_EQ(diff_series(Statistic::crank, 5, {{0, 1}, {1, -1}}, {5, 0}, 0).coeff(0), LaurentPoly(1));
  EXPECT_THROW(diff_series(Statistic::rank, 5, {}, {5, 5}, 0), std::invalid_argument);
}

TEST(DiffSeriesTest, MatchesDirectResidueCounts) {
  const QSeries s = diff_series(Statistic::rank, 5, {{1, 3}, {2, -3}}, {5, 0}, 4);
  for (int n = 0; n <= 4; ++n) {
    const CountTable t = count_residue(5 * n, Statistic::rank, 5);
    EXPECT_EQ(s.coeff(n), LaurentPoly::monomial(3 * (t.at(1) - t.at(2)), 0)) << n;
  }
}

TEST(VerifyTest, SpecExamplesHold) {
  EXPECT_TRUE(verify("tenth-phi", 6).holds);
  EXPECT_TRUE(verify("thm-M1", 12).holds);
  EXPECT_TRUE(verify("fifth-order-chi0", 6).holds);
  EXPECT_TRUE(verify("m2rank-X", 6).holds);
}

TEST(VerifyTest, PerturbedRhsMismatchesAtZero) {
  IdentitySpec spec = find_identity("thm-M1");
  spec.rhs_constant = 1;
  const VerificationReport r = verify(spec, 5);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_mismatch.has_value());
  EXPECT_EQ(r.first_mismatch->n, 0u);
  EXPECT_EQ(r.first_mismatch->lhs, LaurentPoly(1));
  EXPECT_EQ(r.first_mismatch->rhs, LaurentPoly(2));
}

TEST(VerifyTest, Monotone) {
  for (const char* id : {"thm-M2", "tenth-psi", "m2-combo-chi"}) {
    for (std::size_t order = 0; order <= 5; ++order) EXPECT_TRUE(verify(id, order).holds) << id << " " << order;
  }
}

TEST(VerifyTest, M2CrankResidualAtTwo) {
  const std::size_t order = 12;
  const QSeries enumerated = tally_series(Statistic::m2crank, order);
  const QSeries series = series_M2(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n == 2) {
      EXPECT_EQ(series.coeff(n) - enumerated.coeff(n), (LaurentPoly{{1, 1}, {0, -1}}));
    } else {
      EXPECT_EQ(series.coeff(n), enumerated.coeff(n)) << n;
    }
  }
  EXPECT_TRUE(verify("thm-M2crank", order).holds);
}

TEST(VerifyTest, BloAdjustedMatchesCrank1) {
  for (int n = 0; n <= 10; ++n) {
    CountTable blo = blo_modified_count(n);
    std::erase_if(blo.counts, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(blo.counts, count_statistic(n, Statistic::crank1).counts) << n;
  }
}

// As registered, the M2-rank identity on 5n+4 comes out with the opposite sign.
TEST(VerifyTest, M2RankChiHasOppositeSign) {
  const IdentitySpec& spec = find_identity("m2rank-chi");
  const QSeries lhs = evaluate_lhs(spec, 9);
  const QSeries rhs = evaluate_rhs(spec, 9);
  EXPECT_EQ(lhs, QSeries::from_integers(9, {0, 1, 1, 1, 2, 2, 1, 2, 3, 3}));
  EXPECT_EQ(lhs, QSeries(9) - rhs);
  const VerificationReport r = verify(spec, 9);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_mismatch.has_value());
  EXPECT_EQ(r.first_mismatch->n, 1u);
}

TEST(VerifyManyTest, ParallelMatchesSerial) {
  std::vector<std::string> ids;
  for (const auto& s : registry()) ids.push_back(s.id);
  const auto serial = verify_many(ids, 4, 1);
  const auto parallel = verify_many(ids, 4, 4);
  ASSERT_EQ(serial.size(), ids.size());
  ASSERT_EQ(parallel.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(serial[i].id, ids[i]);
    EXPECT_EQ(serial[i].to_json(), parallel[i].to_json());
  }
  EXPECT_THROW(verify_many({"thm-M1", "bogus"}, 3, 2), std::invalid_argument);
}

TEST(ReportTest, JsonFormat) {
  VerificationReport ok{"x", 9, true, std::nullopt};
  EXPECT_EQ(ok.to_json(), R"({"id":"x","order":9,"holds":true})");
  VerificationReport bad{"x", 9, false, Mismatch{1, LaurentPoly(1), LaurentPoly(-1)}};
  EXPECT_EQ(bad.to_json(), R"({"id":"x","order":9,"holds":false,"first_mismatch":{"n":1,"lhs":[[0,1]],"rhs":[[0,-1]]}})");
}

TEST(CompareSeriesTest, OrderMismatchThrows) {
  EXPECT_THROW(compare_series("x", QSeries(2), QSeries(3)), std::invalid_argument);
}

}  // namespace
}  // namespace ocrank
