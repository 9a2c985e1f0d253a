#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quadscroll/linear_systems.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace quadscroll;
using namespace testing_helpers;

namespace {

// Oracle rank of the simple-point condition matrix, from raw evaluation.
int oracle_dimension_mod(BiDegree d, const std::vector<QuadricPoint>& pts, long long p) {
  std::vector<std::vector<long long>> rows;
  for (const auto& q : pts) {
    const auto r = raw(q);
    std::vector<long long> row;
    for (int i = 0; i <= d.first; ++i)
      for (int j = 0; j <= d.second; ++j)
        row.push_back(oracle::powmod(r.s, i, p) * oracle::powmod(r.t, d.first - i, p) % p *
                      oracle::powmod(r.u, j, p) % p * oracle::powmod(r.v, d.second - j, p) % p);
    rows.push_back(row);
  }
  const int rk = rows.empty() ? 0 : oracle::rank_mod(rows, p);
  return (d.first + 1) * (d.second + 1) - 1 - rk;
}

std::vector<int> random_ys(std::mt19937_64& rng, int count, int a) {
  std::vector<int> ys;
  for (int i = 0; i < count; ++i) ys.push_back(static_cast<int>(rng() % (static_cast<unsigned>(a) + 1)));
  return ys;
}

}  // namespace

TEST(ConditionMatrix, SpecExamples) {
  const auto F = FieldSpec::prime(10007);
  EXPECT_EQ(condition_matrix({2, 3}, {}, F).rows(), 0u);
  EXPECT_EQ(condition_matrix({2, 3}, {}, F).cols(), 12u);
  const std::vector<VanishingCondition> one = {{qp(F, 1, 2, 1, 3), 1}};
  const auto m1 = condition_matrix({1, 1}, one, F);
  EXPECT_EQ(m1.rows(), 1u);
  EXPECT_EQ(m1.cols(), 4u);
  const std::vector<VanishingCondition> dbl = {{qp(F, 1, 2, 1, 3), 2}};
  const auto m2 = condition_matrix({2, 2}, dbl, F);
  EXPECT_EQ(m2.rows(), 3u);
  EXPECT_EQ(m2.cols(), 9u);
  EXPECT_EQ(rank(m2), 3u);
}

TEST(ConditionMatrix, RejectsBadInput) {
  const auto F = FieldSpec::prime(7);
  const std::vector<VanishingCondition> dup = {{qp(F, 1, 2, 1, 3), 1}, {qp(F, 2, 4, 3, 2), 2}};
  EXPECT_THROW(condition_matrix({1, 1}, dup, F), std::invalid_argument);
  const std::vector<VanishingCondition> triple = {{qp(F, 1, 2, 1, 3), 3}};
  EXPECT_THROW(condition_matrix({1, 1}, triple, F), std::invalid_argument);
  const std::vector<VanishingCondition> other = {{qp(FieldSpec::prime(11), 1, 2, 1, 3), 1}};
  EXPECT_THROW(condition_matrix({1, 1}, other, F), std::invalid_argument);
  EXPECT_THROW(condition_matrix({-1, 1}, {}, F), std::invalid_argument);
}

TEST(SystemDimension, SpecExamples) {
  const auto F = FieldSpec::prime(10007);
  EXPECT_EQ(system_dimension({2, 3}, {}, F), 11);
  const std::vector<VanishingCondition> any = {{qp(F, 1, 2, 1, 3), 2}};
  EXPECT_EQ(system_dimension({-1, 5}, any, F), -1);
  // Three simple points on one horizontal line, bidegree (2,2): 8 - 3 = 5.
  const std::vector<VanishingCondition> three = {
      {qp(F, 1, 4, 1, 0), 1}, {qp(F, 1, 4, 1, 1), 1}, {qp(F, 1, 4, 0, 1), 1}};
  EXPECT_EQ(system_dimension({2, 2}, three, F), 5);
  EXPECT_EQ(oracle_dimension_mod({2, 2}, {three[0].point, three[1].point, three[2].point}, 10007), 5);
}

TEST(SystemDimension, MatchesBruteForceEnumerationOverTinyFields) {
  // Oracle: count every form over F_q satisfying the conditions.
  std::mt19937_64 rng(31);
  for (long long q : {3LL, 5LL}) {
    const auto F = FieldSpec::prime(static_cast<std::uint32_t>(q));
    std::vector<QuadricPoint> all;
    for (long long a = 0; a <= q; ++a)
      for (long long b = 0; b <= q; ++b)
        all.push_back(QuadricPoint{a == q ? pt(F, 0, 1) : pt(F, 1, a), b == q ? pt(F, 0, 1) : pt(F, 1, b)});
    const std::vector<BiDegree> degrees =
        q == 3 ? std::vector<BiDegree>{{1, 1}, {2, 1}, {1, 2}, {2, 2}} : std::vector<BiDegree>{{1, 1}, {2, 1}, {1, 2}};
    for (const auto& d : degrees) {
      for (int trial = 0; trial < (q == 3 ? 6 : 3); ++trial) {
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t n_simple = rng() % 4, n_double = rng() % 2;
        std::vector<VanishingCondition> conds;
        std::vector<oracle::RawPoint> simple, doubles;
        for (std::size_t i = 0; i < n_simple + n_double; ++i) {
          const int mult = i < n_simple ? 1 : 2;
          conds.push_back({all[i], mult});
          (mult == 1 ? simple : doubles).push_back(raw(all[i]));
        }
        EXPECT_EQ(system_dimension(d, conds, F), oracle::brute_force_dimension(d.first, d.second, q, simple, doubles))
            << "q=" << q << " d=(" << d.first << "," << d.second << ")";
      }
    }
  }
}

TEST(Lemma3, ExpectedDimensionExamples) {
  EXPECT_EQ(lemma3_expected_dim(2, 3, {0, 0, 0}), 11);
  EXPECT_EQ(lemma3_expected_dim(2, 3, {3, 2, 0}), 6);
  EXPECT_EQ(lemma3_expected_dim(0, 4, {2}), 2);
  EXPECT_EQ(lemma3_expected_dim(2, 3, {0, 3, 2}), 6);  // unsorted input is normalized
  EXPECT_THROW(lemma3_expected_dim(2, 3, {4}), std::invalid_argument);
  EXPECT_THROW(lemma3_expected_dim(1, 3, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(lemma3_expected_dim(1, 3, {-1}), std::invalid_argument);
}

TEST(Lemma3, VerifyExamples) {
  const auto F = FieldSpec::prime(10007);
  const auto r1 = lemma3_verify(1, 1, {1, 0}, F, 0);
  EXPECT_EQ(r1.computed_dim, 2);
  EXPECT_TRUE(r1.matches);
  EXPECT_EQ(r1.matrix_shape, (std::pair<std::size_t, std::size_t>{1, 4}));
  const auto r2 = lemma3_verify(2, 2, {2, 1, 0}, F, 0);
  EXPECT_EQ(r2.computed_dim, 5);
  EXPECT_TRUE(r2.matches);
  const auto r3 = lemma3_verify(3, 5, {5, 5, 5, 5}, F, 0);
  EXPECT_EQ(r3.computed_dim, 3);
  EXPECT_TRUE(r3.matches);
  const auto r0 = lemma3_verify(0, 4, {2}, F, 0);
  EXPECT_EQ(r0.computed_dim, 2);
}

TEST(Lemma3, HoldsForRandomInstancesAgainstOracle) {
  // Independent oracle: same sampled points, raw evaluation, textbook rank.
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = static_cast<int>(rng() % 6);
    const int a = static_cast<int>(rng() % 8);
    const auto ys = sorted_degrees(random_ys(rng, k + 1, a));
    const auto placement = trial % 2 ? Placement::generic : Placement::arbitrary;
    const std::uint64_t seed = rng();
    Rng sampler(seed);
    if (placement == Placement::generic &&
        std::accumulate(ys.begin(), ys.end(), 0) > 10008) continue;
    const auto sample = sample_line_divisors(FieldSpec::prime(10007), ys, sampler, placement);
    std::vector<QuadricPoint> pts;
    for (const auto& d : sample.divisors) pts.insert(pts.end(), d.begin(), d.end());
    EXPECT_EQ(oracle_dimension_mod({k, a}, pts, 10007), lemma3_expected_dim(k, a, ys));
    const auto report = lemma3_verify(k, a, ys, FieldSpec::prime(10007), seed, placement);
    EXPECT_TRUE(report.matches) << "k=" << k << " a=" << a;
  }
}

TEST(Lemma3, CharacteristicFreeAcrossFields) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(rng() % 4);
    const int a = 1 + static_cast<int>(rng() % 5);
    const auto ys = random_ys(rng, k + 1, a);
    const std::uint64_t seed = rng();
    const int expected = lemma3_expected_dim(k, a, ys);
    for (const auto& F : {FieldSpec::prime(10007), FieldSpec::prime(499), FieldSpec::prime(7), FieldSpec::rational()}) {
      if (F.is_prime_field() && static_cast<std::uint32_t>(std::max(k + 1, a)) > F.modulus()) continue;
      EXPECT_EQ(lemma3_verify(k, a, ys, F, seed).computed_dim, expected) << F.to_string();
    }
  }
}

TEST(Lemma3, NonGenericPositionsStillMatch) {
  // Every point of every divisor on the same few vertical lines.
  const auto F = FieldSpec::prime(10007);
  std::vector<VanishingCondition> conds;
  const int k = 3, a = 4;
  const std::vector<int> ys = {4, 3, 3, 1};
  for (int i = 0; i < k + 1; ++i)
    for (int j = 0; j < ys[static_cast<std::size_t>(i)]; ++j) conds.push_back({qp(F, 1, i, 1, j), 1});
  EXPECT_EQ(system_dimension({k, a}, conds, F), lemma3_expected_dim(k, a, ys));
}

TEST(SystemDimension, MonotoneAndOrderIndependent) {
  std::mt19937_64 rng(12);
  const auto F = FieldSpec::prime(499);
  for (int trial = 0; trial < 20; ++trial) {
    const BiDegree d{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 4)};
    std::vector<VanishingCondition> conds;
    std::vector<std::string> used;
    int previous = system_dimension(d, conds, F);
    for (int n = 0; n < 8; ++n) {
      const auto p = qp(F, 1, rng() % 499, 1, rng() % 499);
      if (std::find(used.begin(), used.end(), p.to_string()) != used.end()) continue;
      used.push_back(p.to_string());
      conds.push_back({p, static_cast<int>(1 + rng() % 2)});
      const int now = system_dimension(d, conds, F);
      const int drop = previous - now;
      EXPECT_GE(drop, 0);
      EXPECT_LE(drop, conds.back().multiplicity == 1 ? 1 : 3);
      if (conds.back().multiplicity == 1) EXPECT_LE(drop, 1);
      previous = now;
    }
    auto shuffled = conds;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(system_dimension(d, shuffled, F), previous);
  }
}

TEST(NodeConfigurationTest, SampleHonoursInvariants) {
  const auto F = FieldSpec::prime(10007);
  const auto cfg = NodeConfiguration::sample(4, 8, {0, 3, 3}, F, 9);
  EXPECT_EQ(cfg.ys(), (std::vector<int>{3, 3, 0}));
  EXPECT_EQ(cfg.y_max(), 3);
  EXPECT_EQ(cfg.total_nodes(), 6);
  EXPECT_EQ(cfg.lines().size(), 3u);
  std::vector<std::string> seconds;
  for (std::size_t i = 0; i < cfg.lines().size(); ++i)
    for (const auto& p : cfg.divisors()[i]) {
      EXPECT_TRUE(cfg.lines()[i].contains(p));
      seconds.push_back(p.second.to_string());
    }
  std::sort(seconds.begin(), seconds.end());
  EXPECT_EQ(std::unique(seconds.begin(), seconds.end()), seconds.end());
  EXPECT_EQ(cfg.node_conditions(2).size(), 6u);
  EXPECT_EQ(cfg.with_a(9).a(), 9);
  // Same seed, same configuration.
  EXPECT_EQ(NodeConfiguration::sample(4, 8, {3, 3, 0}, F, 9).nodes(), cfg.nodes());
}

TEST(NodeConfigurationTest, RejectsInvalidConfigurations) {
  const auto F = FieldSpec::prime(7);
  const Line h0{LineFamily::horizontal, pt(F, 1, 0)};
  const Line h1{LineFamily::horizontal, pt(F, 1, 1)};
  const auto good = [&] { return std::vector<std::vector<QuadricPoint>>{{qp(F, 1, 0, 1, 2)}, {qp(F, 1, 1, 1, 3)}}; };
  EXPECT_NO_THROW(NodeConfiguration(3, 3, {h0, h1}, good(), F));
  EXPECT_THROW(NodeConfiguration(1, 3, {}, {}, F), std::invalid_argument);
  EXPECT_THROW(NodeConfiguration(3, 0, {h0, h1}, good(), F), std::invalid_argument);
  EXPECT_THROW(NodeConfiguration(3, 3, {h0}, {{}}, F), std::invalid_argument);
  EXPECT_THROW(NodeConfiguration(3, 3, {h0, h0}, good(), F), std::invalid_argument);
  EXPECT_THROW(NodeConfiguration(3, 3, {h0, Line{LineFamily::vertical, pt(F, 1, 1)}}, good(), F),
               std::invalid_argument);
  // Point off its line.
  EXPECT_THROW(NodeConfiguration(3, 3, {h0, h1}, {{qp(F, 1, 1, 1, 2)}, {}}, F), std::invalid_argument);
  // Shared vertical line across divisors.
  EXPECT_THROW(NodeConfiguration(3, 3, {h0, h1}, {{qp(F, 1, 0, 1, 2)}, {qp(F, 1, 1, 1, 2)}}, F),
               std::invalid_argument);
  // Repeated point.
  EXPECT_THROW(NodeConfiguration(3, 3, {h0, h1}, {{qp(F, 1, 0, 1, 2), qp(F, 1, 0, 1, 2)}, {}}, F),
               std::invalid_argument);
  EXPECT_THROW(NodeConfiguration::sample(3, 3, {1, 1, 1}, F, 0), std::invalid_argument);
  // F_7 has only 8 points on P^1: 9 generic nodes cannot fit.
  EXPECT_THROW(NodeConfiguration::sample(3, 9, {5, 4}, F, 0), std::invalid_argument);
}

TEST(Sampling, DistinctPointsAndDeterminism) {
  const auto F = FieldSpec::prime(11);
  Rng a(5), b(5);
  const auto pa = sample_distinct_points(F, 12, a);
  const auto pb = sample_distinct_points(F, 12, b);
  EXPECT_EQ(pa, pb);
  auto keys = std::vector<std::string>{};
  for (const auto& p : pa) keys.push_back(p.to_string());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::unique(keys.begin(), keys.end()), keys.end());
  Rng c(1);
  EXPECT_THROW(sample_distinct_points(F, 13, c), std::invalid_argument);
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
  EXPECT_EQ(Rng::derive(1, 0), Rng::derive(1, 0));
  Rng d(2);
  for (int i = 0; i < 100; ++i) EXPECT_LT(d.below(7), 7u);
  EXPECT_THROW(d.below(0), std::invalid_argument);
}
