#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "mdyck/enumeration.hpp"
#include "mdyck/sampler.hpp"
#include "oracle.hpp"

using namespace mdyck;

namespace {

template <class Draw>
double uniformity_p_value(std::int64_t m, std::int64_t n, Family family, int runs, Draw&& draw) {
  std::map<std::string, std::size_t> index;
  for (const Path& p : enumerate_all(m, n, family)) index.emplace(p.to_string(), index.size());
  std::vector<std::uint64_t> counts(index.size(), 0);
  for (int k = 0; k < runs; ++k) {
    const auto it = index.find(draw().path.to_string());
    EXPECT_NE(it, index.end());
    if (it != index.end()) ++counts[it->second];
  }
  const std::vector<double> expected(counts.size(), static_cast<double>(runs) / static_cast<double>(counts.size()));
  return chi_square_p_value(chi_square_statistic(counts, expected), static_cast<double>(counts.size() - 1));
}

TEST(Sampler, LengthOneIsAlwaysDown) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CountedBitSource src(seed);
    EXPECT_EQ(sample_mluka(1, 1, src).path.to_string(), "D");
  }
}

TEST(Sampler, RejectsLengthsWithoutPaths) {
  CountedBitSource src(1);
  EXPECT_THROW(sample_mluka(2, 9, src), std::invalid_argument);
  EXPECT_THROW(sample_mluka(2, 0, src), std::invalid_argument);
  EXPECT_THROW(sample_mdyck(2, 7, src), std::invalid_argument);
}

TEST(Sampler, UniformOverSevenPaths) {
  CountedBitSource src(100);
  EXPECT_GT(uniformity_p_value(2, 8, Family::mluka, 70'000, [&] { return sample_mluka(2, 8, src); }), 1e-3);
}

TEST(Sampler, UniformOverTwoDyckLukaPaths) {
  CountedBitSource src(101);
  EXPECT_GT(uniformity_p_value(1, 5, Family::mluka, 50'000, [&] { return sample_mluka(1, 5, src); }), 1e-3);
}

TEST(Sampler, UniformLargerClassWithGrouping) {
  CountedBitSource src(102);
  EXPECT_GT(uniformity_p_value(3, 11, Family::mluka, 60'000, [&] { return sample_mluka(3, 11, src, 4); }),
            1e-3);
}

TEST(DyckSampler, Uniform) {
  CountedBitSource src(103);
  EXPECT_GT(uniformity_p_value(2, 6, Family::mdyck_path, 30'000, [&] { return sample_mdyck(2, 6, src); }), 1e-3);
  EXPECT_GT(uniformity_p_value(1, 4, Family::mdyck_path, 20'000, [&] { return sample_mdyck(1, 4, src); }), 1e-3);
  EXPECT_EQ(sample_mdyck(1, 0, src).path.size(), 0);
}

// After i iterations the prefix is drawn with probability proportional to
// m^{h_bar}.
TEST(Sampler, LoopInvariantWeights) {
  constexpr std::int64_t kM = 2;
  constexpr std::int64_t kI = 4;
  std::map<std::string, std::size_t> index;
  std::vector<double> weight;
  for (const Path& p : enumerate_all(kM, kI, Family::mdyck_prefix)) {
    index.emplace(p.to_string(), index.size());
    weight.push_back(static_cast<double>(oracle::ipow(kM, reduced_form(p).h_bar)));
  }
  double total = 0;
  for (double w : weight) total += w;

  constexpr int kRuns = 100'000;
  std::vector<std::uint64_t> counts(index.size(), 0);
  CountedBitSource src(104);
  for (int k = 0; k < kRuns; ++k) {
    LukaSampler sampler(kM, 7, src);
    for (std::int64_t i = 0; i < kI; ++i) {
      sampler.step();
      ASSERT_TRUE(is_mdyck_prefix(sampler.path()));
    }
    ++counts[index.at(sampler.path().to_string())];
  }
  std::vector<double> expected;
  for (double w : weight) expected.push_back(kRuns * w / total);
  EXPECT_GT(chi_square_p_value(chi_square_statistic(counts, expected), static_cast<double>(counts.size() - 1)),
            1e-3);
}

TEST(Sampler, EveryIterationKeepsAPrefix) {
  CountedBitSource src(105);
  for (std::int64_t m = 1; m <= 4; ++m) {
    const std::int64_t n = 1000 * (m + 1) + 1;
    LukaSampler sampler(m, n, src);
    for (std::int64_t i = 0; i < n; ++i) {
      sampler.step();
      ASSERT_TRUE(is_mdyck_prefix(sampler.path()));
      ASSERT_EQ(sampler.iteration(), i + 1);
    }
    const SampleReport rep = sampler.finish();
    EXPECT_TRUE(is_mluka(rep.path));
    EXPECT_EQ(rep.path.size(), n);
    EXPECT_EQ(rep.height_final, height(rep.path));
    EXPECT_GE(rep.prefix_height, 0);
  }
}

TEST(Sampler, DeterministicForSeed) {
  for (int g : {1, 3}) {
    CountedBitSource a(55);
    CountedBitSource b(55);
    const SampleReport x = sample_mluka(3, 5001, a, g);
    const SampleReport y = sample_mluka(3, 5001, b, g);
    EXPECT_EQ(x.path, y.path);
    EXPECT_EQ(x.bits_consumed, y.bits_consumed);
    EXPECT_EQ(x.memory_accesses, y.memory_accesses);
    EXPECT_EQ(x.unfold_events, y.unfold_events);
  }
}

// Accesses are one per step plus the suffix length of every unfold and of
// the final fold.
TEST(Sampler, AccessAccountingFromEvents) {
  CountedBitSource src(106);
  for (int k = 0; k < 200; ++k) {
    const SampleReport rep = sample_mluka(2, 301, src);
    std::uint64_t expected = 301;
    for (const auto& e : rep.unfold_events) {
      ASSERT_GE(e.point, 1);
      ASSERT_LE(e.point, e.iteration);
      ASSERT_NE(e.iteration % 3, 0);
      expected += static_cast<std::uint64_t>(e.iteration - e.point + 1);
    }
    ASSERT_GE(rep.memory_accesses, expected + 1);
    ASSERT_LE(rep.memory_accesses, expected + 301);
  }
}

TEST(Sampler, FairCoinBitsAreLengthPlusPointing) {
  constexpr std::int64_t kN = 100'001;
  CountedBitSource src(107);
  double excess = 0;
  constexpr int kRuns = 50;
  for (int k = 0; k < kRuns; ++k) {
    const SampleReport rep = sample_mluka(1, kN, src);
    ASSERT_GE(rep.bits_consumed, static_cast<std::uint64_t>(kN));
    excess += static_cast<double>(rep.bits_consumed - kN);
  }
  const double log_n = std::log2(static_cast<double>(kN));
  EXPECT_LT(excess / kRuns, log_n * log_n);
}

TEST(CostExperiment, IndependentOfThreadCount) {
  const CostTable one = run_cost_experiment({2, 2000, 40, 9, 1, 1});
  const CostTable three = run_cost_experiment({2, 2000, 40, 9, 1, 3});
  EXPECT_EQ(one.bits, three.bits);
  EXPECT_EQ(one.accesses, three.accesses);
  EXPECT_EQ(one.branch_counts, three.branch_counts);
  EXPECT_DOUBLE_EQ(one.accesses_per_step.mean(), three.accesses_per_step.mean());
  EXPECT_THROW(run_cost_experiment({2, 2001, 10, 9, 1, 1}), std::invalid_argument);
}

TEST(CostExperiment, FirstBranchIsACoinFlip) {
  const CostTable t = run_cost_experiment({1, 11, 40'000, 12, 1, 1});
  EXPECT_DOUBLE_EQ(branch_probability(1, 1), 0.5);
  EXPECT_NEAR(t.branch_frequency(1), 0.5, 3 * std::sqrt(0.25 / 40'000));
  EXPECT_EQ(t.branch_counts[2], 0U);
  EXPECT_DOUBLE_EQ(branch_probability(1, 3), 0.25);
  EXPECT_NEAR(t.branch_frequency(3), 0.25, 3 * std::sqrt(0.1875 / 40'000));
}

// M_n = n + (unfold part) + (fold part); the parts tend to X and U.
TEST(CostSplit, UnfoldAndFoldMarginals) {
  constexpr std::int64_t kN = 1000;
  constexpr int kRuns = 20'000;
  RunningStats unfold_part, fold_part;
  CountedBitSource src(108);
  for (int k = 0; k < kRuns; ++k) {
    const SampleReport rep = sample_mluka(2, kN + 1, src);
    double unfold_cells = 0;
    for (const auto& e : rep.unfold_events) unfold_cells += static_cast<double>(e.iteration - e.point + 1);
    const double fold_cells = static_cast<double>(rep.memory_accesses) - static_cast<double>(kN + 1) - unfold_cells;
    unfold_part.add(unfold_cells / kN);
    fold_part.add(fold_cells / kN);
  }
  EXPECT_NEAR(unfold_part.mean(), 0.25, 0.007);
  EXPECT_NEAR(unfold_part.variance(), 1.0 / 12.0, 0.006);
  EXPECT_NEAR(fold_part.mean(), 0.5, 0.007);
  EXPECT_NEAR(fold_part.variance(), 1.0 / 12.0, 0.003);
}

TEST(BranchProbability, Formula) {
  EXPECT_DOUBLE_EQ(branch_probability(2, 3), 0.0);
  EXPECT_DOUBLE_EQ(branch_probability(2, 4), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(branch_probability(3, 7), 3.0 / 24.0);
}

}  // namespace
