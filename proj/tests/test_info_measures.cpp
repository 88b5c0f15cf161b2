#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "msulab/error.hpp"
#include "msulab/info_measures.hpp"
#include "oracle.hpp"

using namespace msulab;

namespace {

const std::vector<std::string> kBalanced{"bsp", "bsq", "btp", "btq", "asp", "asq", "atp", "atq"};

std::vector<std::string> with_first(char v) {
  auto rows = kBalanced;
  rows[0][0] = v;
  return rows;
}

}  // namespace

TEST(Entropy, FrequencyVector) {
  const std::uint64_t c[] = {5, 3};
  EXPECT_NEAR(entropy(c).value, 0.954434, 1e-6);
  const std::uint64_t u[] = {2, 2, 2, 2};
  EXPECT_DOUBLE_EQ(entropy(u).value, 2.0);
  const std::uint64_t z[] = {7, 0, 0};
  EXPECT_EQ(entropy(z).value, 0.0);
  EXPECT_FALSE(std::signbit(entropy(z).value));
}

TEST(Entropy, AllZeroThrows) {
  const std::uint64_t z[] = {0, 0};
  EXPECT_THROW(entropy(z), InvalidInput);
  EXPECT_THROW(entropy(std::span<const std::uint64_t>{}), InvalidInput);
}

TEST(CardinalityTables, BalancedIsExactlyZero) {
  const auto s = oracle::to_sample(oracle::encode(kBalanced));
  EXPECT_EQ(msu(s, {0, 1, 2}).value, 0.0);
  EXPECT_EQ(total_correlation(s, {0, 1, 2}).value, 0.0);
  EXPECT_DOUBLE_EQ(joint_entropy(s, {0, 1, 2}).value, 3.0);
}

TEST(CardinalityTables, FlippedValue) {
  const auto cols = oracle::encode(with_first('a'));
  const auto s = oracle::to_sample(cols);
  EXPECT_NEAR(msu(s, {0, 1, 2}).value, oracle::msu(cols), 1e-12);
  EXPECT_NEAR(msu(s, {0, 1, 2}).value, 0.1038, 5e-4);
  EXPECT_DOUBLE_EQ(joint_entropy(s, {0, 1, 2}).value, 2.75);
  EXPECT_NEAR(joint_entropy(s, {0}).value, 0.954434, 1e-6);
  const std::size_t f1[] = {0}, cl[] = {2};
  EXPECT_NEAR(information_gain(s, f1, cl).value, 0.048795, 1e-6);
}

TEST(CardinalityTables, ExtraValue) {
  const auto cols = oracle::encode(with_first('c'));
  const auto s = oracle::to_sample(cols);
  EXPECT_EQ(s.cardinality(0), 3u);
  EXPECT_NEAR(msu(s, {0, 1, 2}).value, oracle::msu(cols), 1e-12);
  EXPECT_NEAR(msu(s, {0, 1, 2}).value, 0.1787, 5e-4);
  // widening the alphabet biases more than flipping a value
  EXPECT_GT(msu(s, {0, 1, 2}).value,
            msu(oracle::to_sample(oracle::encode(with_first('a'))), {0, 1, 2}).value);
}

TEST(ConditionalEntropy, NoisyXorPopulation) {
  // one row per cell of the population table, weighted by 1000 * probability
  std::vector<Column> cols(3, Column{{}, 2});
  for (Code a = 0; a < 2; ++a)
    for (Code b = 0; b < 2; ++b)
      for (Code c = 0; c < 2; ++c) {
        const int w = (c == (a ^ b)) ? 950 : 50;
        for (int i = 0; i < w; ++i) {
          cols[0].codes.push_back(a);
          cols[1].codes.push_back(b);
          cols[2].codes.push_back(c);
        }
      }
  const CategoricalSample s(std::move(cols));
  const std::size_t cls[] = {2}, pair[] = {0, 1};
  EXPECT_NEAR(conditional_entropy(s, cls, pair).value, 0.286397, 1e-6);
  EXPECT_NEAR(msu(s, {0, 1, 2}).value, 0.356801, 1e-6);
  // each attribute alone says nothing about the class
  EXPECT_NEAR(symmetrical_uncertainty(s, 0, 2).value, 0.0, 1e-15);
}

TEST(SymmetricalUncertainty, MatchesOracleAndIsSymmetric) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const auto cols = oracle::random_columns(gen, 2, 1 + gen() % 50,
                                             {1 + static_cast<std::uint32_t>(gen() % 5),
                                              1 + static_cast<std::uint32_t>(gen() % 5)});
    const auto s = oracle::to_sample(cols);
    EXPECT_NEAR(symmetrical_uncertainty(s, 0, 1).value, oracle::su(cols[0], cols[1]), 1e-12);
    EXPECT_EQ(symmetrical_uncertainty(s, 0, 1).value, symmetrical_uncertainty(s, 1, 0).value);
  }
}

TEST(SymmetricalUncertainty, IdenticalColumnsGiveOne) {
  const CategoricalSample s({{{0, 1, 2, 1}, 3}, {{0, 1, 2, 1}, 3}});
  EXPECT_DOUBLE_EQ(symmetrical_uncertainty(s, 0, 1).value, 1.0);
  EXPECT_DOUBLE_EQ(msu(s, {0, 1}).value, 1.0);
}

TEST(Degenerate, ConstantColumns) {
  const CategoricalSample s({{{0, 0, 0}, 1}, {{0, 0, 0}, 4}, {{1, 0, 1}, 2}});
  const auto su = symmetrical_uncertainty(s, 0, 1);
  EXPECT_EQ(su.value, 0.0);
  EXPECT_TRUE(su.degenerate);
  const auto u = msu(s, {0, 1});
  EXPECT_EQ(u.value, 0.0);
  EXPECT_TRUE(u.degenerate);
  // one informative marginal is enough for a proper value
  EXPECT_FALSE(msu(s, {0, 1, 2}).degenerate);
  EXPECT_EQ(msu(s, {0, 1, 2}).value, 0.0);
}

TEST(Degenerate, SingleRow) {
  const CategoricalSample s({{{3}, 5}, {{1}, 2}});
  EXPECT_EQ(joint_entropy(s, {0, 1}).value, 0.0);
  EXPECT_TRUE(msu(s, {0, 1}).degenerate);
}

TEST(Arguments, Rejected) {
  const CategoricalSample s({{{0, 1}, 2}, {{1, 1}, 2}, {{0, 0}, 2}});
  EXPECT_THROW(msu(s, {0}), InvalidInput);
  EXPECT_THROW(total_correlation(s, {1}), InvalidInput);
  EXPECT_THROW(msu(s, {0, 0}), InvalidInput);
  EXPECT_THROW(msu(s, {0, 7}), InvalidInput);
  EXPECT_THROW(joint_entropy(s, std::span<const std::size_t>{}), InvalidInput);
  EXPECT_THROW(symmetrical_uncertainty(s, 1, 1), InvalidInput);
  const std::size_t a[] = {0, 1}, b[] = {1};
  EXPECT_THROW(conditional_entropy(s, a, b), InvalidInput);
}

TEST(Msu, ColumnOrderIrrelevant) {
  const auto cols = oracle::encode(with_first('c'));
  const auto s = oracle::to_sample(cols);
  EXPECT_EQ(msu(s, {0, 1, 2}).value, msu(s, {2, 0, 1}).value);
}

TEST(Msu, LargeCardinalityUsesSparsePath) {
  // 3 columns of cardinality 100000: dense key space far exceeds the rows
  std::mt19937_64 gen(3);
  const auto cols = oracle::random_columns(gen, 3, 500, {100000, 100000, 100000});
  std::vector<Column> declared;
  for (const auto& c : cols) declared.push_back({c, 100000});
  const CategoricalSample s(std::move(declared));
  EXPECT_NEAR(msu(s, {0, 1, 2}).value, oracle::msu(cols), 1e-12);
}

TEST(Msu, HugeRadixIsCompacted) {
  // product of declared cardinalities overflows 64 bits
  std::vector<Column> declared;
  std::vector<std::vector<std::uint32_t>> raw;
  std::mt19937_64 gen(5);
  for (int j = 0; j < 5; ++j) {
    std::vector<std::uint32_t> c(100);
    for (auto& v : c) v = static_cast<std::uint32_t>(gen() % 7) * 600000000u;
    raw.push_back(c);
    declared.push_back({c, 4000000000u});
  }
  const CategoricalSample s(std::move(declared));
  EXPECT_NEAR(msu(s, {0, 1, 2, 3, 4}).value, oracle::msu(raw), 1e-12);
}
