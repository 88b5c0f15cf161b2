#include "msulab/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "msulab/error.hpp"

namespace msulab {

namespace {

// Summation runs over ascending counts so the result depends only on the
// multiset of counts: relabelling codes or permuting rows is bit-exact.
double entropy_bits(std::vector<std::uint64_t> counts) {
  std::sort(counts.begin(), counts.end());
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw InvalidInput("entropy of an all-zero frequency vector");
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;  // no -0.0
}

double column_entropy(const CategoricalSample& s, std::size_t j) {
  const std::size_t one[] = {j};
  return entropy_bits(joint_counts(s, one));
}

// Ascending order again, so column order does not matter either.
double marginal_sum(const CategoricalSample& s, const std::vector<std::size_t>& subset) {
  std::vector<double> h;
  for (auto j : subset) h.push_back(column_entropy(s, j));
  std::sort(h.begin(), h.end());
  double sum = 0.0;
  for (auto v : h) sum += v;
  return sum;
}

double subset_entropy(const CategoricalSample& s, ColumnSet cols) {
  return entropy_bits(joint_counts(s, cols));
}

std::vector<std::size_t> union_disjoint(const CategoricalSample& s, ColumnSet x, ColumnSet y) {
  const auto nx = normalize_subset(s, x);
  const auto ny = normalize_subset(s, y);
  std::vector<std::size_t> both;
  std::set_union(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(both));
  if (both.size() != nx.size() + ny.size())
    throw InvalidInput("x and y column subsets must be disjoint");
  return both;
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

MeasureValue entropy(std::span<const std::uint64_t> counts) {
  return {entropy_bits(std::vector<std::uint64_t>(counts.begin(), counts.end())), false};
}

MeasureValue joint_entropy(const CategoricalSample& sample, ColumnSet cols) {
  return {subset_entropy(sample, cols), false};
}

MeasureValue conditional_entropy(const CategoricalSample& sample, ColumnSet x_cols,
                                 ColumnSet y_cols) {
  const auto xy = union_disjoint(sample, x_cols, y_cols);
  return {subset_entropy(sample, xy) - subset_entropy(sample, y_cols), false};
}

MeasureValue information_gain(const CategoricalSample& sample, ColumnSet x_cols,
                              ColumnSet y_cols) {
  const auto xy = union_disjoint(sample, x_cols, y_cols);
  const double hx = subset_entropy(sample, x_cols);
  const double hy = subset_entropy(sample, y_cols);
  return {(hx + hy) - subset_entropy(sample, xy), false};
}

MeasureValue symmetrical_uncertainty(const CategoricalSample& sample, std::size_t x_col,
                                     std::size_t y_col) {
  if (x_col == y_col) throw InvalidInput("symmetrical uncertainty needs two distinct columns");
  const std::size_t pair[] = {x_col, y_col};
  const double hx = column_entropy(sample, x_col);
  const double hy = column_entropy(sample, y_col);
  const double hsum = hx + hy;
  if (hsum == 0.0) return {0.0, true};
  const double ig = hsum - subset_entropy(sample, pair);
  return {clamp_unit(2.0 * ig / hsum), false};
}

MeasureValue total_correlation(const CategoricalSample& sample, ColumnSet cols) {
  const auto subset = normalize_subset(sample, cols);
  if (subset.size() < 2) throw InvalidInput("total correlation needs at least two columns");
  const double hsum = marginal_sum(sample, subset);
  return {hsum - subset_entropy(sample, subset), false};
}

MeasureValue msu(const CategoricalSample& sample, ColumnSet cols) {
  const auto subset = normalize_subset(sample, cols);
  if (subset.size() < 2) throw InvalidInput("MSU needs at least two columns");
  const double n = static_cast<double>(subset.size());
  const double hsum = marginal_sum(sample, subset);
  if (hsum == 0.0) return {0.0, true};
  const double tc = hsum - subset_entropy(sample, subset);
  return {clamp_unit(n / (n - 1.0) * (tc / hsum)), false};
}

}  // namespace msulab
