#include "msulab/sample.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "msulab/error.hpp"

namespace msulab {

CategoricalSample::CategoricalSample(std::vector<Column> columns, std::vector<std::string> names) {
  if (columns.empty()) throw InvalidInput("sample needs at least one column");
  rows_ = columns.front().codes.size();
  if (rows_ == 0) throw InvalidInput("sample needs at least one row");
  if (!names.empty() && names.size() != columns.size())
    throw InvalidInput("column_names length must equal the number of columns");

  columns_.reserve(columns.size());
  cards_.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    if (col.codes.size() != rows_) throw InvalidInput("columns differ in length");
    if (col.cardinality == 0) throw InvalidInput("cardinality must be positive");
    for (Code c : col.codes) {
      if (c >= col.cardinality)
        throw InvalidInput("code " + std::to_string(c) + " in column " + std::to_string(j) +
                           " exceeds declared cardinality " + std::to_string(col.cardinality));
    }
    cards_.push_back(col.cardinality);
    columns_.push_back(std::move(col.codes));
  }
  names_ = std::move(names);
}

CategoricalSample CategoricalSample::from_codes(std::vector<std::vector<Code>> columns,
                                                std::vector<std::string> names) {
  std::vector<Column> cols;
  cols.reserve(columns.size());
  for (auto& codes : columns) {
    std::uint32_t card = 0;
    for (Code c : codes) card = std::max<std::uint32_t>(card, c + 1);
    cols.push_back({std::move(codes), card});
  }
  return CategoricalSample(std::move(cols), std::move(names));
}

std::span<const Code> CategoricalSample::column(std::size_t j) const {
  if (j >= columns_.size()) throw InvalidInput("column index out of range");
  return columns_[j];
}

std::uint32_t CategoricalSample::cardinality(std::size_t j) const {
  if (j >= cards_.size()) throw InvalidInput("column index out of range");
  return cards_[j];
}

std::size_t CategoricalSample::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidInput("no column named '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> normalize_subset(const CategoricalSample& sample,
                                          std::span<const std::size_t> cols) {
  if (cols.empty()) throw InvalidInput("column subset must not be empty");
  std::vector<std::size_t> out(cols.begin(), cols.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InvalidInput("column subset contains a repeated index");
  if (out.back() >= sample.cols()) throw InvalidInput("column index out of range");
  return out;
}

namespace {

// Replace keys by their rank among the distinct keys; returns the number of
// distinct keys.
std::uint64_t compact_keys(std::vector<std::uint64_t>& keys) {
  std::vector<std::uint64_t> distinct(keys);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& k : keys)
    k = static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), k) -
                                   distinct.begin());
  return distinct.size();
}

}  // namespace

std::vector<std::uint64_t> joint_counts(const CategoricalSample& sample,
                                        std::span<const std::size_t> cols) {
  const auto subset = normalize_subset(sample, cols);
  const std::size_t m = sample.rows();

  const std::uint64_t dense_limit = 4 * static_cast<std::uint64_t>(m) + (1u << 16);
  if (subset.size() == 1 && sample.cardinality(subset[0]) <= dense_limit) {
    const auto col = sample.column(subset[0]);
    std::vector<std::uint64_t> dense(sample.cardinality(subset[0]), 0);
    for (Code c : col) ++dense[c];
    std::erase(dense, 0);
    return dense;
  }

  // Mixed-radix packing over declared cardinalities; when the radix product
  // would overflow, the partial keys are compacted to ranks (< m) first.
  std::vector<std::uint64_t> keys(m, 0);
  std::uint64_t radix = 1;
  for (std::size_t j : subset) {
    const std::uint64_t card = sample.cardinality(j);
    if (radix > std::numeric_limits<std::uint64_t>::max() / card) radix = compact_keys(keys);
    const auto col = sample.column(j);
    for (std::size_t r = 0; r < m; ++r) keys[r] = keys[r] * card + col[r];
    radix *= card;
  }

  std::vector<std::uint64_t> counts;
  if (radix <= dense_limit) {
    std::vector<std::uint64_t> dense(radix, 0);
    for (auto k : keys) ++dense[k];
    counts.reserve(std::min<std::uint64_t>(radix, m));
    for (auto c : dense)
      if (c != 0) counts.push_back(c);
  } else {
    std::sort(keys.begin(), keys.end());
    for (std::size_t r = 0; r < m;) {
      std::size_t s = r;
      while (s < m && keys[s] == keys[r]) ++s;
      counts.push_back(s - r);
      r = s;
    }
  }
  return counts;
}

JointHistogram JointHistogram::build(const CategoricalSample& sample,
                                     std::span<const std::size_t> cols) {
  JointHistogram h;
  h.column_subset = normalize_subset(sample, cols);
  std::vector<Code> tuple(h.column_subset.size());
  for (std::size_t r = 0; r < sample.rows(); ++r) {
    for (std::size_t t = 0; t < h.column_subset.size(); ++t)
      tuple[t] = sample.column(h.column_subset[t])[r];
    ++h.cell_counts[tuple];
  }
  h.total = sample.rows();
  return h;
}

std::uint64_t JointHistogram::count(const std::vector<Code>& tuple) const {
  auto it = cell_counts.find(tuple);
  return it == cell_counts.end() ? 0 : it->second;
}

}  // namespace msulab
