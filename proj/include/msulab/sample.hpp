#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace msulab {

using Code = std::uint32_t;

/// One categorical variable: codes in [0, cardinality).
struct Column {
  std::vector<Code> codes;
  std::uint32_t cardinality = 0;
};

/// m x p matrix of category codes, stored column-major.
///
/// The declared cardinality of a column may exceed the number of distinct
/// codes that actually occur. Entropy estimates only ever look at observed
/// counts; declared cardinalities feed the sample-size machinery and the
/// packing of joint keys.
class CategoricalSample {
 public:
  CategoricalSample() = default;
  CategoricalSample(std::vector<Column> columns, std::vector<std::string> names = {});

  /// Declared cardinality of every column is max(code)+1.
  static CategoricalSample from_codes(std::vector<std::vector<Code>> columns,
                                      std::vector<std::string> names = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  std::span<const Code> column(std::size_t j) const;
  std::uint32_t cardinality(std::size_t j) const;
  const std::vector<std::uint32_t>& cardinalities() const noexcept { return cards_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Index of the column with the given label; throws InvalidInput if absent.
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<std::vector<Code>> columns_;
  std::vector<std::uint32_t> cards_;
  std::vector<std::string> names_;
  std::size_t rows_ = 0;
};

/// Sorted, de-duplicated copy of a column subset. Throws on an empty subset,
/// an out-of-range index or a repeated index.
std::vector<std::size_t> normalize_subset(const CategoricalSample& sample,
                                          std::span<const std::size_t> cols);

/// Counts of the distinct value tuples of `cols`, in unspecified order, zero
/// cells omitted. This is the hot path behind every entropy estimate.
std::vector<std::uint64_t> joint_counts(const CategoricalSample& sample,
                                        std::span<const std::size_t> cols);

/// Explicit tuple -> count table over a column subset.
struct JointHistogram {
  std::vector<std::size_t> column_subset;  // ascending
  std::map<std::vector<Code>, std::uint64_t> cell_counts;
  std::uint64_t total = 0;

  static JointHistogram build(const CategoricalSample& sample, std::span<const std::size_t> cols);

  std::uint64_t count(const std::vector<Code>& tuple) const;
};

}  // namespace msulab
