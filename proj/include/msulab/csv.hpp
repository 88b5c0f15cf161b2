#pragma once

// Comma-separated categorical data. Cells are opaque labels; codes are
// assigned per column by first appearance.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "msulab/experiment.hpp"
#include "msulab/sample.hpp"

namespace msulab {

struct IngestedDataset {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> dictionaries;  // [column][code] -> label
  CategoricalSample sample;

  const std::string& label(std::size_t col, std::size_t row) const;
};

IngestedDataset parse_dataset(std::istream& in, const std::string& source = "<stream>");
IngestedDataset read_dataset(const std::filesystem::path& path);

/// Header row of `names`, then one row per instance with integer codes.
void write_dataset(std::ostream& out, const CategoricalSample& sample);

/// sweep_value,measure_name,mean,stddev,n_replicates,sample_size_used
void write_curve(std::ostream& out, const BiasCurve& curve);

/// Shortest decimal that round-trips to the same double.
std::string format_shortest(double v);

/// Writes to a temporary sibling, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace msulab
