#include "msulab/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "msulab/error.hpp"

namespace msulab {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

const std::string& IngestedDataset::label(std::size_t col, std::size_t row) const {
  return dictionaries.at(col).at(sample.column(col)[row]);
}

IngestedDataset parse_dataset(std::istream& in, const std::string& source) {
  IngestedDataset ds;
  ds.source = source;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::unordered_map<std::string, Code>> index;
  std::vector<std::vector<Code>> codes;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (ds.header.empty()) {
      if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
        cells.front().erase(0, 3);
      ds.header = std::move(cells);
      index.resize(ds.header.size());
      codes.resize(ds.header.size());
      ds.dictionaries.resize(ds.header.size());
      continue;
    }
    if (cells.size() != ds.header.size())
      throw InvalidInput(source + ":" + std::to_string(line_no) + ": expected " +
                         std::to_string(ds.header.size()) + " cells, found " +
                         std::to_string(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      auto [it, inserted] = index[j].try_emplace(cells[j], static_cast<Code>(index[j].size()));
      if (inserted) ds.dictionaries[j].push_back(cells[j]);
      codes[j].push_back(it->second);
    }
  }
  if (ds.header.empty()) throw InvalidInput(source + ": missing header row");
  if (codes.front().empty()) throw InvalidInput(source + ": no data rows");

  std::vector<Column> cols;
  for (std::size_t j = 0; j < codes.size(); ++j)
    cols.push_back({std::move(codes[j]), static_cast<std::uint32_t>(ds.dictionaries[j].size())});
  ds.sample = CategoricalSample(std::move(cols), ds.header);
  return ds;
}

IngestedDataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return parse_dataset(in, path.string());
}

void write_dataset(std::ostream& out, const CategoricalSample& sample) {
  const auto& names = sample.names();
  for (std::size_t j = 0; j < sample.cols(); ++j) {
    if (j) out << ',';
    out << (names.empty() ? "c" + std::to_string(j + 1) : names[j]);
  }
  out << '\n';
  for (std::size_t r = 0; r < sample.rows(); ++r) {
    for (std::size_t j = 0; j < sample.cols(); ++j) {
      if (j) out << ',';
      out << sample.column(j)[r];
    }
    out << '\n';
  }
}

std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_curve(std::ostream& out, const BiasCurve& curve) {
  out << "sweep_value,measure_name,mean,stddev,n_replicates,sample_size_used\n";
  for (const auto& p : curve.points) {
    for (const auto& m : p.measures) {
      out << p.sweep_value << ',' << m.name << ',' << format_shortest(m.mean) << ','
          << format_shortest(m.stddev) << ',' << m.n_replicates << ',' << m.sample_size << '\n';
    }
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw InvalidInput("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InvalidInput("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                       ec.message());
  }
}

}  // namespace msulab
