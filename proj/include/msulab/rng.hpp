#pragma once

#include <cstdint>
#include <limits>

namespace msulab {

/// Counter-based 64-bit generator keyed by (master_seed, stream_id).
///
/// Draw i of a stream is a pure function of (master_seed, stream_id, i), so
/// identical keys give identical streams regardless of thread scheduling.
/// `fork(sub)` derives a further independent stream; the experiment harness
/// gives every generated column its own fork so a column's values do not
/// depend on how many rows or sibling columns are drawn.
///
/// Satisfies UniformRandomBitGenerator. Not safe to share across threads.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  SeededRng(std::uint64_t master_seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return at(counter_++); }

  /// Value of draw `index` without advancing the stream.
  result_type at(std::uint64_t index) const;

  /// Uniform on {0, ..., n-1}; consumes exactly one draw. n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);

  /// Uniform on [0, 1) with 53 random bits; consumes exactly one draw.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }

  SeededRng fork(std::uint64_t substream) const;

  std::uint64_t master_seed() const noexcept { return master_; }
  std::uint64_t stream_id() const noexcept { return stream_; }
  std::uint64_t position() const noexcept { return counter_; }

 private:
  SeededRng(std::uint64_t master, std::uint64_t stream, std::uint64_t k0, std::uint64_t k1);

  std::uint64_t master_;
  std::uint64_t stream_;
  std::uint64_t key0_;
  std::uint64_t key1_;
  std::uint64_t counter_ = 0;
};

}  // namespace msulab
