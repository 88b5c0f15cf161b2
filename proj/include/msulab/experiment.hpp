#pragma once

// Monte-Carlo bias experiments over synthetic attribute subsets.
//
// A config describes one sweep. Each sweep point expands to one or more
// attribute groups; every group is generated together with a class column
// and reported as the MSU of (attributes + class) plus the SU of each
// attribute against the class.
//
// Seeding: replicate r of every point uses SeededRng(master_seed, r), and
// every generated column draws from its own fork of that stream with a fixed
// number of draws per row. Consequently a point's data is a pure function of
// (seed, replicate, point parameters), and neighbouring sweep points share
// common random numbers (the m+1 sample extends the m sample, an added
// attribute leaves the others untouched).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msulab {

inline constexpr std::uint64_t kDefaultSeed = 20170301;

enum class Rule { MK, XOR, Both, None };
enum class SweepAxis { Cardinality, SampleSize, AttributeCount, AddedNoise };

struct Sweep {
  SweepAxis axis = SweepAxis::SampleSize;
  std::vector<long long> values;

  static Sweep range(SweepAxis axis, long long from, long long to, long long step = 1);
};

struct SampleSizePolicy {
  enum class Kind { Fixed, Computed };
  Kind kind = Kind::Fixed;
  long long fixed_m = 1000;
  double factor = 10.0;

  static SampleSizePolicy fixed(long long m) { return {Kind::Fixed, m, 10.0}; }
  static SampleSizePolicy computed(double factor = 10.0) { return {Kind::Computed, 0, factor}; }
  bool operator==(const SampleSizePolicy&) const = default;
};

struct ExperimentConfig {
  std::string name;
  Rule rule = Rule::MK;
  Sweep sweep;
  int n_informative = 0;
  std::uint32_t informative_card = 2;  // cardinality of every generated attribute
  int n_noninformative = 0;
  std::uint32_t class_card = 2;
  SampleSizePolicy sample_size_policy;
  int replicates = 1000;
  std::uint64_t master_seed = kDefaultSeed;
  double k = 1.0;        // Kononenko informativeness
  double noise = 0.05;   // XOR flip probability
  // Rule::Both only: a single subset (XOR pair + Kononenko extras) instead of
  // three separate Kononenko / uniform / XOR subsets.
  bool merged = false;
  // AttributeCount sweeps under MK or None: compare v binary attributes with
  // 2 attributes of cardinality 2^(v/2) (equal multivariate cardinality).
  bool equivalence = false;
  long long max_sample_size = 2'000'000;

  void validate() const;
};

enum class GroupKind { Kononenko, Uniform, Xor };

/// One evaluated subset at a sweep point.
struct GroupPlan {
  std::string label;
  GroupKind kind = GroupKind::Uniform;
  int n_core = 0;  // Kononenko/uniform attribute count; 2 for the XOR pair
  std::uint32_t core_card = 2;
  GroupKind extra_kind = GroupKind::Uniform;  // attributes appended to an XOR pair
  int n_extra = 0;
  std::uint32_t extra_card = 2;
  std::uint32_t class_card = 2;
  long long m = 0;

  int n_attributes() const { return n_core + n_extra; }
  std::vector<std::uint64_t> attribute_cards() const;
};

struct PointPlan {
  long long sweep_value = 0;
  std::vector<GroupPlan> groups;
  std::vector<std::string> measure_names;   // msu_<label>, su_<label>_<j>
  std::vector<long long> measure_sample_size;
};

/// Expands sweep point `point_index`. Throws InvalidInput on an infeasible
/// point (bad parameters, m < 1, m above max_sample_size).
PointPlan plan_point(const ExperimentConfig& config, std::size_t point_index);

/// Measure values of one replicate, aligned with plan.measure_names.
std::vector<double> run_replicate(const ExperimentConfig& config, const PointPlan& plan,
                                  std::uint64_t replicate_index);
std::vector<double> run_replicate(const ExperimentConfig& config, std::size_t point_index,
                                  std::uint64_t replicate_index);

struct MeasureStats {
  std::string name;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t n_replicates = 0;
  long long sample_size = 0;
  std::optional<double> theta;  // population value, when it can be enumerated
};

struct CurvePoint {
  long long sweep_value = 0;
  std::vector<MeasureStats> measures;
  std::optional<std::string> error;

  const MeasureStats* find(const std::string& name) const;
};

struct BiasCurve {
  std::string experiment;
  SweepAxis axis = SweepAxis::SampleSize;
  std::vector<CurvePoint> points;

  std::vector<long long> sweep_values() const;
  /// Means of one measure along the sweep; NaN where the point lacks it.
  std::vector<double> means(const std::string& measure) const;
};

/// Mean (Neumaier-compensated) and sample standard deviation.
MeasureStats aggregate(const std::string& name, const std::vector<double>& values);

struct RunOptions {
  int threads = 0;  // 0: OpenMP default
};

/// Replicates and points in parallel with OpenMP; deterministic reduction.
BiasCurve run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Single-threaded reference; produces a bit-identical curve.
BiasCurve run_experiment_serial(const ExperimentConfig& config);

/// mean - theta at every point for one measure (NaN where absent).
std::vector<double> bias(const BiasCurve& curve, const std::string& measure, double theta);

/// |mean[i+1] - mean[i]| / |mean[i]| for consecutive points.
std::vector<double> relative_step_change(const BiasCurve& curve, const std::string& measure);

/// Population MSU / SU of a group by exact enumeration of its joint
/// distribution; nullopt when the joint table exceeds `max_cells`.
struct PopulationValues {
  double msu = 0.0;
  std::vector<double> su;  // per attribute, against the class
};
std::optional<PopulationValues> population_values(const GroupPlan& group, double k, double noise,
                                                  std::uint64_t max_cells = 1u << 20);

std::string to_string(Rule rule);
std::string to_string(SweepAxis axis);
Rule parse_rule(const std::string& text);
SweepAxis parse_axis(const std::string& text);

}  // namespace msulab
