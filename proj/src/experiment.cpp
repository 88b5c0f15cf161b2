#include "msulab/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <string>

#include "msulab/error.hpp"
#include "msulab/generators.hpp"
#include "msulab/info_measures.hpp"
#include "msulab/rng.hpp"
#include "msulab/sample.hpp"
#include "msulab/sample_size.hpp"

namespace msulab {

Sweep Sweep::range(SweepAxis axis, long long from, long long to, long long step) {
  if (step < 1) throw InvalidInput("sweep step must be >= 1");
  Sweep s{axis, {}};
  for (long long v = from; v <= to; v += step) s.values.push_back(v);
  return s;
}

void ExperimentConfig::validate() const {
  if (sweep.values.empty()) throw InvalidInput("experiment '" + name + "' has an empty sweep");
  if (replicates < 1) throw InvalidInput("replicates must be >= 1");
  if (class_card < 2) throw InvalidInput("class cardinality must be >= 2");
  if (n_informative < 0 || n_noninformative < 0)
    throw InvalidInput("attribute counts must be non-negative");
  if (sample_size_policy.kind == SampleSizePolicy::Kind::Computed &&
      !(sample_size_policy.factor > 0.0))
    throw InvalidInput("computed sample-size factor must be positive");
  if ((rule == Rule::XOR || rule == Rule::Both) && class_card != 2)
    throw InvalidInput("XOR subsets need a binary class");
  if (equivalence && (sweep.axis != SweepAxis::AttributeCount ||
                      (rule != Rule::MK && rule != Rule::None)))
    throw InvalidInput("equivalence layout needs an attribute-count sweep under MK or None");
  if (max_sample_size < 1) throw InvalidInput("max_sample_size must be >= 1");
}

std::vector<std::uint64_t> GroupPlan::attribute_cards() const {
  std::vector<std::uint64_t> cards(static_cast<std::size_t>(n_core), core_card);
  cards.insert(cards.end(), static_cast<std::size_t>(n_extra), extra_card);
  return cards;
}

namespace {

GroupPlan simple_group(std::string label, GroupKind kind, int n, std::uint32_t card) {
  GroupPlan g;
  g.label = std::move(label);
  g.kind = kind;
  g.n_core = n;
  g.core_card = card;
  return g;
}

GroupPlan xor_group(std::string label, GroupKind extra_kind, int n_extra, std::uint32_t card) {
  GroupPlan g;
  g.label = std::move(label);
  g.kind = GroupKind::Xor;
  g.n_core = 2;
  g.core_card = 2;
  g.extra_kind = extra_kind;
  g.n_extra = n_extra;
  g.extra_card = card;
  return g;
}

void require_positive(long long v, const char* what) {
  if (v < 1) throw InvalidInput(std::string(what) + " must be >= 1 at this sweep point");
}

}  // namespace

PointPlan plan_point(const ExperimentConfig& config, std::size_t point_index) {
  config.validate();
  if (point_index >= config.sweep.values.size()) throw InvalidInput("sweep point out of range");
  const long long v = config.sweep.values[point_index];

  long long n_inf = config.n_informative;
  long long n_non = config.n_noninformative;
  long long extras = 0;  // uniform attributes appended to the main MK subset
  long long card = config.informative_card;
  long long fixed_m = config.sample_size_policy.fixed_m;
  bool fixed = config.sample_size_policy.kind == SampleSizePolicy::Kind::Fixed;

  switch (config.sweep.axis) {
    case SweepAxis::Cardinality:
      card = v;
      break;
    case SweepAxis::SampleSize:
      fixed = true;
      fixed_m = v;
      break;
    case SweepAxis::AttributeCount:
      switch (config.rule) {
        case Rule::MK: n_inf = v; break;
        case Rule::None: n_non = v; break;
        case Rule::XOR: n_non = v - 2; break;
        case Rule::Both:
          n_inf = v;
          if (!config.merged) n_non = v <= config.n_noninformative ? v : 0;
          break;
      }
      break;
    case SweepAxis::AddedNoise:
      switch (config.rule) {
        case Rule::MK: extras = v; break;
        case Rule::None: n_non = v; break;
        case Rule::XOR: n_non = v; break;
        case Rule::Both:
          if (config.merged)
            n_inf = 2 + v;
          else
            n_non = v;
          break;
      }
      break;
  }
  if (card < 1 || card > std::numeric_limits<std::uint32_t>::max())
    throw InvalidInput("attribute cardinality out of range at this sweep point");
  if (n_inf < 0 || n_non < 0 || extras < 0)
    throw InvalidInput("negative attribute count at this sweep point");
  const auto c = static_cast<std::uint32_t>(card);
  const int ni = static_cast<int>(n_inf);
  const int nn = static_cast<int>(n_non);

  PointPlan plan;
  plan.sweep_value = v;

  if (config.equivalence) {
    if (v < 2 || v % 2 != 0 || v > 62)
      throw InvalidInput("equivalence layout needs an even attribute count in [2, 62]");
    const GroupKind kind = config.rule == Rule::MK ? GroupKind::Kononenko : GroupKind::Uniform;
    plan.groups.push_back(simple_group("binary", kind, static_cast<int>(v), 2));
    plan.groups.push_back(
        simple_group("wide", kind, 2, static_cast<std::uint32_t>(1u << (v / 2))));
  } else {
    switch (config.rule) {
      case Rule::MK: {
        require_positive(ni, "informative attribute count");
        auto g = simple_group("informative", GroupKind::Kononenko, ni, c);
        // Appended noise shares the MK group's cardinality.
        g.extra_kind = GroupKind::Uniform;
        g.n_extra = static_cast<int>(extras);
        g.extra_card = c;
        plan.groups.push_back(g);
        if (nn > 0 && config.sweep.axis != SweepAxis::AddedNoise)
          plan.groups.push_back(simple_group("noninformative", GroupKind::Uniform, nn, c));
        break;
      }
      case Rule::None:
        require_positive(nn, "non-informative attribute count");
        plan.groups.push_back(simple_group("noninformative", GroupKind::Uniform, nn, c));
        break;
      case Rule::XOR:
        plan.groups.push_back(xor_group("xor", GroupKind::Uniform, nn, c));
        break;
      case Rule::Both:
        if (config.merged) {
          if (ni < 2) throw InvalidInput("merged XOR subset needs >= 2 informative attributes");
          plan.groups.push_back(xor_group("xor", GroupKind::Kononenko, ni - 2, c));
        } else {
          require_positive(ni, "informative attribute count");
          plan.groups.push_back(simple_group("mk", GroupKind::Kononenko, ni, c));
          if (nn > 0)
            plan.groups.push_back(simple_group("noninformative", GroupKind::Uniform, nn, c));
          plan.groups.push_back(xor_group("xor", GroupKind::Uniform, std::max(0, ni - 2), c));
        }
        break;
    }
  }

  for (auto& g : plan.groups) {
    g.class_card = config.class_card;
    if (g.kind == GroupKind::Xor && g.core_card != 2) throw InvalidInput("XOR pair is binary");
    if ((g.kind == GroupKind::Kononenko && g.core_card < 2) ||
        (g.n_extra > 0 && g.extra_kind == GroupKind::Kononenko && g.extra_card < 2))
      throw InvalidInput("Kononenko attributes need cardinality >= 2");
    if (fixed) {
      g.m = fixed_m;
    } else {
      CardinalityProfile profile{g.attribute_cards(), g.class_card};
      g.m = static_cast<long long>(
          heuristic_sample_size(profile, config.sample_size_policy.factor));
    }
    if (g.m < 1) throw InvalidInput("sample size must be >= 1 at this sweep point");
    if (g.m > config.max_sample_size)
      throw InvalidInput("sample size " + std::to_string(g.m) + " for subset '" + g.label +
                         "' exceeds max_sample_size " + std::to_string(config.max_sample_size));

    plan.measure_names.push_back("msu_" + g.label);
    plan.measure_sample_size.push_back(g.m);
    for (int j = 1; j <= g.n_attributes(); ++j) {
      plan.measure_names.push_back("su_" + g.label + "_" + std::to_string(j));
      plan.measure_sample_size.push_back(g.m);
    }
  }
  return plan;
}

namespace {

constexpr std::uint64_t kClassStream = 0;
constexpr std::uint64_t kGroupStride = 4096;
constexpr std::uint64_t kExtraOffset = 2000;
constexpr std::uint64_t kXorOffset = 4000;

std::uint64_t column_stream(std::size_t group, std::uint64_t offset, int j) {
  return 1 + group * kGroupStride + offset + static_cast<std::uint64_t>(j);
}

CategoricalSample generate_group(const ExperimentConfig& config, const GroupPlan& g,
                                 std::size_t group_index, const SeededRng& base) {
  const auto m = static_cast<std::size_t>(g.m);
  std::vector<Column> cols;
  cols.reserve(static_cast<std::size_t>(g.n_attributes()) + 1);
  Column cls;

  if (g.kind == GroupKind::Xor) {
    auto rng = base.fork(column_stream(group_index, kXorOffset, 0));
    auto t = gen_xor_pair(m, config.noise, rng);
    cols.push_back(std::move(t.f1));
    cols.push_back(std::move(t.f2));
    cls = std::move(t.cls);
  } else {
    auto rng = base.fork(kClassStream);
    cls = gen_class(g.class_card, m, rng);
    for (int j = 0; j < g.n_core; ++j) {
      auto col_rng = base.fork(column_stream(group_index, 0, j));
      cols.push_back(g.kind == GroupKind::Kononenko
                         ? gen_kononenko(cls, g.core_card, config.k, col_rng)
                         : gen_uniform(g.core_card, m, col_rng));
    }
  }
  for (int j = 0; j < g.n_extra; ++j) {
    auto col_rng = base.fork(column_stream(group_index, kExtraOffset, j));
    cols.push_back(g.extra_kind == GroupKind::Kononenko
                       ? gen_kononenko(cls, g.extra_card, config.k, col_rng)
                       : gen_uniform(g.extra_card, m, col_rng));
  }
  cols.push_back(std::move(cls));
  return CategoricalSample(std::move(cols));
}

}  // namespace

std::vector<double> run_replicate(const ExperimentConfig& config, const PointPlan& plan,
                                  std::uint64_t replicate_index) {
  const SeededRng base(config.master_seed, replicate_index);
  std::vector<double> values;
  values.reserve(plan.measure_names.size());
  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const auto& g = plan.groups[gi];
    const auto sample = generate_group(config, g, gi, base);
    const std::size_t class_col = sample.cols() - 1;
    std::vector<std::size_t> all(sample.cols());
    std::iota(all.begin(), all.end(), std::size_t{0});
    values.push_back(msu(sample, all).value);
    for (std::size_t j = 0; j < class_col; ++j)
      values.push_back(symmetrical_uncertainty(sample, j, class_col).value);
  }
  return values;
}

std::vector<double> run_replicate(const ExperimentConfig& config, std::size_t point_index,
                                  std::uint64_t replicate_index) {
  return run_replicate(config, plan_point(config, point_index), replicate_index);
}

const MeasureStats* CurvePoint::find(const std::string& name) const {
  for (const auto& m : measures)
    if (m.name == name) return &m;
  return nullptr;
}

std::vector<long long> BiasCurve::sweep_values() const {
  std::vector<long long> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.sweep_value);
  return out;
}

std::vector<double> BiasCurve::means(const std::string& measure) const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const auto* s = p.find(measure);
    out.push_back(s ? s->mean : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

namespace {

// Neumaier compensated summation.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      c += (sum - t) + x;
    else
      c += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

}  // namespace

MeasureStats aggregate(const std::string& name, const std::vector<double>& values) {
  MeasureStats s;
  s.name = name;
  s.n_replicates = values.size();
  if (values.empty()) return s;
  // Sorting first makes the reduction independent of replicate order.
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  CompensatedSum total;
  for (double v : sorted) total.add(v);
  s.mean = total.value() / static_cast<double>(sorted.size());
  if (sorted.size() > 1) {
    CompensatedSum sq;
    for (double v : sorted) sq.add((v - s.mean) * (v - s.mean));
    s.stddev = std::sqrt(sq.value() / static_cast<double>(sorted.size() - 1));
  }
  return s;
}

namespace {

struct PreparedPoint {
  std::optional<PointPlan> plan;
  std::string error;
  std::vector<std::vector<double>> values;  // [replicate][measure]
  std::vector<std::optional<double>> theta;
};

std::vector<PreparedPoint> prepare(const ExperimentConfig& config) {
  config.validate();
  std::vector<PreparedPoint> points(config.sweep.values.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    try {
      points[p].plan = plan_point(config, p);
      points[p].values.resize(static_cast<std::size_t>(config.replicates));
      for (const auto& g : points[p].plan->groups) {
        const auto pop = population_values(g, config.k, config.noise);
        points[p].theta.push_back(pop ? std::optional(pop->msu) : std::nullopt);
        for (int j = 0; j < g.n_attributes(); ++j)
          points[p].theta.push_back(pop ? std::optional(pop->su[static_cast<std::size_t>(j)])
                                        : std::nullopt);
      }
    } catch (const std::exception& e) {
      points[p].plan.reset();
      points[p].error = e.what();
    }
  }
  return points;
}

BiasCurve finish(const ExperimentConfig& config, std::vector<PreparedPoint>& points) {
  BiasCurve curve;
  curve.experiment = config.name;
  curve.axis = config.sweep.axis;
  for (std::size_t p = 0; p < points.size(); ++p) {
    CurvePoint cp;
    cp.sweep_value = config.sweep.values[p];
    auto& pp = points[p];
    if (!pp.plan || !pp.error.empty()) {
      cp.error = pp.error.empty() ? "point failed" : pp.error;
      curve.points.push_back(std::move(cp));
      continue;
    }
    const auto& names = pp.plan->measure_names;
    for (std::size_t k = 0; k < names.size(); ++k) {
      std::vector<double> column;
      column.reserve(pp.values.size());
      for (const auto& rep : pp.values) column.push_back(rep[k]);
      auto stats = aggregate(names[k], column);
      stats.sample_size = pp.plan->measure_sample_size[k];
      stats.theta = pp.theta[k];
      cp.measures.push_back(std::move(stats));
    }
    curve.points.push_back(std::move(cp));
  }
  return curve;
}

}  // namespace

BiasCurve run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  auto points = prepare(config);
  const std::size_t reps = static_cast<std::size_t>(config.replicates);
  const auto n_tasks = static_cast<long long>(points.size() * reps);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long t = 0; t < n_tasks; ++t) {
    auto& pp = points[static_cast<std::size_t>(t) / reps];
    const std::size_t r = static_cast<std::size_t>(t) % reps;
    if (!pp.plan) continue;
    try {
      pp.values[r] = run_replicate(config, *pp.plan, r);
    } catch (const std::exception& e) {
#pragma omp critical(msulab_point_error)
      if (pp.error.empty()) pp.error = e.what();
    }
  }
  return finish(config, points);
}

BiasCurve run_experiment_serial(const ExperimentConfig& config) {
  auto points = prepare(config);
  for (auto& pp : points) {
    if (!pp.plan) continue;
    for (std::size_t r = 0; r < pp.values.size(); ++r) {
      try {
        pp.values[r] = run_replicate(config, *pp.plan, r);
      } catch (const std::exception& e) {
        pp.error = e.what();
        break;
      }
    }
  }
  return finish(config, points);
}

std::vector<double> bias(const BiasCurve& curve, const std::string& measure, double theta) {
  if (!std::isfinite(theta)) throw InvalidInput("theta must be finite");
  auto out = curve.means(measure);
  for (auto& v : out) v -= theta;
  return out;
}

std::vector<double> relative_step_change(const BiasCurve& curve, const std::string& measure) {
  const auto m = curve.means(measure);
  std::vector<double> out;
  for (std::size_t i = 1; i < m.size(); ++i) out.push_back(std::fabs(m[i] - m[i - 1]) / std::fabs(m[i - 1]));
  return out;
}

namespace {

// P(x | class) tables of one attribute, indexed [class][x].
using CondTable = std::vector<std::vector<double>>;

CondTable conditional_table(GroupKind kind, std::uint32_t card, std::uint32_t class_card,
                            double k) {
  CondTable t(class_card, std::vector<double>(card));
  for (std::uint32_t c = 0; c < class_card; ++c) {
    if (kind == GroupKind::Kononenko) {
      const double pf = kononenko_first_half_prob(c + 1, k, class_card);
      const std::uint32_t first = card / 2;
      for (std::uint32_t x = 0; x < card; ++x)
        t[c][x] = x < first ? pf / first : (1.0 - pf) / (card - first);
    } else {
      for (std::uint32_t x = 0; x < card; ++x) t[c][x] = 1.0 / card;
    }
  }
  return t;
}

double entropy_of(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace

std::optional<PopulationValues> population_values(const GroupPlan& g, double k, double noise,
                                                  std::uint64_t max_cells) {
  const std::uint32_t C = g.class_card;
  const auto cards = g.attribute_cards();
  const std::size_t n = cards.size();
  std::uint64_t cells = C;
  for (auto c : cards) {
    if (cells > max_cells / c) return std::nullopt;
    cells *= c;
  }

  // Leading cells over (class, first attributes) with their probabilities,
  // then the remaining attributes, conditionally independent given class.
  struct Seed {
    std::uint32_t cls;
    std::vector<std::uint32_t> codes;
    double p;
  };
  std::vector<Seed> seeds;
  std::vector<CondTable> cond;
  if (g.kind == GroupKind::Xor) {
    for (std::uint32_t a = 0; a < 2; ++a)
      for (std::uint32_t b = 0; b < 2; ++b)
        for (std::uint32_t c = 0; c < 2; ++c)
          seeds.push_back({c, {a, b}, 0.25 * (c == (a ^ b) ? 1.0 - noise : noise)});
  } else {
    for (std::uint32_t c = 0; c < C; ++c) seeds.push_back({c, {}, 1.0 / C});
    for (int j = 0; j < g.n_core; ++j) cond.push_back(conditional_table(g.kind, g.core_card, C, k));
  }
  for (int j = 0; j < g.n_extra; ++j)
    cond.push_back(conditional_table(g.extra_kind, g.extra_card, C, k));

  std::vector<std::vector<double>> marg(n);
  for (std::size_t j = 0; j < n; ++j) marg[j].assign(cards[j], 0.0);
  std::vector<double> class_marg(C, 0.0);
  std::vector<std::vector<double>> pair(n);  // [attr][x * C + c]
  for (std::size_t j = 0; j < n; ++j) pair[j].assign(cards[j] * C, 0.0);
  double joint_h = 0.0;

  std::vector<std::uint32_t> codes(n);
  for (const auto& s : seeds) {
    const std::size_t fixed = s.codes.size();
    std::copy(s.codes.begin(), s.codes.end(), codes.begin());
    // Odometer over the conditionally generated attributes.
    std::vector<std::uint32_t> odo(n - fixed, 0);
    while (true) {
      double p = s.p;
      for (std::size_t j = fixed; j < n; ++j) {
        codes[j] = odo[j - fixed];
        p *= cond[j - fixed][s.cls][codes[j]];
      }
      if (p > 0.0) joint_h -= p * std::log2(p);
      class_marg[s.cls] += p;
      for (std::size_t j = 0; j < n; ++j) {
        marg[j][codes[j]] += p;
        pair[j][codes[j] * C + s.cls] += p;
      }
      std::size_t pos = 0;
      while (pos < odo.size() && ++odo[pos] == cards[fixed + pos]) odo[pos++] = 0;
      if (pos == odo.size()) break;
    }
  }

  PopulationValues out;
  const double hc = entropy_of(class_marg);
  double hsum = hc;
  for (std::size_t j = 0; j < n; ++j) {
    const double hx = entropy_of(marg[j]);
    hsum += hx;
    const double hs = hx + hc;
    out.su.push_back(hs > 0.0 ? 2.0 * (hs - entropy_of(pair[j])) / hs : 0.0);
  }
  const double vars = static_cast<double>(n + 1);
  out.msu = hsum > 0.0 ? vars / (vars - 1.0) * (hsum - joint_h) / hsum : 0.0;
  return out;
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::MK: return "mk";
    case Rule::XOR: return "xor";
    case Rule::Both: return "both";
    case Rule::None: return "none";
  }
  return "?";
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Cardinality: return "cardinality";
    case SweepAxis::SampleSize: return "sample_size";
    case SweepAxis::AttributeCount: return "attribute_count";
    case SweepAxis::AddedNoise: return "added_noise";
  }
  return "?";
}

Rule parse_rule(const std::string& text) {
  for (Rule r : {Rule::MK, Rule::XOR, Rule::Both, Rule::None})
    if (to_string(r) == text) return r;
  throw InvalidInput("unknown rule '" + text + "' (expected mk, xor, both or none)");
}

SweepAxis parse_axis(const std::string& text) {
  for (SweepAxis a : {SweepAxis::Cardinality, SweepAxis::SampleSize, SweepAxis::AttributeCount,
                      SweepAxis::AddedNoise})
    if (to_string(a) == text) return a;
  throw InvalidInput("unknown sweep axis '" + text + "'");
}

}  // namespace msulab
