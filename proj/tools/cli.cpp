#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msulab/chi_squared.hpp"
#include "msulab/config_io.hpp"
#include "msulab/csv.hpp"
#include "msulab/error.hpp"
#include "msulab/experiment.hpp"
#include "msulab/generators.hpp"
#include "msulab/info_measures.hpp"
#include "msulab/presets.hpp"
#include "msulab/sample_size.hpp"

namespace msulab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const char* flag) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a non-negative integer");
    }
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MSULAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("MSULAB_SEED must be an unsigned integer");
    }
  }
  return kDefaultSeed;
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << content;
  else
    write_file_atomic(out_path, content);
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  std::string csv;
  std::string entropy, su, msu, tc, ig;
};

void cmd_measure(const MeasureArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> chosen;
  for (const auto& [name, value] : {std::pair<std::string, std::string>{"entropy", a.entropy},
                                    {"su", a.su}, {"msu", a.msu}, {"tc", a.tc}, {"ig", a.ig}})
    if (!value.empty()) chosen.emplace_back(name, value);
  if (chosen.size() != 1)
    throw UsageError("measure: pass exactly one of --entropy, --su, --msu, --tc, --ig");
  const auto& [measure, list] = chosen.front();
  const auto names = split_list(list);

  const std::size_t n = names.size();
  if (measure == "entropy" && n < 1) throw UsageError("--entropy needs at least one column");
  if ((measure == "su" || measure == "ig") && n != 2)
    throw UsageError("--" + measure + " needs exactly two columns, got " + std::to_string(n));
  if ((measure == "msu" || measure == "tc") && n < 2)
    throw UsageError("--" + measure + " needs at least two columns, got " + std::to_string(n));

  if (!std::filesystem::exists(a.csv)) throw InvalidInput("no such file: " + a.csv);
  const auto ds = read_dataset(a.csv);
  std::vector<std::size_t> cols;
  for (const auto& name : names) cols.push_back(ds.sample.index_of(name));

  MeasureValue v;
  if (measure == "entropy")
    v = joint_entropy(ds.sample, cols);
  else if (measure == "su")
    v = symmetrical_uncertainty(ds.sample, cols[0], cols[1]);
  else if (measure == "ig")
    v = information_gain(ds.sample, std::span(cols).first(1), std::span(cols).last(1));
  else if (measure == "tc")
    v = total_correlation(ds.sample, cols);
  else
    v = msu(ds.sample, cols);

  out << measure << '(' << list << ") = " << fixed6(v.value);
  if (v.degenerate) out << "  [degenerate: zero marginal entropies]";
  out << '\n';

  CardinalityProfile profile;
  profile.class_card = 1;
  for (auto c : cols) profile.attribute_cards.push_back(ds.sample.cardinality(c));
  const auto mc = multivariate_cardinality(profile);
  const auto hm = heuristic_sample_size(profile);
  out << "m = " << ds.sample.rows() << ", multivariate cardinality = " << mc
      << " (observed values), heuristic m = " << hm << ": "
      << (ds.sample.rows() >= hm ? "sample size meets the heuristic"
                                 : "sample smaller than the heuristic, expect upward bias")
      << '\n';
}

// --------------------------------------------------------------- generate

struct GenerateArgs {
  std::string rule = "xor";
  std::string cards;
  std::uint32_t class_card = 2;
  double k = 1.0;
  double noise = 0.05;
  std::size_t m = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void cmd_generate(const GenerateArgs& a, std::ostream& out) {
  DatasetSpec spec;
  spec.class_card = a.class_card;
  spec.k = a.k;
  spec.noise = a.noise;
  if (a.rule == "xor") {
    spec.kind = GeneratorKind::XorPair;
    spec.attribute_cards = a.cards.empty() ? std::vector<std::uint32_t>{2, 2}
                                           : parse_numbers<std::uint32_t>(a.cards, "--cards");
  } else if (a.rule == "mk" || a.rule == "uniform") {
    spec.kind = a.rule == "mk" ? GeneratorKind::Kononenko : GeneratorKind::Uniform;
    if (a.cards.empty()) throw UsageError("--cards is required for rule " + a.rule);
    spec.attribute_cards = parse_numbers<std::uint32_t>(a.cards, "--cards");
  } else {
    throw UsageError("--rule must be xor, mk or uniform");
  }
  if (a.m < 1) throw UsageError("--m must be >= 1");

  SeededRng rng(a.seed.value_or(default_seed()), 0);
  std::ostringstream csv;
  write_dataset(csv, generate_dataset(spec, a.m, rng));
  emit(csv.str(), a.out, out);
}

// ------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string target;
  std::optional<int> replicates;
  std::optional<std::uint64_t> seed;
  std::string values;
  int threads = 0;
  bool serial = false;
  std::string out;
};

void cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  const bool is_file = a.target.ends_with(".json") || std::filesystem::is_regular_file(a.target);
  ExperimentConfig config = is_file ? load_config(a.target) : preset(a.target);
  if (a.replicates) config.replicates = *a.replicates;
  if (a.seed)
    config.master_seed = *a.seed;
  else if (std::getenv("MSULAB_SEED"))
    config.master_seed = default_seed();
  if (!a.values.empty()) {
    config.sweep.values.clear();
    for (const auto& item : split_list(a.values)) {
      try {
        config.sweep.values.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw UsageError("--values: '" + item + "' is not an integer");
      }
    }
  }
  config.validate();

  const auto curve = a.serial ? run_experiment_serial(config) : run_experiment(config, {a.threads});
  for (const auto& p : curve.points)
    if (p.error) err << "warning: " << to_string(curve.axis) << " = " << p.sweep_value
                     << " skipped: " << *p.error << '\n';
  std::ostringstream csv;
  write_curve(csv, curve);
  emit(csv.str(), a.out, out);
}

// -------------------------------------------------------------- recommend

struct RecommendArgs {
  std::string cards;
  std::uint64_t class_card = 2;
  double alpha = 0.05;
  double factor = 10.0;
};

void cmd_recommend(const RecommendArgs& a, std::ostream& out) {
  CardinalityProfile profile;
  profile.attribute_cards = parse_numbers<std::uint64_t>(a.cards, "--cards");
  profile.class_card = a.class_card;
  try {
    profile.validate();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  if (!(a.factor > 0.0)) throw UsageError("--factor must be positive");

  const auto rep = recommend(profile, a.alpha, a.factor);
  out << "multivariate_cardinality " << rep.multivariate_cardinality << '\n'
      << "heuristic_m " << rep.heuristic_m << '\n'
      << "factor " << format_shortest(rep.factor) << '\n'
      << "chi2_m_star " << rep.chi2_m_star << '\n'
      << "alpha " << format_shortest(rep.alpha) << '\n'
      << "df " << rep.df << '\n'
      << "critical_value " << fixed6(rep.critical_value) << '\n'
      << "chi2_at_m_star " << fixed6(rep.chi2_at_m_star) << '\n';
  if (profile.has_unit_entries())
    out << "note: profile contains cardinality-1 variables, which carry no information\n";
}

// -------------------------------------------------------------- chi2-scan

struct ScanArgs {
  std::string ks = "8,12,15,18";
  double alpha = 0.05;
  double factor = 10.0;
  long long trace_k = 0;
  long long m_max = 500;
};

void cmd_chi2_scan(const ScanArgs& a, std::ostream& out) {
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  if (a.trace_k > 0) {
    if (a.trace_k < 2) throw UsageError("--trace needs k >= 2");
    const double crit = chi2_critical(a.alpha, static_cast<int>(a.trace_k - 1));
    out << "m,chi2,critical_value,rejected\n";
    for (long long m = a.trace_k - 1; m <= a.m_max; ++m) {
      const double stat = extreme_sample_chi2(m, a.trace_k);
      out << m << ',' << format_shortest(stat) << ',' << format_shortest(crit) << ','
          << (stat > crit ? 1 : 0) << '\n';
    }
    return;
  }
  out << "k,df,alpha,critical_value,m_star,chi2_at_m_star,heuristic_m\n";
  for (auto k : parse_numbers<long long>(a.ks, "--k")) {
    if (k < 2) throw UsageError("--k entries must be >= 2");
    const int df = static_cast<int>(k - 1);
    const long long m_star = min_representative_m(k, a.alpha);
    out << k << ',' << df << ',' << format_shortest(a.alpha) << ','
        << format_shortest(chi2_critical(a.alpha, df)) << ',' << m_star << ','
        << format_shortest(extreme_sample_chi2_equiprobable(m_star, k)) << ','
        << static_cast<long long>(std::ceil(a.factor * static_cast<double>(k))) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"msulab: multivariate symmetrical uncertainty and sample-size tools"};
  app.require_subcommand(1);

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "Compute an information measure over CSV columns");
  measure->add_option("csv", ma.csv, "Input CSV (header row, categorical cells)")->required();
  measure->add_option("--entropy", ma.entropy, "Joint entropy of the listed columns");
  measure->add_option("--su", ma.su, "Symmetrical uncertainty of two columns");
  measure->add_option("--msu", ma.msu, "Multivariate symmetrical uncertainty (>= 2 columns)");
  measure->add_option("--tc", ma.tc, "Total correlation (>= 2 columns)");
  measure->add_option("--ig", ma.ig, "Information gain between two columns");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
  generate->add_option("--rule", ga.rule, "xor, mk or uniform")->capture_default_str();
  generate->add_option("--cards", ga.cards, "Attribute cardinalities, e.g. 2,4");
  generate->add_option("--class-card", ga.class_card, "Class cardinality")->capture_default_str();
  generate->add_option("--k", ga.k, "Kononenko informativeness")->capture_default_str();
  generate->add_option("--noise", ga.noise, "XOR flip probability")->capture_default_str();
  generate->add_option("--m", ga.m, "Number of rows")->required();
  generate->add_option("--seed", ga.seed, "Seed (default: $MSULAB_SEED or built-in)");
  generate->add_option("--out", ga.out, "Output path (default: stdout)");

  ExperimentArgs ea;
  auto* experiment =
      app.add_subcommand("experiment", "Run a Monte-Carlo preset or JSON config, emit curve CSV");
  experiment->add_option("target", ea.target, "Preset name or path to a JSON config")->required();
  experiment->add_option("--replicates", ea.replicates, "Replicates per sweep point");
  experiment->add_option("--seed", ea.seed, "Master seed (default: $MSULAB_SEED or config)");
  experiment->add_option("--values", ea.values, "Override the sweep values, e.g. 2,10,20,40");
  experiment->add_option("--threads", ea.threads, "OpenMP threads (0: default)");
  experiment->add_flag("--serial", ea.serial, "Use the single-threaded reference path");
  experiment->add_option("--out", ea.out, "Output path (default: stdout)");

  RecommendArgs ra;
  auto* rec = app.add_subcommand("recommend", "Sample-size recommendation for a profile");
  rec->add_option("--cards", ra.cards, "Attribute cardinalities, e.g. 2,2");
  rec->add_option("--class-card", ra.class_card, "Class cardinality")->capture_default_str();
  rec->add_option("--alpha", ra.alpha, "Significance level")->capture_default_str();
  rec->add_option("--factor", ra.factor, "Heuristic multiplier")->capture_default_str();

  ScanArgs sa;
  auto* scan = app.add_subcommand("chi2-scan", "Minimal representative m for several k");
  scan->add_option("--k", sa.ks, "Cell counts, e.g. 8,12,15,18")->capture_default_str();
  scan->add_option("--alpha", sa.alpha, "Significance level")->capture_default_str();
  scan->add_option("--factor", sa.factor, "Heuristic multiplier")->capture_default_str();
  scan->add_option("--trace", sa.trace_k, "Print chi2 against m for this k instead");
  scan->add_option("--m-max", sa.m_max, "Upper m for --trace")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    if (*measure) cmd_measure(ma, out);
    else if (*generate) cmd_generate(ga, out);
    else if (*experiment) cmd_experiment(ea, out, err);
    else if (*rec) cmd_recommend(ra, out);
    else if (*scan) cmd_chi2_scan(sa, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace msulab::cli
