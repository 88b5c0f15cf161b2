#include "msulab/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "msulab/error.hpp"
#include "msulab/presets.hpp"

namespace msulab {

using nlohmann::json;

namespace {

const std::set<std::string> kKeys{
    "name",      "preset",     "rule",   "sweep",  "n_informative", "informative_card",
    "n_noninformative", "class_card", "sample_size_policy", "replicates", "master_seed",
    "k",         "noise",      "merged", "equivalence", "max_sample_size"};

Sweep parse_sweep(const json& j) {
  if (!j.is_object() || !j.contains("axis")) throw InvalidInput("sweep needs an 'axis'");
  const auto axis = parse_axis(j.at("axis").get<std::string>());
  if (j.contains("values")) return Sweep{axis, j.at("values").get<std::vector<long long>>()};
  if (j.contains("from") && j.contains("to"))
    return Sweep::range(axis, j.at("from").get<long long>(), j.at("to").get<long long>(),
                        j.value("step", 1LL));
  throw InvalidInput("sweep needs 'values' or 'from'/'to'");
}

SampleSizePolicy parse_policy(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "fixed") return SampleSizePolicy::fixed(j.at("m").get<long long>());
  if (kind == "computed") return SampleSizePolicy::computed(j.value("factor", 10.0));
  throw InvalidInput("sample_size_policy kind must be 'fixed' or 'computed'");
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKeys.count(key)) throw InvalidInput("unknown config key '" + key + "'");

  try {
    ExperimentConfig c = j.contains("preset") ? preset(j.at("preset").get<std::string>())
                                              : ExperimentConfig{};
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    if (j.contains("rule")) c.rule = parse_rule(j.at("rule").get<std::string>());
    if (j.contains("sweep")) c.sweep = parse_sweep(j.at("sweep"));
    if (j.contains("n_informative")) c.n_informative = j.at("n_informative").get<int>();
    if (j.contains("informative_card"))
      c.informative_card = j.at("informative_card").get<std::uint32_t>();
    if (j.contains("n_noninformative")) c.n_noninformative = j.at("n_noninformative").get<int>();
    if (j.contains("class_card")) c.class_card = j.at("class_card").get<std::uint32_t>();
    if (j.contains("sample_size_policy"))
      c.sample_size_policy = parse_policy(j.at("sample_size_policy"));
    if (j.contains("replicates")) c.replicates = j.at("replicates").get<int>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("k")) c.k = j.at("k").get<double>();
    if (j.contains("noise")) c.noise = j.at("noise").get<double>();
    if (j.contains("merged")) c.merged = j.at("merged").get<bool>();
    if (j.contains("equivalence")) c.equivalence = j.at("equivalence").get<bool>();
    if (j.contains("max_sample_size")) c.max_sample_size = j.at("max_sample_size").get<long long>();
    if (c.name.empty()) c.name = "custom";
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad config value: ") + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json policy = c.sample_size_policy.kind == SampleSizePolicy::Kind::Fixed
                    ? json{{"kind", "fixed"}, {"m", c.sample_size_policy.fixed_m}}
                    : json{{"kind", "computed"}, {"factor", c.sample_size_policy.factor}};
  json j{{"name", c.name},
         {"rule", to_string(c.rule)},
         {"sweep", {{"axis", to_string(c.sweep.axis)}, {"values", c.sweep.values}}},
         {"n_informative", c.n_informative},
         {"informative_card", c.informative_card},
         {"n_noninformative", c.n_noninformative},
         {"class_card", c.class_card},
         {"sample_size_policy", policy},
         {"replicates", c.replicates},
         {"master_seed", c.master_seed},
         {"k", c.k},
         {"noise", c.noise},
         {"merged", c.merged},
         {"equivalence", c.equivalence},
         {"max_sample_size", c.max_sample_size}};
  return j.dump(2);
}

}  // namespace msulab
