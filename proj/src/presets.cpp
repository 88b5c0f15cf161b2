#include "msulab/presets.hpp"

#include <functional>

#include "msulab/error.hpp"

namespace msulab {

const std::vector<long long>& catalog_cardinalities() {
  static const std::vector<long long> cards{2, 4, 5, 8, 10, 16, 20, 30, 32, 40, 64};
  return cards;
}

namespace {

std::vector<long long> cards_up_to(long long hi) {
  std::vector<long long> out;
  for (auto c : catalog_cardinalities())
    if (c <= hi) out.push_back(c);
  return out;
}

ExperimentConfig base(std::string name, Rule rule, Sweep sweep, int n_inf, std::uint32_t card,
                      int n_non, std::uint32_t class_card, SampleSizePolicy policy) {
  ExperimentConfig c;
  c.name = std::move(name);
  c.rule = rule;
  c.sweep = std::move(sweep);
  c.n_informative = n_inf;
  c.informative_card = card;
  c.n_noninformative = n_non;
  c.class_card = class_card;
  c.sample_size_policy = policy;
  return c;
}

ExperimentConfig equivalence(std::string name, Rule rule) {
  auto c = base(std::move(name), rule, Sweep::range(SweepAxis::AttributeCount, 4, 12, 2),
                rule == Rule::MK ? 4 : 0, 2, rule == Rule::None ? 4 : 0, 2,
                SampleSizePolicy::fixed(5000));
  c.equivalence = true;
  return c;
}

using Factory = std::function<ExperimentConfig()>;

const std::vector<std::pair<std::string, Factory>>& catalog() {
  using SP = SampleSizePolicy;
  static const std::vector<std::pair<std::string, Factory>> table{
      {"fig-a1", [] { return base("fig-a1", Rule::MK, {SweepAxis::Cardinality, cards_up_to(40)}, 1, 2, 1, 10, SP::fixed(1000)); }},
      {"fig-a2", [] { return base("fig-a2", Rule::MK, {SweepAxis::Cardinality, cards_up_to(40)}, 1, 2, 1, 2, SP::fixed(1000)); }},
      {"fig-e1", [] { return base("fig-e1", Rule::MK, Sweep::range(SweepAxis::SampleSize, 8, 50), 2, 2, 2, 2, SP::fixed(8)); }},
      {"fig-e2", [] { return base("fig-e2", Rule::MK, Sweep::range(SweepAxis::SampleSize, 8, 150), 2, 2, 2, 2, SP::fixed(8)); }},
      {"fig-b1", [] { return base("fig-b1", Rule::XOR, Sweep::range(SweepAxis::SampleSize, 8, 50), 2, 2, 0, 2, SP::fixed(8)); }},
      {"fig-b2", [] { return base("fig-b2", Rule::XOR, Sweep::range(SweepAxis::SampleSize, 8, 150), 2, 2, 0, 2, SP::fixed(8)); }},
      {"fig-c", [] { return equivalence("fig-c", Rule::MK); }},
      {"fig-d", [] { return equivalence("fig-d", Rule::None); }},
      {"fig-f1", [] { return base("fig-f1", Rule::MK, {SweepAxis::Cardinality, cards_up_to(40)}, 2, 2, 2, 2, SP::fixed(5000)); }},
      {"fig-f2", [] { return base("fig-f2", Rule::MK, {SweepAxis::Cardinality, cards_up_to(40)}, 2, 2, 2, 2, SP::computed(10.0)); }},
      {"fig-g", [] { return base("fig-g", Rule::Both, Sweep::range(SweepAxis::AttributeCount, 2, 20), 2, 2, 13, 2, SP::fixed(1000)); }},
      {"fig-h", [] { return base("fig-h", Rule::Both, Sweep::range(SweepAxis::AttributeCount, 2, 20), 2, 2, 13, 2, SP::computed(10.0)); }},
      {"fig-xor-1", [] { return base("fig-xor-1", Rule::XOR, Sweep::range(SweepAxis::AddedNoise, 1, 13), 2, 2, 0, 2, SP::fixed(600)); }},
      {"fig-xor-2", [] { return base("fig-xor-2", Rule::XOR, Sweep::range(SweepAxis::AddedNoise, 1, 13), 2, 2, 0, 2, SP::computed(10.0)); }},
      {"fig-xor-3", [] { auto c = base("fig-xor-3", Rule::Both, Sweep::range(SweepAxis::AttributeCount, 3, 15), 3, 2, 0, 2, SP::fixed(600)); c.merged = true; return c; }},
      {"fig-xor-4", [] { auto c = base("fig-xor-4", Rule::Both, Sweep::range(SweepAxis::AttributeCount, 3, 15), 3, 2, 0, 2, SP::computed(10.0)); c.merged = true; return c; }},
      {"chi-scan", [] { return base("chi-scan", Rule::None, Sweep::range(SweepAxis::AttributeCount, 2, 4), 0, 2, 2, 2, SP::computed(10.0)); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

ExperimentConfig preset(const std::string& name) {
  for (const auto& [n, make] : catalog())
    if (n == name) return make();
  std::string list;
  for (const auto& n : preset_names()) list += (list.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown preset '" + name + "'; catalog: " + list);
}

}  // namespace msulab
