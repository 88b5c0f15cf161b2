#include "msulab/generators.hpp"

#include <cmath>
#include <string>

#include "msulab/error.hpp"

namespace msulab {

void GeneratorSpec::validate() const {
  switch (kind) {
    case GeneratorKind::Uniform:
      if (cardinality < 1) throw InvalidInput("uniform attribute needs cardinality >= 1");
      break;
    case GeneratorKind::Kononenko:
      if (cardinality < 2) throw InvalidInput("Kononenko attribute needs V >= 2");
      if (!(k > 0.0)) throw InvalidInput("Kononenko k must be positive");
      break;
    case GeneratorKind::XorPair:
      if (cardinality != 2) throw InvalidInput("XOR pair is binary only");
      if (!(noise >= 0.0 && noise < 0.5)) throw InvalidInput("XOR noise must lie in [0, 0.5)");
      break;
  }
}

Column gen_class(std::uint32_t card, std::size_t m, SeededRng& rng) {
  if (card < 2) throw InvalidInput("class cardinality must be >= 2");
  if (m < 1) throw InvalidInput("sample size must be >= 1");
  return gen_uniform(card, m, rng);
}

Column gen_uniform(std::uint32_t card, std::size_t m, SeededRng& rng) {
  if (card < 1) throw InvalidInput("cardinality must be >= 1");
  if (m < 1) throw InvalidInput("sample size must be >= 1");
  Column col{std::vector<Code>(m), card};
  for (auto& c : col.codes) c = static_cast<Code>(rng.uniform_int(card));
  return col;
}

double kononenko_first_half_prob(std::uint32_t class_index, double k, std::uint32_t class_card) {
  if (class_card < 1 || class_index < 1 || class_index > class_card)
    throw InvalidInput("class index " + std::to_string(class_index) + " outside 1.." +
                       std::to_string(class_card));
  if (!(k > 0.0)) throw InvalidInput("Kononenko k must be positive");
  const double q = 1.0 / (class_index + k * class_card);
  return class_index % 2 == 0 ? q : 1.0 - q;
}

Column gen_kononenko(const Column& class_column, std::uint32_t cardinality, double k,
                     SeededRng& rng) {
  if (cardinality < 2) throw InvalidInput("Kononenko attribute needs V >= 2");
  const std::uint32_t C = class_column.cardinality;
  const std::uint32_t first = cardinality / 2;
  const std::uint32_t second = cardinality - first;

  std::vector<double> p_first(C);
  for (std::uint32_t i = 1; i <= C; ++i) p_first[i - 1] = kononenko_first_half_prob(i, k, C);

  Column col{std::vector<Code>(class_column.codes.size()), cardinality};
  for (std::size_t r = 0; r < col.codes.size(); ++r) {
    const bool in_first = rng.bernoulli(p_first[class_column.codes[r]]);
    const auto within = rng.uniform_int(in_first ? first : second);
    col.codes[r] = static_cast<Code>(in_first ? within : first + within);
  }
  return col;
}

XorTriple gen_xor_pair(std::size_t m, double noise, SeededRng& rng) {
  if (!(noise >= 0.0 && noise < 0.5)) throw InvalidInput("XOR noise must lie in [0, 0.5)");
  if (m < 1) throw InvalidInput("sample size must be >= 1");
  XorTriple t{{std::vector<Code>(m), 2}, {std::vector<Code>(m), 2}, {std::vector<Code>(m), 2}};
  for (std::size_t r = 0; r < m; ++r) {
    const auto a = static_cast<Code>(rng.uniform_int(2));
    const auto b = static_cast<Code>(rng.uniform_int(2));
    const Code flip = rng.bernoulli(noise) ? 1 : 0;
    t.f1.codes[r] = a;
    t.f2.codes[r] = b;
    t.cls.codes[r] = a ^ b ^ flip;
  }
  return t;
}

CategoricalSample generate_dataset(const DatasetSpec& spec, std::size_t m, const SeededRng& rng) {
  std::vector<Column> cols;
  std::vector<std::string> names;
  if (spec.kind == GeneratorKind::XorPair) {
    if (spec.attribute_cards != std::vector<std::uint32_t>{2, 2} || spec.class_card != 2)
      throw InvalidInput("XOR datasets have two binary attributes and a binary class");
    auto r = rng.fork(1);
    auto t = gen_xor_pair(m, spec.noise, r);
    cols = {std::move(t.f1), std::move(t.f2), std::move(t.cls)};
    names = {"f1", "f2", "clase"};
  } else {
    if (spec.attribute_cards.empty()) throw InvalidInput("dataset needs at least one attribute");
    auto class_rng = rng.fork(0);
    Column cls = gen_class(spec.class_card, m, class_rng);
    for (std::size_t j = 0; j < spec.attribute_cards.size(); ++j) {
      auto r = rng.fork(1 + j);
      const auto card = spec.attribute_cards[j];
      cols.push_back(spec.kind == GeneratorKind::Kononenko ? gen_kononenko(cls, card, spec.k, r)
                                                           : gen_uniform(card, m, r));
      names.push_back("f" + std::to_string(j + 1));
    }
    cols.push_back(std::move(cls));
    names.push_back("clase");
  }
  return CategoricalSample(std::move(cols), std::move(names));
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double xor_population_msu(double noise, std::size_t extra_count, double extra_bits) {
  const double n = 3.0 + static_cast<double>(extra_count);
  const double tc = 1.0 - binary_entropy(noise);
  return n / (n - 1.0) * tc / (3.0 + extra_bits);
}

}  // namespace msulab
