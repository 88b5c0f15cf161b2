#pragma once

// Synthetic attribute populations: uniform non-informative attributes,
// Kononenko individually-informative attributes and the noisy XOR pair
// (collectively informative).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msulab/rng.hpp"
#include "msulab/sample.hpp"

namespace msulab {

enum class GeneratorKind { Uniform, Kononenko, XorPair };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Uniform;
  std::uint32_t cardinality = 2;
  double k = 1.0;        // Kononenko informativeness
  double noise = 0.05;   // XOR class-flip probability

  /// Throws InvalidInput when the spec violates its kind's constraints.
  void validate() const;
};

/// i.i.d. uniform class column over {0..card-1}. One draw per row.
Column gen_class(std::uint32_t card, std::size_t m, SeededRng& rng);

/// Non-informative attribute: uniform and independent of everything else.
Column gen_uniform(std::uint32_t card, std::size_t m, SeededRng& rng);

/// P(value in the first half-alphabet | class index i), with i = 1..C:
/// 1/(i + kC) for even i and 1 - 1/(i + kC) for odd i.
double kononenko_first_half_prob(std::uint32_t class_index, double k, std::uint32_t class_card);

/// Kononenko attribute with V values. The first subset is codes [0, V/2),
/// the second [V/2, V); a row with class code c uses index i = c + 1. The
/// subset is chosen by the formula above and the value uniformly within it.
/// Two draws per row.
Column gen_kononenko(const Column& class_column, std::uint32_t cardinality, double k,
                     SeededRng& rng);

struct XorTriple {
  Column f1;
  Column f2;
  Column cls;
};

/// f1, f2 uniform binary; class = f1 XOR f2, flipped with probability
/// `noise`. Three draws per row. Requires 0 <= noise < 0.5.
XorTriple gen_xor_pair(std::size_t m, double noise, SeededRng& rng);

/// Full dataset for the `generate` command: attributes f1..fn then `clase`.
/// Kononenko/uniform: class from fork(0), attribute j from fork(1 + j).
/// XorPair: f1, f2, clase from fork(1); `attribute_cards` must be {2, 2}.
struct DatasetSpec {
  GeneratorKind kind = GeneratorKind::Uniform;
  std::vector<std::uint32_t> attribute_cards;
  std::uint32_t class_card = 2;
  double k = 1.0;
  double noise = 0.05;
};

CategoricalSample generate_dataset(const DatasetSpec& spec, std::size_t m, const SeededRng& rng);

/// Binary entropy in bits.
double binary_entropy(double p);

/// Population MSU of {f1, f2, class} plus `extra_bits` bits of independent
/// uniform attributes (`extra_count` of them): TC = 1 - H_b(noise).
double xor_population_msu(double noise, std::size_t extra_count = 0, double extra_bits = 0.0);

}  // namespace msulab
