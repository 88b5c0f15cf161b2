#pragma once

// Sample-size recommendations: multivariate cardinality, the
// 10 x multivariate-cardinality heuristic, and the chi-squared "extreme
// sample" search for the smallest m at which a sample missing one cell is
// rejected as a draw from the multinomial.

#include <cstdint>
#include <span>
#include <vector>

namespace msulab {

struct CardinalityProfile {
  std::vector<std::uint64_t> attribute_cards;
  std::uint64_t class_card = 2;

  /// Throws InvalidInput on zero entries.
  void validate() const;
  /// Entries of 1 are permitted but carry no information.
  bool has_unit_entries() const;
};

/// class_card x product of attribute_cards. Throws on 64-bit overflow.
std::uint64_t multivariate_cardinality(const CardinalityProfile& profile);

/// ceil(factor x multivariate_cardinality); factor > 0.
std::uint64_t heuristic_sample_size(const CardinalityProfile& profile, double factor = 10.0);

/// Canonical extreme sample over k equiprobable cells: the last cell is 0 and
/// m is spread over the other k-1 as evenly as possible, the first
/// m mod (k-1) of them receiving the extra unit. Requires m >= k-1 >= 1.
std::vector<long long> extreme_sample(long long m, long long k);

/// Extreme sample for unequal cell probabilities: the zero goes to the
/// lowest-probability cell (last one on ties), every other cell gets one
/// unit and the remaining m-(k-1) units are split proportionally to the
/// probabilities by largest remainder (ties to the lower index). Reduces to
/// the canonical spread for equal probabilities.
std::vector<long long> extreme_sample(long long m, std::span<const double> probabilities);

/// Pearson statistic of the extreme sample of size m. Empty `probabilities`
/// means k equiprobable cells.
double extreme_sample_chi2(long long m, long long k, std::span<const double> probabilities = {});

/// Closed form of the equiprobable case, O(1) in k.
double extreme_sample_chi2_equiprobable(long long m, long long k);

inline constexpr long long kScanLimit = 10'000'000;

/// Smallest m >= k-1 whose extreme sample has chi^2 above the critical value
/// at level alpha with k-1 degrees of freedom, by ascending scan. Throws if
/// no crossing is found below kScanLimit.
long long min_representative_m(long long k, double alpha,
                               std::span<const double> probabilities = {});

struct RepresentativenessReport {
  std::uint64_t multivariate_cardinality = 0;
  std::uint64_t heuristic_m = 0;
  long long chi2_m_star = 0;
  double factor = 10.0;
  double alpha = 0.05;
  int df = 0;
  double critical_value = 0.0;
  double chi2_at_m_star = 0.0;
};

RepresentativenessReport recommend(const CardinalityProfile& profile, double alpha = 0.05,
                                   double factor = 10.0);

}  // namespace msulab
