#include "msulab/sample_size.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "msulab/chi_squared.hpp"
#include "msulab/error.hpp"

namespace msulab {

void CardinalityProfile::validate() const {
  if (class_card < 1) throw InvalidInput("class cardinality must be positive");
  for (auto c : attribute_cards)
    if (c < 1) throw InvalidInput("attribute cardinalities must be positive");
}

bool CardinalityProfile::has_unit_entries() const {
  return class_card == 1 || std::find(attribute_cards.begin(), attribute_cards.end(), 1u) !=
                                attribute_cards.end();
}

std::uint64_t multivariate_cardinality(const CardinalityProfile& profile) {
  profile.validate();
  std::uint64_t product = profile.class_card;
  for (auto c : profile.attribute_cards) {
    if (product > std::numeric_limits<std::uint64_t>::max() / c)
      throw InvalidInput("multivariate cardinality overflows 64 bits");
    product *= c;
  }
  return product;
}

std::uint64_t heuristic_sample_size(const CardinalityProfile& profile, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw InvalidInput("factor must be positive");
  const double m = std::ceil(factor * static_cast<double>(multivariate_cardinality(profile)));
  if (m >= 1.8e19) throw InvalidInput("heuristic sample size overflows 64 bits");
  return static_cast<std::uint64_t>(m);
}

namespace {

void check_extreme_args(long long m, long long k) {
  if (k < 2) throw InvalidInput("extreme sample needs k >= 2 cells");
  if (m < k - 1)
    throw InvalidInput("extreme sample needs m >= k-1 (m=" + std::to_string(m) +
                       ", k=" + std::to_string(k) + ")");
}

void check_probabilities(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v > 0.0)) throw InvalidInput("cell probabilities must be positive");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw InvalidInput("cell probabilities must sum to 1");
}

}  // namespace

std::vector<long long> extreme_sample(long long m, long long k) {
  check_extreme_args(m, k);
  const long long q = m / (k - 1);
  const long long r = m % (k - 1);
  std::vector<long long> out(static_cast<std::size_t>(k), q);
  for (long long i = 0; i < r; ++i) ++out[static_cast<std::size_t>(i)];
  out.back() = 0;
  return out;
}

std::vector<long long> extreme_sample(long long m, std::span<const double> probabilities) {
  const auto k = static_cast<long long>(probabilities.size());
  check_extreme_args(m, k);
  check_probabilities(probabilities);

  std::size_t zero = 0;
  for (std::size_t i = 1; i < probabilities.size(); ++i)
    if (probabilities[i] <= probabilities[zero]) zero = i;

  double mass = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i)
    if (i != zero) mass += probabilities[i];

  const long long spare = m - (k - 1);
  std::vector<long long> out(probabilities.size(), 1);
  std::vector<std::pair<double, std::size_t>> remainders;
  long long given = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (i == zero) continue;
    const double share = static_cast<double>(spare) * probabilities[i] / mass;
    const auto whole = static_cast<long long>(std::floor(share));
    out[i] += whole;
    given += whole;
    remainders.emplace_back(share - static_cast<double>(whole), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (long long u = 0; u < spare - given; ++u)
    ++out[remainders[static_cast<std::size_t>(u) % remainders.size()].second];
  out[zero] = 0;
  return out;
}

double extreme_sample_chi2_equiprobable(long long m, long long k) {
  check_extreme_args(m, k);
  const long long q = m / (k - 1);
  const long long r = m % (k - 1);
  const double e = static_cast<double>(m) / static_cast<double>(k);
  const double hi = static_cast<double>(q + 1) - e;
  const double lo = static_cast<double>(q) - e;
  return e + (static_cast<double>(r) * hi * hi + static_cast<double>(k - 1 - r) * lo * lo) / e;
}

double extreme_sample_chi2(long long m, long long k, std::span<const double> probabilities) {
  if (probabilities.empty()) {
    const auto obs = extreme_sample(m, k);
    return chi2_statistic(obs);
  }
  if (static_cast<long long>(probabilities.size()) != k)
    throw InvalidInput("probability vector length must equal k");
  const auto obs = extreme_sample(m, probabilities);
  return chi2_statistic(obs, probabilities);
}

long long min_representative_m(long long k, double alpha, std::span<const double> probabilities) {
  if (k < 2) throw InvalidInput("min_representative_m needs k >= 2");
  if (!probabilities.empty()) {
    if (static_cast<long long>(probabilities.size()) != k)
      throw InvalidInput("probability vector length must equal k");
    check_probabilities(probabilities);
  }
  const double critical = chi2_critical(alpha, static_cast<int>(k - 1));
  for (long long m = k - 1; m <= kScanLimit; ++m) {
    const double stat = probabilities.empty() ? extreme_sample_chi2_equiprobable(m, k)
                                              : extreme_sample_chi2(m, k, probabilities);
    if (stat > critical) return m;
  }
  throw InvalidInput("no representative sample size below " + std::to_string(kScanLimit) +
                     " for k=" + std::to_string(k));
}

RepresentativenessReport recommend(const CardinalityProfile& profile, double alpha,
                                   double factor) {
  RepresentativenessReport rep;
  rep.multivariate_cardinality = multivariate_cardinality(profile);
  rep.heuristic_m = heuristic_sample_size(profile, factor);
  rep.factor = factor;
  rep.alpha = alpha;
  if (rep.multivariate_cardinality < 2)
    throw InvalidInput("chi-squared search needs a multivariate cardinality of at least 2");
  if (rep.multivariate_cardinality > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw InvalidInput("multivariate cardinality too large for the chi-squared search");
  const auto k = static_cast<long long>(rep.multivariate_cardinality);
  rep.df = static_cast<int>(k - 1);
  rep.critical_value = chi2_critical(alpha, rep.df);
  rep.chi2_m_star = min_representative_m(k, alpha);
  rep.chi2_at_m_star = extreme_sample_chi2_equiprobable(rep.chi2_m_star, k);
  return rep;
}

}  // namespace msulab
