#include "msulab/chi_squared.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "msulab/error.hpp"

namespace msulab {

namespace {

constexpr int kMaxIter = 10000;
constexpr double kEps = 1e-16;

// Series expansion, converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q (modified Lentz), for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

void check_gamma_args(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw InvalidInput("incomplete gamma needs a > 0 and x >= 0");
}

}  // namespace

double gamma_p(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_fraction(a, x);
}

double gamma_q(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_fraction(a, x);
}

double chi2_survival(double x, double df) {
  if (!(df > 0.0)) throw InvalidInput("degrees of freedom must be positive");
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * x);
}

double chi2_critical(double alpha, int df) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  if (df < 1) throw InvalidInput("degrees of freedom must be >= 1");

  // survival is decreasing in x: bracket the root, then bisect.
  double lo = 0.0;
  double hi = std::max(1.0, static_cast<double>(df));
  while (chi2_survival(hi, df) > alpha) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (chi2_survival(mid, df) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double chi2_statistic(std::span<const long long> observed, std::span<const double> probabilities) {
  if (observed.empty()) throw InvalidInput("chi-squared statistic needs at least one cell");
  if (!probabilities.empty() && probabilities.size() != observed.size())
    throw InvalidInput("probabilities and observed counts differ in length");
  long long m = 0;
  for (auto o : observed) {
    if (o < 0) throw InvalidInput("observed counts must be non-negative");
    m += o;
  }
  if (m == 0) throw InvalidInput("chi-squared statistic needs a positive total count");
  if (probabilities.empty()) {
    // (k sum o^2 - m^2) / m in integers, then a single rounding
    __extension__ typedef __int128 i128;
    i128 sq = 0;
    for (auto o : observed) sq += static_cast<i128>(o) * o;
    const i128 num = static_cast<i128>(observed.size()) * sq - static_cast<i128>(m) * m;
    return static_cast<double>(num) / static_cast<double>(m);
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double p = probabilities[i];
    if (!(p > 0.0)) throw InvalidInput("cell probabilities must be positive");
    const double e = static_cast<double>(m) * p;
    const double d = static_cast<double>(observed[i]) - e;
    stat += d * d / e;
  }
  return stat;
}

}  // namespace msulab
