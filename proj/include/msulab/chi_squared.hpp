#pragma once

#include <span>

namespace msulab {

/// Regularised lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularised upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Upper-tail probability of a chi-squared variate with `df` degrees of freedom.
double chi2_survival(double x, double df);

/// x such that chi2_survival(x, df) == alpha, to an absolute accuracy well
/// inside 1e-6. Requires 0 < alpha < 1 and df >= 1.
double chi2_critical(double alpha, int df);

/// Pearson statistic sum (O_i - E_i)^2 / E_i with E_i = m p_i, m = sum O_i.
/// Empty `probabilities` means equiprobable cells.
double chi2_statistic(std::span<const long long> observed, std::span<const double> probabilities = {});

}  // namespace msulab
