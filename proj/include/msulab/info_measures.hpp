#pragma once

// Plug-in (maximum-likelihood frequency) estimators of entropy-based
// measures over categorical samples. All logarithms are base 2.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "msulab/sample.hpp"

namespace msulab {

struct MeasureValue {
  double value = 0.0;
  bool degenerate = false;  // a 0/0 normalisation was resolved to 0
};

using ColumnSet = std::span<const std::size_t>;

/// Shannon entropy of a frequency vector. Zero counts contribute nothing.
/// Throws InvalidInput if every count is zero.
MeasureValue entropy(std::span<const std::uint64_t> counts);

MeasureValue joint_entropy(const CategoricalSample& sample, ColumnSet cols);

/// H(X|Y) = H(X,Y) - H(Y). X and Y must be non-empty and disjoint.
MeasureValue conditional_entropy(const CategoricalSample& sample, ColumnSet x_cols,
                                 ColumnSet y_cols);

/// H(X) + H(Y) - H(X,Y); symmetric in its arguments.
MeasureValue information_gain(const CategoricalSample& sample, ColumnSet x_cols,
                              ColumnSet y_cols);

/// 2 IG / (H(X) + H(Y)), in [0, 1]. Both entropies zero gives 0, degenerate.
MeasureValue symmetrical_uncertainty(const CategoricalSample& sample, std::size_t x_col,
                                     std::size_t y_col);

/// Sum of marginal entropies minus the joint entropy; needs >= 2 columns.
MeasureValue total_correlation(const CategoricalSample& sample, ColumnSet cols);

/// Multivariate symmetrical uncertainty
///   n/(n-1) * C(X_1..X_n) / sum_i H(X_i),
/// in [0, 1]; needs n >= 2 columns. All marginals constant gives 0, degenerate.
MeasureValue msu(const CategoricalSample& sample, ColumnSet cols);

inline MeasureValue joint_entropy(const CategoricalSample& s, std::initializer_list<std::size_t> c) {
  return joint_entropy(s, ColumnSet(c.begin(), c.size()));
}
inline MeasureValue total_correlation(const CategoricalSample& s,
                                      std::initializer_list<std::size_t> c) {
  return total_correlation(s, ColumnSet(c.begin(), c.size()));
}
inline MeasureValue msu(const CategoricalSample& s, std::initializer_list<std::size_t> c) {
  return msu(s, ColumnSet(c.begin(), c.size()));
}

}  // namespace msulab
