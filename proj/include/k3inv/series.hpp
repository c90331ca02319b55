#pragma once

#include <span>
#include <vector>

#include "k3inv/integer.hpp"

namespace k3inv::series {

/// Integer coefficient sequence of a formal power series, exact for every
/// degree from 0 up to the truncation order.
class TruncatedSeries {
 public:
  /// The zero series with the given truncation order (>= 0).
  explicit TruncatedSeries(int truncation_order);
  /// The constant series 1.
  static TruncatedSeries one(int truncation_order);

  int truncation_order() const { return static_cast<int>(coefficients_.size()) - 1; }

  /// Coefficient at degree d. Degrees below zero read as 0 so that
  /// inclusion-exclusion sums need no special cases; degrees beyond the
  /// truncation order throw std::out_of_range.
  const Integer& coefficient(int d) const;

  /// Multiply by (1 - t^e), exact up to the truncation order.
  void fold_one_minus_power(int e);
  /// Divide by (1 - t^w), i.e. multiply by the geometric series of t^w.
  void unfold_one_minus_power(int w);

 private:
  std::vector<Integer> coefficients_;  // index = degree
};

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(long long n, long long k);

/// Section count of degree-k forms on projective n-space: C(n+k, n) for
/// k >= 0, zero for negative k.
Integer h_proj(int n, long long k);

/// Expansion of prod_j 1/(1 - t^{w_j}); the coefficient at d counts the
/// monomials of weighted degree d in variables of the given weights. An
/// empty weight list yields the series 1 (point case).
TruncatedSeries one_over_products(std::span<const int> weights, int truncation);

/// Expansion of prod_i (1 - t^{d_i}) / prod_j (1 - t^{w_j}). Purely formal:
/// whether the degrees actually form a regular sequence is the caller's
/// concern. Weights must be non-empty.
TruncatedSeries ratio(std::span<const int> numerator_degrees,
                      std::span<const int> weights, int truncation);

}  // namespace k3inv::series
