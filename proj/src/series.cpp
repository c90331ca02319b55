#include "k3inv/series.hpp"

#include <stdexcept>

namespace k3inv::series {

namespace {
const Integer kZero{};

void check_truncation(int truncation) {
  if (truncation < 0) throw std::invalid_argument("series: truncation must be >= 0");
}
}  // namespace

TruncatedSeries::TruncatedSeries(int truncation_order) {
  check_truncation(truncation_order);
  coefficients_.assign(static_cast<std::size_t>(truncation_order) + 1, Integer{});
}

TruncatedSeries TruncatedSeries::one(int truncation_order) {
  TruncatedSeries s(truncation_order);
  s.coefficients_[0] = 1;
  return s;
}

const Integer& TruncatedSeries::coefficient(int d) const {
  if (d < 0) return kZero;
  if (d >= static_cast<int>(coefficients_.size()))
    throw std::out_of_range("series: coefficient past the truncation order");
  return coefficients_[static_cast<std::size_t>(d)];
}

void TruncatedSeries::fold_one_minus_power(int e) {
  if (e < 1) throw std::invalid_argument("series: power must be >= 1");
  // descending so that the subtracted coefficient is still the old value
  for (int d = truncation_order(); d >= e; --d)
    coefficients_[static_cast<std::size_t>(d)] -= coefficients_[static_cast<std::size_t>(d - e)];
}

void TruncatedSeries::unfold_one_minus_power(int w) {
  if (w < 1) throw std::invalid_argument("series: power must be >= 1");
  for (int d = w; d <= truncation_order(); ++d)
    coefficients_[static_cast<std::size_t>(d)] += coefficients_[static_cast<std::size_t>(d - w)];
}

Integer binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  long long kk = std::min(k, n - k);
  Integer result = 1;
  for (long long i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: result is C(n - kk + i, i)
  }
  return result;
}

Integer h_proj(int n, long long k) {
  if (n < 0) throw std::domain_error("h_proj: ambient dimension must be >= 0");
  if (k < 0) return 0;
  return binomial(n + k, n);
}

TruncatedSeries one_over_products(std::span<const int> weights, int truncation) {
  check_truncation(truncation);
  TruncatedSeries s = TruncatedSeries::one(truncation);
  for (int w : weights) {
    if (w < 1) throw std::invalid_argument("series: weights must be positive");
    s.unfold_one_minus_power(w);
  }
  return s;
}

TruncatedSeries ratio(std::span<const int> numerator_degrees,
                      std::span<const int> weights, int truncation) {
  if (weights.empty()) throw std::invalid_argument("series: ratio requires non-empty weights");
  TruncatedSeries s = one_over_products(weights, truncation);
  for (int e : numerator_degrees) {
    if (e < 1) throw std::invalid_argument("series: degrees must be positive");
    s.fold_one_minus_power(e);
  }
  return s;
}

}  // namespace k3inv::series
