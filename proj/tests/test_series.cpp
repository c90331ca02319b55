#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "k3inv/integer.hpp"
#include "k3inv/series.hpp"

using k3inv::Integer;
namespace series = k3inv::series;

namespace {

// independent oracle: count monomials of each weighted degree by direct
// enumeration of exponent vectors
std::vector<long long> monomial_counts(const std::vector<int>& weights, int upto) {
  std::vector<long long> counts(static_cast<std::size_t>(upto) + 1, 0);
  std::vector<long long>* out = &counts;
  auto recurse = [&](auto&& self, std::size_t var, int degree) -> void {
    if (var == weights.size()) {
      ++(*out)[static_cast<std::size_t>(degree)];
      return;
    }
    for (int d = degree; d <= upto; d += weights[var]) self(self, var + 1, d);
  };
  recurse(recurse, 0, 0);
  return counts;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(series::binomial(5, 2) == 10);
  CHECK(series::binomial(10, 5) == 252);
  CHECK(series::binomial(9, 3) == 84);
  CHECK(series::binomial(0, 0) == 1);
  CHECK(series::binomial(7, -1) == 0);
  CHECK(series::binomial(7, 8) == 0);
  CHECK_THROWS_AS(series::binomial(-1, 0), std::domain_error);
  // a frozen large value
  CHECK(series::binomial(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 40") {
  // oracle: an independently built Pascal triangle in 64-bit arithmetic
  long long triangle[41][41] = {};
  for (int n = 0; n <= 40; ++n) {
    triangle[n][0] = triangle[n][n] = 1;
    for (int k = 1; k < n; ++k) triangle[n][k] = triangle[n - 1][k - 1] + triangle[n - 1][k];
  }
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) CHECK(series::binomial(n, k) == triangle[n][k]);
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(series::binomial(n, k) ==
            series::binomial(n - 1, k - 1) + series::binomial(n - 1, k));
}

TEST_CASE("h_proj counts sections on projective space") {
  CHECK(series::h_proj(3, 4) == 35);
  CHECK(series::h_proj(3, 3) == 20);
  CHECK(series::h_proj(4, 0) == 1);
  CHECK(series::h_proj(3, -1) == 0);
  CHECK(series::h_proj(2, 9) == 55);
  CHECK_THROWS_AS(series::h_proj(-2, 1), std::domain_error);
}

TEST_CASE("one_over_products matches the stated examples") {
  CHECK(series::one_over_products(std::vector<int>{1, 1, 1, 1}, 4).coefficient(4) == 35);
  CHECK(series::one_over_products(std::vector<int>{1, 1, 1, 1, 3, 3, 3, 3}, 3).coefficient(3) ==
        24);
  CHECK(series::one_over_products(std::vector<int>{2}, 3).coefficient(3) == 0);
  // empty weight list is the point: the series 1
  auto point = series::one_over_products({}, 5);
  CHECK(point.coefficient(0) == 1);
  CHECK(point.coefficient(5) == 0);
}

TEST_CASE("one_over_products equals brute-force monomial enumeration") {
  std::vector<std::vector<int>> cases = {
      {1}, {2}, {3, 3}, {1, 2}, {1, 1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1, 1}, {4, 6}, {1, 5},
      {2, 3, 4, 5}, {1, 1, 3, 3, 5}};
  for (const auto& weights : cases) {
    auto s = series::one_over_products(weights, 12);
    auto oracle = monomial_counts(weights, 12);
    for (int d = 0; d <= 12; ++d) CHECK(s.coefficient(d) == oracle[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("ratio matches the stated examples") {
  std::vector<int> p5 = {1, 1, 1, 1, 1};
  CHECK(series::ratio(std::vector<int>{2, 2, 3}, p5, 2).coefficient(2) == 13);
  CHECK(series::ratio(std::vector<int>{2, 2, 3}, p5, 3).coefficient(3) == 24);
  CHECK(series::ratio({}, std::vector<int>{1, 1, 1, 1}, 4).coefficient(4) == 35);
  CHECK_THROWS_AS(series::ratio(std::vector<int>{2}, {}, 3), std::invalid_argument);
}

TEST_CASE("ratio equals the inclusion-exclusion sum over numerator subsets") {
  std::vector<int> weights = {1, 1, 2, 3};
  std::vector<int> degrees = {2, 3, 4};
  const int upto = 12;
  auto s = series::ratio(degrees, weights, upto);
  auto base = series::one_over_products(weights, upto);
  for (int d = 0; d <= upto; ++d) {
    Integer sum = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
      int shift = 0;
      int sign = 1;
      for (unsigned i = 0; i < 3; ++i)
        if (mask & (1u << i)) {
          shift += degrees[i];
          sign = -sign;
        }
      if (d - shift >= 0) sum += Integer(sign) * base.coefficient(d - shift);
    }
    CHECK(s.coefficient(d) == sum);
  }
}

TEST_CASE("ratio with no numerator coincides with one_over_products") {
  std::vector<int> weights = {1, 2, 2, 5};
  auto a = series::ratio({}, weights, 10);
  auto b = series::one_over_products(weights, 10);
  for (int d = 0; d <= 10; ++d) CHECK(a.coefficient(d) == b.coefficient(d));
}

TEST_CASE("series boundary behaviour") {
  auto s = series::one_over_products(std::vector<int>{1, 1}, 3);
  CHECK(s.truncation_order() == 3);
  CHECK(s.coefficient(-2) == 0);
  CHECK_THROWS_AS(s.coefficient(4), std::out_of_range);
  CHECK_THROWS_AS(series::one_over_products(std::vector<int>{0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(series::TruncatedSeries(-1), std::invalid_argument);
}
