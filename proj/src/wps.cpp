#include "k3inv/wps.hpp"

#include <numeric>
#include <stdexcept>

#include "k3inv/series.hpp"

namespace k3inv::wps {

WeightedCompleteIntersection::WeightedCompleteIntersection(std::vector<int> weights,
                                                           std::vector<int> degrees)
    : weights_(std::move(weights)), degrees_(std::move(degrees)) {
  if (weights_.empty())
    throw std::invalid_argument("wps: ambient space needs at least one weight");
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("wps: weights must be positive");
  for (int d : degrees_)
    if (d < 1) throw std::invalid_argument("wps: degrees must be positive");
  if (degrees_.size() >= weights_.size())
    throw std::invalid_argument("wps: need fewer hypersurfaces than coordinates");
}

int WeightedCompleteIntersection::dimension() const {
  return static_cast<int>(weights_.size()) - 1 - static_cast<int>(degrees_.size());
}

long long WeightedCompleteIntersection::canonical_weight() const {
  long long sum_d = std::accumulate(degrees_.begin(), degrees_.end(), 0ll);
  long long sum_w = std::accumulate(weights_.begin(), weights_.end(), 0ll);
  return sum_d - sum_w;
}

Integer section_count(const WeightedCompleteIntersection& x, int m) {
  if (m < 0) throw std::domain_error("wps: section count needs m >= 0");
  return series::ratio(x.degrees(), x.weights(), m + 1).coefficient(m);
}

long long canonical_weight(const WeightedCompleteIntersection& x) {
  return x.canonical_weight();
}

long long fano_index(const WeightedCompleteIntersection& x, int polarization_weight) {
  if (polarization_weight < 1)
    throw std::invalid_argument("wps: polarization weight must be positive");
  long long anticanonical = -x.canonical_weight();
  if (anticanonical <= 0)
    throw std::domain_error("wps: variety is not Fano (anticanonical weight <= 0)");
  if (anticanonical % polarization_weight != 0)
    throw std::domain_error("polarization does not divide anticanonical");
  return anticanonical / polarization_weight;
}

namespace {

std::vector<int> weights_with(std::vector<int> base, int extra, int count) {
  base.insert(base.end(), static_cast<std::size_t>(count), extra);
  return base;
}

std::vector<ExtensionCase> build_catalog() {
  std::vector<ExtensionCase> cases;
  // quartic hypersurfaces over P^3 curves of type (4, k)
  cases.push_back({3, 2, {weights_with({1, 1, 1, 1}, 2, 10), {4}}, 2, "X_{4,2} in P(1^4,2^10)"});
  cases.push_back({3, 3, {weights_with({1, 1, 1, 1}, 3, 4), {4}}, 3, "X_{4,3} in P(1^4,3^4)"});
  cases.push_back({3, 4, {weights_with({1, 1, 1, 1}, 4, 1), {4}}, 4, "X_{4,4} in P(1^4,4)"});
  // type (2,3) intersections over P^4 curves of type (2, 3, k)
  cases.push_back({4, 2, {weights_with({1, 1, 1, 1, 1}, 2, 6), {2, 3}}, 2,
                   "X_{(2,3),2} in P(1^5,2^6)"});
  cases.push_back({4, 3, {weights_with({1, 1, 1, 1, 1}, 3, 1), {2, 3}}, 3,
                   "X_{(2,3),3} in P(1^5,3)"});
  // type (2,2,2) over P^5 curves of type (2, 2, 2, k)
  cases.push_back({5, 2, {weights_with({1, 1, 1, 1, 1, 1}, 2, 3), {2, 2, 2}}, 2,
                   "X_{(2^3),2} in P(1^6,2^3)"});
  // sextics over double-plane curves: X_{6,k} in P(1^3, 3, k^nu),
  // nu = 15, 10, 6, 3, 1 for k = 2..6
  const int sextic_fibre[] = {15, 10, 6, 3, 1};
  for (int k = 2; k <= 6; ++k) {
    int nu = sextic_fibre[k - 2];
    cases.push_back({2, k, {weights_with({1, 1, 1, 3}, k, nu), {6}}, k,
                     "X_{6," + std::to_string(k) + "} in P(1^3,3," + std::to_string(k) + "^" +
                         std::to_string(nu) + ")"});
  }
  return cases;
}

}  // namespace

const std::vector<ExtensionCase>& extension_catalog() {
  static const std::vector<ExtensionCase> catalog = build_catalog();
  return catalog;
}

const ExtensionCase& extension_case(int g1, int k) {
  for (const ExtensionCase& c : extension_catalog())
    if (c.g1 == g1 && c.k == k) return c;
  throw std::out_of_range("wps: no extension case for (g1, k) = (" + std::to_string(g1) + ", " +
                          std::to_string(k) + ")");
}

ExtensionSummary universal_extension_check(const ExtensionCase& c) {
  ExtensionSummary out{};
  out.dimension = c.variety.dimension();
  out.index = fano_index(c.variety, c.polarization);
  out.target = (section_count(c.variety, c.polarization) - 1).to_int64();
  return out;
}

}  // namespace k3inv::wps
