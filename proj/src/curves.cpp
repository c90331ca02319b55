#include "k3inv/curves.hpp"

#include <stdexcept>

#include "k3inv/series.hpp"

namespace k3inv::curves {

CurveInvariants::CurveInvariants(long long genus, long long degree, long long ambient_dim)
    : genus(genus), degree(degree), ambient_dim(ambient_dim) {
  if (genus < 0) throw std::invalid_argument("curves: genus must be >= 0");
  if (degree < 1) throw std::invalid_argument("curves: degree must be >= 1");
  if (ambient_dim < 1) throw std::invalid_argument("curves: ambient dimension must be >= 1");
}

SpinDatum::SpinDatum(long long g, long long k, long long h0) : g(g), k(k), h0(h0) {
  if (g < 0) throw std::invalid_argument("curves: genus must be >= 0");
  if (k < 2) throw std::invalid_argument("curves: root order must be >= 2");
  if ((2 * g - 2) % k != 0)
    throw std::invalid_argument("curves: root order does not divide canonical degree");
  if (h0 < 0) throw std::invalid_argument("curves: section count must be >= 0");
}

Integer k3_curve_genus(long long g1, long long k) {
  if (g1 < 2) throw std::domain_error("curves: g1 must be >= 2");
  if (k < 1) throw std::domain_error("curves: k must be >= 1");
  return Integer(g1 - 1) * k * k + 1;
}

Integer ci_curve_genus(int n, std::span<const int> degrees) {
  if (n < 2) throw std::invalid_argument("curves: ambient dimension must be >= 2");
  if (static_cast<int>(degrees.size()) != n - 1)
    throw std::invalid_argument("curves: a curve in P^n needs n - 1 degrees");
  Integer product = 1;
  long long sum = 0;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("curves: degrees must be positive");
    product *= d;
    sum += d;
  }
  Integer twice = product * (sum - n - 1);
  if (!twice.is_even()) throw std::invalid_argument("curves: malformed complete intersection data");
  return twice / 2 + 1;
}

Integer clifford_restriction(long long g1, long long k, long long l) {
  if (g1 < 2) throw std::domain_error("curves: g1 must be >= 2");
  if (k < 2) throw std::domain_error("curves: k must be >= 2");
  if (l < 1 || l > k - 1) throw std::domain_error("curves: l must lie in [1, k - 1]");
  return Integer(2 * g1 - 2) * l * (k - l) - 2;
}

Integer clifford_general(long long g1, long long k) {
  return clifford_restriction(g1, k, 1);
}

bool exceptional_low(long long g1, long long k) {
  return clifford_general(g1, k) <= 2 || k3_curve_genus(g1, k) < 11;
}

long long max_k_for_genus(long long g1, long long bound) {
  if (g1 < 2) throw std::domain_error("curves: g1 must be >= 2");
  if (bound < g1) return 0;  // even k = 1 exceeds the bound
  // largest k with (g1 - 1) k^2 <= bound - 1, by pure integer search
  long long q = (bound - 1) / (g1 - 1);
  long long k = 1;
  while ((k + 1) * (k + 1) <= q) ++k;
  return k;
}

Integer rr_h0(long long deg, long long g, long long h1) {
  if (g < 0) throw std::domain_error("curves: genus must be >= 0");
  if (h1 < 0) throw std::domain_error("curves: h1 must be >= 0");
  return Integer(deg) - g + 1 + h1;
}

Integer serre_h1(long long deg, long long g, long long h0) {
  if (g < 0) throw std::domain_error("curves: genus must be >= 0");
  if (h0 < 0) throw std::domain_error("curves: h0 must be >= 0");
  return Integer(h0) - deg + g - 1;
}

Integer h0_nonspecial(long long deg, long long g) {
  if (g < 0) throw std::domain_error("curves: genus must be >= 0");
  Integer value = Integer(deg) - g + 1;
  if (value < 0) throw std::domain_error("bundle cannot be nonspecial");
  return value;
}

Integer clifford_h0_bound(long long deg) {
  if (deg < 0) throw std::domain_error("curves: degree must be >= 0");
  return deg / 2 + 1;
}

Integer castelnuovo_genus(long long d, long long r) {
  if (r < 2) throw std::domain_error("curves: ambient dimension must be >= 2");
  if (d < r) throw std::domain_error("curves: nondegenerate curve needs degree >= r");
  long long m = (d - 1) / (r - 1);
  long long eps = (d - 1) - m * (r - 1);
  return series::binomial(m, 2) * (r - 1) + Integer(m) * eps;
}

Integer theta_degree(long long g, long long k) {
  if (g < 0) throw std::domain_error("curves: genus must be >= 0");
  if (k < 1) throw std::domain_error("curves: root order must be >= 1");
  if ((2 * g - 2) % k != 0)
    throw std::domain_error("curves: root order does not divide canonical degree");
  return (2 * g - 2) / k;
}

Integer expected_theta_codim(long long g1) {
  if (g1 < 2) throw std::domain_error("curves: g1 must be >= 2");
  return series::binomial(g1 + 1, 2);
}

bool same_parity(const Integer& a, const Integer& b) {
  return (a - b).is_even();
}

}  // namespace k3inv::curves
