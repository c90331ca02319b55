#include "k3inv/surfaces.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace k3inv::surfaces {

HirzebruchDivisor operator+(const HirzebruchDivisor& lhs, const HirzebruchDivisor& rhs) {
  if (lhs.n != rhs.n)
    throw std::invalid_argument("surfaces: divisors live on different Hirzebruch surfaces");
  return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.n};
}

bool operator==(const HirzebruchDivisor& lhs, const HirzebruchDivisor& rhs) {
  return lhs.a == rhs.a && lhs.b == rhs.b && lhs.n == rhs.n;
}

long long intersect(const HirzebruchDivisor& d1, const HirzebruchDivisor& d2) {
  if (d1.n != d2.n)
    throw std::invalid_argument("surfaces: divisors live on different Hirzebruch surfaces");
  return -static_cast<long long>(d1.n) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

HirzebruchDivisor canonical_class(int n) {
  if (n < 0) throw std::invalid_argument("surfaces: F_n needs n >= 0");
  return {-2, -(static_cast<long long>(n) + 2), n};
}

Integer h0(const HirzebruchDivisor& d) {
  if (d.n < 0) throw std::invalid_argument("surfaces: F_n needs n >= 0");
  if (d.a < 0) return 0;
  Integer total = 0;
  for (long long i = 0; i <= d.a; ++i) {
    long long row = d.b - i * d.n + 1;
    if (row > 0) total += row;
  }
  return total;
}

Integer arithmetic_genus(const HirzebruchDivisor& d) {
  long long twice = intersect(d, d + canonical_class(d.n));
  if (twice % 2 != 0) throw std::logic_error("surfaces: D.(D + K) must be even");
  return 1 + twice / 2;
}

Integer quadric_h0(long long a, long long b) {
  if (a < 0 || b < 0) return 0;
  return Integer(a + 1) * (b + 1);
}

Integer quadric_genus(long long a, long long b) {
  return Integer(a - 1) * (b - 1);
}

Integer del_pezzo_h0(int degree, long long m) {
  if (degree < 1 || degree > 9)
    throw std::domain_error("surfaces: del Pezzo degree must lie in 1..9");
  if (m < 0) throw std::domain_error("surfaces: multiple of -K must be >= 0");
  return Integer(m) * (m + 1) * degree / 2 + 1;
}

Integer geometric_genus(const Integer& pa, const SingularityBudget& sing) {
  if (sing.nodes < 0 || sing.cusps < 0 || sing.triple_points < 0)
    throw std::invalid_argument("surfaces: singularity counts must be >= 0");
  Integer g = pa - sing.delta();
  if (g < 0) throw std::domain_error("surfaces: singularities exceed the arithmetic genus");
  return g;
}

namespace {
long long parse_number(std::string_view text, std::string_view kind) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("surfaces: unknown surface or group kind: " + std::string(kind));
  return value;
}
}  // namespace

long long aut_dim(std::string_view kind) {
  if (kind == "P2") return 8;
  if (kind == "P1xP1") return 6;
  if (kind.size() > 1 && kind.front() == 'F') {
    long long n = parse_number(kind.substr(1), kind);
    if (n < 0) throw std::invalid_argument("surfaces: unknown surface or group kind: " + std::string(kind));
    return n == 0 ? 6 : n + 5;
  }
  if (kind.starts_with("PGL(") && kind.ends_with(")")) {
    long long m = parse_number(kind.substr(4, kind.size() - 5), kind);
    if (m < 1) throw std::invalid_argument("surfaces: unknown surface or group kind: " + std::string(kind));
    return m * m - 1;
  }
  throw std::invalid_argument("surfaces: unknown surface or group kind: " + std::string(kind));
}

}  // namespace k3inv::surfaces
