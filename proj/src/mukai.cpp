#include "k3inv/mukai.hpp"

#include <array>
#include <stdexcept>

namespace k3inv::mukai {

namespace {
// g1, dim G, dim U, dim M, stabilizer threshold, dim M'
constexpr std::array<MukaiRecord, 4> kRecords = {{
    {7, 45, 16, 10, 4, 6},
    {8, 35, 15, 8, 3, 4},
    {9, 21, 14, 6, 2, 2},
    {10, 14, 14, 5, 2, 1},
}};
}  // namespace

const MukaiRecord& record(int g1) {
  for (const MukaiRecord& r : kRecords)
    if (r.g1 == g1) return r;
  throw std::out_of_range("mukai: records exist for g1 in {7, 8, 9, 10}");
}

long long grassmann_dim(long long k, long long n) {
  if (k < 0 || k > n) throw std::domain_error("mukai: need 0 <= k <= n");
  return (k + 1) * (n - k);
}

ModuliMapCheck moduli_map_check(int g1) {
  const MukaiRecord& r = record(g1);
  ModuliMapCheck out{};
  out.source_dim = grassmann_dim(g1 - 1, r.n()) - r.dim_group;
  out.target_dim = 3ll * g1 - 3;
  out.defect = out.target_dim - out.source_dim;
  return out;
}

IcFamilyCheck ic_family_check(int g1) {
  const MukaiRecord& r = record(g1);
  // quadric sections of the K3: h^0(2 L_1) = 2 + (2 L_1)^2 / 2 = 4 g1 - 2,
  // projectivized
  long long quadric_system = 4ll * g1 - 3;
  IcFamilyCheck out{};
  out.ic_dim = grassmann_dim(g1, r.n()) + quadric_system;
  out.kc_dim = 19 + (4ll * g1 - 3);
  return out;
}

long long cork_general(int g1) {
  if (g1 < 2 || g1 > 11)
    throw std::domain_error("mukai: corank formula covers 2 <= g1 <= 11");
  return g1 == 10 ? 4 : 23 - 2ll * g1;
}

long long ribbon_space_dim(int g1) {
  return cork_general(g1) - 1;
}

}  // namespace k3inv::mukai
