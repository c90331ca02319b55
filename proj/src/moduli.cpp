#include "k3inv/moduli.hpp"

#include <stdexcept>

#include "k3inv/series.hpp"

namespace k3inv::moduli {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

long long choose2(long long n) { return series::binomial(n, 2).to_int64(); }

}  // namespace

LocusDescriptor LocusDescriptor::gonal(long long g, long long k) {
  return {LocusFamily::gonal, g, k};
}
LocusDescriptor LocusDescriptor::elliptic_cover(long long g, long long k) {
  return {LocusFamily::elliptic_cover, g, k};
}
LocusDescriptor LocusDescriptor::genus_h_cover(long long g, long long k, long long h) {
  return {LocusFamily::genus_h_cover, g, k, h};
}
LocusDescriptor LocusDescriptor::hyperelliptic(long long g, long long a, long long h) {
  return {LocusFamily::hyperelliptic_h, g, 0, h, a};
}
LocusDescriptor LocusDescriptor::bielliptic(long long g, long long k) {
  return {LocusFamily::bielliptic_e, g, k};
}
LocusDescriptor LocusDescriptor::genus2_cover(long long g, long long k) {
  return {LocusFamily::genus2_d, g, k};
}
LocusDescriptor LocusDescriptor::moduli_space(long long g) {
  return {LocusFamily::moduli_m, g};
}
LocusDescriptor LocusDescriptor::k3_pairs(long long g) {
  return {LocusFamily::k3_pairs, g};
}

long long locus_dim(const LocusDescriptor& locus) {
  require(locus.g >= 2, "moduli: genus must be >= 2");
  switch (locus.family) {
    case LocusFamily::gonal:
      require(locus.k >= 2, "moduli: gonality must be >= 2");
      return 2 * locus.g + 2 * locus.k - 5;
    case LocusFamily::elliptic_cover:
      require(locus.k >= 2, "moduli: cover degree must be >= 2");
      return 2 * locus.g - 2;
    case LocusFamily::genus_h_cover:
      require(locus.k >= 2, "moduli: cover degree must be >= 2");
      require(locus.h >= 2, "moduli: base genus must be >= 2");
      return 2 * locus.g + 2 * locus.k - 5 + locus.h * (3 - 2 * locus.k);
    case LocusFamily::hyperelliptic_h:
      require(locus.a >= 0 && locus.h >= 0, "moduli: invalid hyperelliptic datum");
      return 2 * locus.g - 1;
    case LocusFamily::bielliptic_e:
      require(locus.k >= 2, "moduli: cover degree must be >= 2");
      return 2 * locus.g - 2;
    case LocusFamily::genus2_d:
      require(locus.k >= 2, "moduli: cover degree must be >= 2");
      return 2 * locus.g - 3;
    case LocusFamily::moduli_m:
      return 3 * locus.g - 3;
    case LocusFamily::k3_pairs:
      return 19 + locus.g;
  }
  throw std::domain_error("moduli: unknown locus family");
}

long long remarkable_difference(long long g1) {
  require(g1 >= 2, "moduli: g1 must be >= 2");
  long long g = 4 * g1 - 3;
  return (19 + g) - (3 * g - 3) + choose2(g1 + 1);
}

Integer ideal_sheaf_h0(int n, std::span<const int> ci_degrees, int h) {
  if (n < 1) throw std::invalid_argument("moduli: ambient dimension must be >= 1");
  if (h < 0) throw std::invalid_argument("moduli: twist must be >= 0");
  std::vector<int> ones(static_cast<std::size_t>(n) + 1, 1);
  return series::h_proj(n, h) - series::ratio(ci_degrees, ones, h + 1).coefficient(h);
}

namespace {

FibreDimension quartic_fibre(int k) {
  // linear system of quartics through the (4, k) curve, h_3(4 - k) after
  // projectivization; the k = 1 map has the affine group as stabilizer
  FibreDimension out;
  long long system = series::h_proj(3, 4 - k).to_int64();
  out.parts.push_back({"quartics through the curve, projectivized", system});
  if (k == 1) out.parts.push_back({"affine stabilizer", -4});
  out.value = 0;
  for (const auto& p : out.parts) out.value += p.value;
  return out;
}

FibreDimension quadric_cubic_fibre(int k) {
  if (k == 1)
    throw std::domain_error("moduli: the k = 1 fibre is not part of the (2, 3, k) table");
  std::vector<int> degrees = {2, 3, k};
  long long quadrics = ideal_sheaf_h0(4, degrees, 2).to_int64();
  long long cubics = ideal_sheaf_h0(4, degrees, 3).to_int64();
  long long linears = series::h_proj(4, 1).to_int64();
  FibreDimension out;
  if (k == 2)
    out.parts.push_back({"pencil of quadrics through the curve", quadrics - 1});
  // cubics through the curve modulo linear multiples of a chosen quadric,
  // projectivized
  out.parts.push_back({"cubics modulo quadric multiples, projectivized", cubics - linears - 1});
  out.value = 0;
  for (const auto& p : out.parts) out.value += p.value;
  return out;
}

FibreDimension net_of_quadrics_fibre(int k) {
  if (k == 1)
    throw std::domain_error("moduli: the k = 1 fibre is not part of the (2, 2, 2, k) table");
  std::vector<int> degrees = {2, 2, 2, k};
  long long quadrics = ideal_sheaf_h0(5, degrees, 2).to_int64();
  // planes inside P(quadrics through the curve): the Grassmannian of
  // 2-planes in P^{quadrics - 1} has dimension 3(quadrics - 3)
  FibreDimension out;
  out.parts.push_back({"planes in the space of quadrics through the curve",
                       3 * (quadrics - 3)});
  out.value = out.parts.front().value;
  return out;
}

FibreDimension double_plane_fibre(int k) {
  if (k < 2) throw std::domain_error("moduli: the double-plane table starts at k = 2");
  static const long long table[] = {15, 10, 6, 3, 1};  // k = 2..6
  long long value = k <= 6 ? table[k - 2] : 0;
  return {value, {{"stored fibre dimension", value}}};
}

}  // namespace

FibreDimension fibre_dim_ci(int g1, int k) {
  if (k < 1) throw std::domain_error("moduli: k must be >= 1");
  switch (g1) {
    case 2: return double_plane_fibre(k);
    case 3: return quartic_fibre(k);
    case 4: return quadric_cubic_fibre(k);
    case 5: return net_of_quadrics_fibre(k);
    default:
      throw std::domain_error("moduli: fibre dimensions are tabulated for g1 in {2, 3, 4, 5}");
  }
}

long long scenario_moduli(std::span<const LabeledValue> parts) {
  long long total = 0;
  for (const auto& p : parts) total += p.value;
  return total;
}

}  // namespace k3inv::moduli
