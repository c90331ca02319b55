#pragma once

#include <span>
#include <string>
#include <vector>

#include "k3inv/integer.hpp"

namespace k3inv::moduli {

/// The families of special loci whose dimensions the arguments compare
/// against. Parameters beyond the genus are family specific.
enum class LocusFamily {
  gonal,           // k-gonal curves:                      2g + 2k - 5
  elliptic_cover,  // k:1 covers of elliptic curves:       2g - 2
  genus_h_cover,   // k:1 covers of genus-h curves:        2g + 2k - 5 + h(3 - 2k)
  hyperelliptic_h, // hyperelliptic spin loci H^h_{g,a}:   2g - 1
  bielliptic_e,    // bielliptic spin loci E_{g,k}:        2g - 2
  genus2_d,        // genus-2 double-cover loci D_{g,k}:   2g - 3
  moduli_m,        // the moduli space M_g itself:         3g - 3
  k3_pairs,        // pairs (K3 surface, curve) KC_g:      19 + g
};

struct LocusDescriptor {
  LocusFamily family;
  long long g = 0;
  long long k = 0;
  long long h = 0;
  long long a = 0;

  static LocusDescriptor gonal(long long g, long long k);
  static LocusDescriptor elliptic_cover(long long g, long long k);
  static LocusDescriptor genus_h_cover(long long g, long long k, long long h);
  static LocusDescriptor hyperelliptic(long long g, long long a = 0, long long h = 0);
  static LocusDescriptor bielliptic(long long g, long long k);
  static LocusDescriptor genus2_cover(long long g, long long k);
  static LocusDescriptor moduli_space(long long g);
  static LocusDescriptor k3_pairs(long long g);
};

long long locus_dim(const LocusDescriptor& locus);

/// dim KC_g^2 minus the expected dimension of the even spin locus, for
/// g = 4 g1 - 3: (19 + g) - (3g - 3) + C(g1 + 1, 2), which collapses to
/// (g1 - 7)(g1 - 8) / 2.
long long remarkable_difference(long long g1);

struct LabeledValue {
  std::string label;
  long long value;
};

/// A fibre dimension together with the labelled summands it came from.
struct FibreDimension {
  long long value;
  std::vector<LabeledValue> parts;
};

/// Dimension of the general fibre of the forgetful map for the complete
/// intersection range g1 = 3, 4, 5, plus the stored double-plane table for
/// g1 = 2 (k = 2..6, zero past 6).
FibreDimension fibre_dim_ci(int g1, int k);

/// h^0 of the degree-h ideal sheaf of the complete intersection curve of
/// the given degrees in P^n, via projective normality:
/// h_proj(n, h) - ratio(degrees, 1^{n+1})[h].
Integer ideal_sheaf_h0(int n, std::span<const int> ci_degrees, int h);

/// Sum of labelled signed contributions; the breakdown is kept for reports.
long long scenario_moduli(std::span<const LabeledValue> parts);

}  // namespace k3inv::moduli
