#pragma once

#include <string>
#include <vector>

#include "k3inv/integer.hpp"

namespace k3inv::wps {

/// A complete intersection of hypersurfaces of the given degrees inside the
/// weighted projective space P(w_0, ..., w_N). An empty degree list is the
/// ambient space itself. The class computes numerology only; it never checks
/// that equations of those degrees cut out anything smooth.
class WeightedCompleteIntersection {
 public:
  WeightedCompleteIntersection(std::vector<int> weights, std::vector<int> degrees);

  const std::vector<int>& weights() const { return weights_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// (#weights - 1) - #degrees.
  int dimension() const;
  /// Adjunction weight of the canonical class: sum(degrees) - sum(weights).
  long long canonical_weight() const;

 private:
  std::vector<int> weights_;
  std::vector<int> degrees_;
};

/// h^0(O_X(m)) under the projective-normality conventions used throughout:
/// the coefficient at m of ratio(degrees, weights).
Integer section_count(const WeightedCompleteIntersection& x, int m);

long long canonical_weight(const WeightedCompleteIntersection& x);

/// Fano index q with -K_X = q * O(polarization_weight). Errors when the
/// variety is not Fano or the polarization does not divide the
/// anticanonical weight.
long long fano_index(const WeightedCompleteIntersection& x, int polarization_weight);

/// One entry of the built-in catalog of weighted-CI extensions, keyed by
/// (g1, k): the variety, the weight m of the polarizing divisor, and a
/// display label.
struct ExtensionCase {
  int g1;
  int k;
  WeightedCompleteIntersection variety;
  int polarization;
  std::string label;
};

struct ExtensionSummary {
  int dimension;
  long long index;
  long long target;  // dimension of the target projective space: h^0(O(m)) - 1
};

/// The catalog: quartic hypersurfaces in P(1^4, k^*) for k = 2, 3, 4,
/// (2,3)-intersections in P(1^5, ...) for k = 2, 3, the (2,2,2) case, and
/// the sextic family in P(1^3, 3, k^nu) for k = 2..6.
const std::vector<ExtensionCase>& extension_catalog();
const ExtensionCase& extension_case(int g1, int k);

ExtensionSummary universal_extension_check(const ExtensionCase& c);

}  // namespace k3inv::wps
