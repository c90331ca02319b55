#pragma once

#include <span>

#include "k3inv/integer.hpp"

namespace k3inv::curves {

/// Numerical data of a projectively embedded curve.
struct CurveInvariants {
  long long genus;
  long long degree;
  long long ambient_dim;

  CurveInvariants(long long genus, long long degree, long long ambient_dim);
};

/// A k-th root of the canonical bundle together with its section count.
struct SpinDatum {
  long long g;
  long long k;
  long long h0;

  SpinDatum(long long g, long long k, long long h0);
  long long theta_degree() const { return (2 * g - 2) / k; }
};

/// Genus of a curve of divisibility k on a K3 of primitive genus g1:
/// 1 + (g1 - 1) k^2.
Integer k3_curve_genus(long long g1, long long k);

/// Genus of a complete intersection curve of the given n-1 degrees in P^n,
/// from 2g - 2 = (prod d_i)(sum d_i - n - 1).
Integer ci_curve_genus(int n, std::span<const int> degrees);

/// Clifford index of the restriction of l times the primitive class:
/// (2 g1 - 2) l (k - l) - 2, for 1 <= l <= k - 1.
Integer clifford_restriction(long long g1, long long k, long long l);
/// Minimum over l, which is attained at l = 1 (or k - 1).
Integer clifford_general(long long g1, long long k);

/// True when the general theory does not apply: Clifford index <= 2 or
/// genus < 11.
bool exceptional_low(long long g1, long long k);

/// Largest k >= 1 with k3_curve_genus(g1, k) <= bound; 0 if none.
long long max_k_for_genus(long long g1, long long bound);

/// Riemann-Roch: h^0 = deg - g + 1 + h^1.
Integer rr_h0(long long deg, long long g, long long h1);
/// Serre duality bookkeeping: h^1 = h^0 - deg + g - 1.
Integer serre_h1(long long deg, long long g, long long h0);
/// h^0 of a nonspecial bundle, deg - g + 1; errors when that is negative.
Integer h0_nonspecial(long long deg, long long g);

/// Clifford's bound floor(deg / 2) + 1 on h^0 of a special bundle.
Integer clifford_h0_bound(long long deg);

/// Castelnuovo's bound on the genus of a nondegenerate degree-d curve in
/// P^r: with m = floor((d-1)/(r-1)) and eps = d - 1 - m(r-1), the bound is
/// C(m, 2)(r - 1) + m eps.
Integer castelnuovo_genus(long long d, long long r);

/// (2g - 2) / k; errors when k does not divide 2g - 2.
Integer theta_degree(long long g, long long k);

/// Expected codimension C(g1 + 1, 2) of the theta locus.
Integer expected_theta_codim(long long g1);

/// Parity invariance predicate for section counts of theta-characteristics.
bool same_parity(const Integer& a, const Integer& b);

}  // namespace k3inv::curves
