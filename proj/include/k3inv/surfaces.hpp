#pragma once

#include <string_view>

#include "k3inv/integer.hpp"

namespace k3inv::surfaces {

/// Divisor class a*C0 + b*f on the ruled surface F_n, where C0 is the
/// section with C0^2 = -n and f the fibre class (C0.f = 1, f^2 = 0).
/// Every divisor appearing in the source text is translated into this
/// basis at the call site.
struct HirzebruchDivisor {
  long long a;  // coefficient of C0
  long long b;  // coefficient of f
  int n;        // the surface F_n, n >= 0
};

HirzebruchDivisor operator+(const HirzebruchDivisor& lhs, const HirzebruchDivisor& rhs);
bool operator==(const HirzebruchDivisor& lhs, const HirzebruchDivisor& rhs);

/// Intersection number; errors when the divisors live on different F_n.
long long intersect(const HirzebruchDivisor& d1, const HirzebruchDivisor& d2);

/// K_{F_n} = -2 C0 - (n + 2) f.
HirzebruchDivisor canonical_class(int n);

/// Toric section count for a*C0 + b*f: 0 when a < 0, otherwise
/// sum_{i=0..a} max(0, b - i n + 1). Valid for the effective classes the
/// claims query; no base-locus analysis.
Integer h0(const HirzebruchDivisor& d);

/// Adjunction: 1 + D.(D + K) / 2.
Integer arithmetic_genus(const HirzebruchDivisor& d);

/// Sections and adjunction genus for a curve of bidegree (a, b) on the
/// smooth quadric P^1 x P^1.
Integer quadric_h0(long long a, long long b);
Integer quadric_genus(long long a, long long b);

/// h^0 of m times the anticanonical class on a del Pezzo surface of the
/// given degree (1..9): m(m+1) degree / 2 + 1.
Integer del_pezzo_h0(int degree, long long m);

/// Genus drops of the singularities the constructions use. Nodes and
/// ordinary cusps count 1, ordinary triple points count 3.
struct SingularityBudget {
  long long nodes = 0;
  long long cusps = 0;
  long long triple_points = 0;

  long long delta() const { return nodes + cusps + 3 * triple_points; }
};

/// Geometric genus of a curve with the given arithmetic genus and
/// singularities; errors when the drop exceeds the arithmetic genus.
Integer geometric_genus(const Integer& pa, const SingularityBudget& sing);

/// Automorphism-group dimension of the surfaces and groups that appear in
/// the moduli counts. Accepted kinds: "F<n>" (n + 5 for n >= 1, 6 for F0),
/// "P2" (8), "P1xP1" (6), "PGL(<m>)" (m^2 - 1).
long long aut_dim(std::string_view kind);

}  // namespace k3inv::surfaces
