#pragma once

namespace k3inv::mukai {

/// Stored dimension data for the homogeneous varieties whose linear
/// sections give the general prime K3 surfaces of genus 7..10. The group
/// theory behind the rows is data, never recomputed here.
struct MukaiRecord {
  int g1;
  int dim_group;                // dim of the acting simple group
  int dim_rep;                  // dim of its irreducible representation
  int dim_variety;              // dim of the homogeneous variety
  int stabilizer_threshold;     // codimension threshold for trivial stabilizers
  int dim_lines_through_point;  // dim of the variety of lines through a point

  /// Projective dimension of the ambient P(U): dim_rep - 1.
  int n() const { return dim_rep - 1; }
};

/// The stored row for g1 in {7, 8, 9, 10}; throws std::out_of_range otherwise.
const MukaiRecord& record(int g1);

/// Dimension (k+1)(n-k) of the Grassmannian of projective k-planes in P^n.
long long grassmann_dim(long long k, long long n);

/// Source and target dimensions of the map sending a curve linear section
/// to its modulus; the defect is 0 for g1 = 7, 8, 9 and 1 for g1 = 10.
struct ModuliMapCheck {
  long long source_dim;
  long long target_dim;
  long long defect;
};
ModuliMapCheck moduli_map_check(int g1);

/// Both sides of the identity dim KC^2_g = dim IC(1^nu, 2; M) - dim G for
/// g = 4 g1 - 3; ic_dim - dim_group equals kc_dim.
struct IcFamilyCheck {
  long long ic_dim;
  long long kc_dim;
};
IcFamilyCheck ic_family_check(int g1);

/// Corank of the Gauss map of a general canonical curve of genus g1
/// (general on a K3 when g1 = 10): 23 - 2 g1, except 4 at g1 = 10.
/// Defined for 2 <= g1 <= 11.
long long cork_general(int g1);

/// cork - 1, the dimension of the projective space of ribbons; equals
/// n(g1) - g1 on the stored range.
long long ribbon_space_dim(int g1);

}  // namespace k3inv::mukai
