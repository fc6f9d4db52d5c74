#pragma once

#include "mcclab/bigint.hpp"
#include "mcclab/complex.hpp"

#include <vector>

namespace mcclab {

/// Z^free_rank + Z_m1 + ... + Z_mb.
struct GroupSpec {
  int free_rank = 0;
  std::vector<long> torsion;

  // Throws DomainError on a negative rank or a torsion order below 2.
  void validate() const;
  // Invariant factors d1 | d2 | ... of the torsion part, each above one.
  std::vector<BigInt> invariant_factors() const;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();

/**
 * Joins every facet of T of dimension l with r - l fresh vertices, labeled
 * n+1, n+2, ... as the facets are visited in canonical order. Requires
 * dim T < r and T connected; a lone vertex becomes a single r-simplex.
 */
PureComplex cone_augment(const SimplicialComplex& t, int r);

// Boundary of the (i+1)-simplex.
SimplicialComplex sphere_triangulation(int i);

// Join with the two new vertices n+1 and n+2.
SimplicialComplex suspension(const SimplicialComplex& x);

/**
 * Homology Z_m in degree k and nothing else reduced. For k = 1 this is the
 * mapping cone of the degree-m map from a 3m-gon onto a triangle (the
 * projective plane above when m = 2); higher k suspend it k - 1 times.
 */
SimplicialComplex moore_space(int m, int k);

// Member of M_r(n) with H_k equal to the group: cone-augmented spheres and
// Moore spaces wedged at vertex 1. A trivial group gives a single r-simplex.
PureComplex realize_group(const GroupSpec& group, int k, int r);

} // namespace mcclab
