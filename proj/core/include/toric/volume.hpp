#pragma once

// Exact volumes, lattice-point counts, Ehrhart polynomials and mixed volumes.

#include <vector>

#include "toric/arith.hpp"
#include "toric/polyq.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Pulling triangulation of a full-dimensional polytope: each simplex is a
/// list of dim+1 indices into p.vertices().
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p);

/// Euclidean volume of the simplex with the given vertices in R^k (k+1 points).
Rational simplex_volume(const std::vector<RatVector>& vertices);

/// Ambient Euclidean volume; 0 when P is not full-dimensional.
Rational volume(const Polytope& p);

/// n! * volume(p), an integer for lattice polytopes.
Rational normalized_volume(const Polytope& p);

/// Volume of P inside its affine span, measured so that a fundamental domain of
/// the lattice (span direction) ∩ Z^n has volume 1. Equals volume(p) when P is
/// full-dimensional and 1 for a point.
Rational intrinsic_volume(const Polytope& p);

/// Square of the Euclidean dim(P)-volume of P in its affine span (exact; the
/// volume itself is irrational in general).
Rational euclidean_intrinsic_volume_squared(const Polytope& p);
double euclidean_intrinsic_volume(const Polytope& p);

Integer count_lattice_points(const Polytope& p);

/// E_P(d) = |dP ∩ Z^n|. Throws InputError unless P has integer vertices.
UniPoly ehrhart(const Polytope& p);

struct MixedVolumeResult {
  Rational mv;          // MV(P_1, ..., P_n)
  Rational normalized;  // n! * mv; a nonnegative integer for lattice polytopes
  Integer normalized_integer() const;
};

/// Mixed volume of exactly n polytopes in R^n, by inclusion-exclusion over
/// the 2^n - 1 partial Minkowski sums.
MixedVolumeResult mixed_volume(const std::vector<Polytope>& ps);

/// Vol(l_1 P_1 + ... + l_r P_r) as a homogeneous polynomial of degree n in l.
MultiPoly minkowski_volume_polynomial(const std::vector<Polytope>& ps);

}  // namespace toric
