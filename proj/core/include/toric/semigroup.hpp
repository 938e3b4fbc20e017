#pragma once

// Lattice points of cones: Hilbert bases and the toric ideal of the affine
// patch V_sigma = Spec C[sigma-dual ∩ Z^n].

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/toric_ideal.hpp"

namespace toric {

/// Largest cone dimension accepted by hilbert_basis.
inline constexpr std::size_t kHilbertBasisMaxDim = 4;

/// Minimal generating set of sigma ∩ Z^n for a pointed cone. Two-dimensional
/// cones are listed counter-clockwise, others lexicographically.
/// Throws InputError for a non-pointed cone, ResourceError above kHilbertBasisMaxDim.
SupportSet hilbert_basis(const RationalCone& sigma);

struct PatchIdeal {
  SupportSet generators;  // generators of the semigroup sigma-dual ∩ Z^n
  GroebnerBasis gb;       // reduced Gröbner basis of their toric ideal
};

/// When sigma-dual has a lineality space L, the generators are ±(a basis of
/// L ∩ Z^n) followed by lifts of the Hilbert basis of the pointed quotient
/// (each lift has minimal l1 norm, ties to the lexicographically largest).
PatchIdeal affine_patch_ideal(const RationalCone& sigma, const TermOrder& order = TermOrder::degrevlex(),
                              const GroebnerOptions& options = {});

}  // namespace toric
