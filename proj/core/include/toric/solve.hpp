#pragma once

// Torus solutions of two polynomial equations in two unknowns: exact
// Sylvester resultant, squarefree split, then high-precision root finding
// and Newton polishing on the original system.

#include <complex>
#include <vector>

#include "toric/polyq.hpp"
#include "toric/sparse.hpp"

namespace toric {

struct TorusSolution {
  std::vector<std::complex<double>> coordinates;
  unsigned multiplicity = 1;
  double residual = 0;  // max |f_i| at the polished point
};

struct SolveOptions {
  double tol = 1e-10;
  unsigned start_bits = 256;
  unsigned max_bits = 1024;
};

struct BivariateResult {
  std::vector<TorusSolution> solutions;  // sorted by x.re, x.im, y.re, y.im
  UniPoly resultant;                     // Res_y of the monomial-cleared system, in x
  unsigned precision_bits = 0;           // precision that succeeded
  bool multiplicity_ambiguous = false;   // some x-fiber held several solutions
  unsigned total_multiplicity() const;
};

/// Res_y(f, g) for polynomials (no negative exponents) in (x, y), as a polynomial in x.
UniPoly resultant_y(const SparsePolynomial& f, const SparsePolynomial& g);

/// Throws DegenerateError when the solution set is not finite (common factor),
/// ResourceError when root finding fails at max_bits.
BivariateResult solve_bivariate(const PolySystem& system, const SolveOptions& options = {});

}  // namespace toric
