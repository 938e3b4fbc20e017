#include "toric/semigroup.hpp"

#include <algorithm>

#include "toric/errors.hpp"
#include "toric/linear_program.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

// Sign of the 2D cross product a x b.
int cross_sign(const IntVector& a, const IntVector& b) {
  Integer c = a[0] * b[1] - a[1] * b[0];
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

void sort_generators(std::vector<IntVector>& gens, const RationalCone& sigma) {
  if (sigma.ambient_dim() == 2 && sigma.dim() == 2) {
    // Counter-clockwise from the ray that has the whole cone on its left.
    IntVector start = sigma.rays().front();
    for (const auto& r : sigma.rays())
      if (cross_sign(r, start) > 0) start = r;
    std::sort(gens.begin(), gens.end(), [&](const IntVector& a, const IntVector& b) {
      return cross_sign(start, a) < cross_sign(start, b) ||
             (cross_sign(start, a) == cross_sign(start, b) && cross_sign(a, b) > 0);
    });
  } else {
    std::sort(gens.begin(), gens.end());
  }
}

// The l1-smallest point of x0 + span_Z(lineality); ties to the lexicographically largest.
IntVector shortest_in_coset(const IntVector& x0, const std::vector<IntVector>& lineality) {
  const std::size_t n = x0.size(), k = lineality.size();
  if (k == 0) return x0;
  Integer bound = 0;
  for (const auto& x : x0) bound += abs(x);
  // Variables: c (k, free), t (n), slacks (2n + 1).
  const std::size_t vars = k + n + 2 * n + 1;
  std::vector<RatVector> rows;
  RatVector rhs;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector up(vars), down(vars);
    for (std::size_t j = 0; j < k; ++j) {
      up[j] = lineality[j][i];
      down[j] = -lineality[j][i];
    }
    up[k + i] = -1;
    down[k + i] = -1;
    up[k + n + 2 * i] = 1;
    down[k + n + 2 * i + 1] = 1;
    rows.push_back(std::move(up));
    rhs.push_back(-x0[i]);
    rows.push_back(std::move(down));
    rhs.push_back(x0[i]);
  }
  RatVector total(vars);
  for (std::size_t i = 0; i < n; ++i) total[k + i] = 1;
  total[vars - 1] = 1;
  rows.push_back(std::move(total));
  rhs.push_back(bound);
  std::vector<bool> nonneg(vars, true);
  for (std::size_t j = 0; j < k; ++j) nonneg[j] = false;

  IntVector lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    RatVector obj(vars);
    obj[j] = 1;
    auto mx = maximize_mixed(rows, rhs, obj, nonneg);
    obj[j] = -1;
    auto mn = maximize_mixed(rows, rhs, obj, nonneg);
    if (mx.status != LpResult::Status::kOptimal || mn.status != LpResult::Status::kOptimal)
      throw Error("coset search: bounding program failed");
    lo[j] = ceil(-mn.value);
    hi[j] = floor(mx.value);
  }
  IntVector best = x0;
  Integer best_norm = bound;
  IntVector c = lo;
  while (true) {
    IntVector x = x0;
    for (std::size_t j = 0; j < k; ++j) x = add(x, scaled(lineality[j], c[j]));
    Integer norm = 0;
    for (const auto& e : x) norm += abs(e);
    if (norm < best_norm || (norm == best_norm && x > best)) {
      best = x;
      best_norm = norm;
    }
    std::size_t j = 0;
    while (j < k && c[j] == hi[j]) {
      c[j] = lo[j];
      ++j;
    }
    if (j == k) break;
    ++c[j];
  }
  return best;
}

}  // namespace

SupportSet hilbert_basis(const RationalCone& sigma) {
  if (!sigma.is_pointed()) throw InputError("Hilbert basis needs a pointed cone");
  if (sigma.dim() > kHilbertBasisMaxDim)
    throw ResourceError("Hilbert basis enumeration is limited to cones of dimension " +
                        std::to_string(kHilbertBasisMaxDim));
  const std::size_t n = sigma.ambient_dim();
  // Rays plus the lattice points of their half-open zonotope generate sigma ∩ Z^n.
  std::vector<IntVector> candidates = sigma.rays();
  for (auto& p : half_open_zonotope_points(n, sigma.rays()))
    if (!is_zero(p)) candidates.push_back(std::move(p));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<IntVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& g : candidates)
      if (g != x && sigma.contains(sub(x, g))) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(x);
  }
  sort_generators(basis, sigma);
  return SupportSet(n, std::move(basis));
}

PatchIdeal affine_patch_ideal(const RationalCone& sigma, const TermOrder& order, const GroebnerOptions& options) {
  if (!sigma.is_pointed()) throw InputError("affine patch needs a pointed cone");
  const std::size_t n = sigma.ambient_dim();
  const RationalCone dual = dual_cone(sigma);
  std::vector<IntVector> gens;
  if (dual.is_pointed()) {
    gens = hilbert_basis(dual).points();
  } else {
    const auto& lin = dual.lineality();
    for (const auto& l : lin) {
      gens.push_back(l);
      gens.push_back(scaled(l, Integer(-1)));
    }
    // pi(x) = (p.x) for a basis p of L-perp is onto Z^(n-k) with kernel L ∩ Z^n.
    const auto perp = integer_kernel(IntMatrix::from_rows(lin, n));
    const std::size_t q = perp.size();
    auto project = [&](const IntVector& x) {
      IntVector y;
      for (const auto& p : perp) y.push_back(dot(p, x));
      return y;
    };
    std::vector<IntVector> quotient_rays;
    for (const auto& r : dual.rays()) quotient_rays.push_back(project(r));
    const RationalCone quotient = RationalCone::from_generators(q, quotient_rays);
    // Rows of u map to the standard basis of Z^q under pi.
    auto [h, u] = hermite_form(IntMatrix::from_rows(perp, n).transposed());
    const SupportSet quotient_basis = hilbert_basis(quotient);
    for (const auto& y : quotient_basis.points()) {
      IntVector x0(n);
      for (std::size_t r = 0; r < q; ++r) x0 = add(x0, scaled(u.row(r), y[r]));
      gens.push_back(shortest_in_coset(x0, lin));
    }
  }
  PatchIdeal out;
  out.generators = SupportSet(n, std::move(gens));
  out.gb = toric_groebner(out.generators, order, options);
  return out;
}

}  // namespace toric
