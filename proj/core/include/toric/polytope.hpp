#pragma once

// Exact convex hulls of rational point sets, with a synchronized V/H
// representation, faces, support functions, Minkowski sums and normal fans.

#include <map>
#include <optional>
#include <vector>

#include "toric/arith.hpp"
#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// {x | normal.x <= offset}, normal primitive and outer.
struct HalfSpace {
  IntVector normal;
  Rational offset;
  bool operator==(const HalfSpace&) const = default;
};

/// {x | normal.x == offset}, one row of the affine span.
struct AffineEquation {
  IntVector normal;
  Rational offset;
  bool operator==(const AffineEquation&) const = default;
};

struct Face {
  std::vector<std::size_t> vertex_indices;  // into the parent's vertex list, sorted
  int dim = 0;
  std::optional<IntVector> exposing_vector;
};

class Polytope {
 public:
  Polytope() = default;

  /// Convex hull of rational points. Throws InputError on an empty list or mixed lengths.
  static Polytope hull(std::size_t ambient_dim, const std::vector<RatVector>& points);
  static Polytope hull(const std::vector<IntVector>& points);
  static Polytope hull(const SupportSet& a) { return hull(a.points()); }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the affine span.
  int dim() const noexcept { return dim_; }
  bool is_full_dimensional() const noexcept { return dim_ == static_cast<int>(ambient_dim_); }

  /// Extreme points, lexicographically sorted.
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  /// Facets, sorted by normal. For lower-dimensional polytopes each normal is
  /// reduced modulo the equations (orthogonal to the affine span's normals).
  const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
  const std::vector<AffineEquation>& equations() const noexcept { return equations_; }
  /// facet_vertices()[f] = sorted indices of vertices on facet f.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const noexcept { return facet_vertices_; }

  bool is_lattice() const;
  std::vector<IntVector> integer_vertices() const;  // requires is_lattice()

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;
  bool interior_contains(const RatVector& x) const;  // relative interior

  bool operator==(const Polytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<AffineEquation> equations_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

/// h_P(w) = max of w.x over P.
Rational support_function(const Polytope& p, const IntVector& w);
/// h_A(w) over a finite point set.
Integer support_function(const SupportSet& a, const IntVector& w);

/// Points of A maximizing w.a, order preserved.
SupportSet exposed_subset(const SupportSet& a, const IntVector& w);

Face exposed_face(const Polytope& p, const IntVector& w);

/// All nonempty faces, keyed by dimension (P itself included at key dim(P)).
std::map<int, std::vector<Face>> face_lattice(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
/// lambda * P; lambda = 0 gives the origin. Throws InputError for negative lambda.
Polytope scale(const Polytope& p, const Rational& lambda);
Polytope translate(const Polytope& p, const RatVector& v);

/// Outer normal fan of a full-dimensional polytope; throws DegenerateError otherwise.
Fan normal_fan(const Polytope& p);

/// Integer points of P (bounding-box scan against the H-representation).
std::vector<IntVector> lattice_points(const Polytope& p);

/// Points of `lattice` (all of Z^n when `lattice_rows` is empty) that can be written
/// as sum lambda_i g_i with every lambda_i in [0, 1).
std::vector<IntVector> half_open_zonotope_points(std::size_t dim, const std::vector<IntVector>& generators,
                                                 const std::vector<IntVector>& lattice_rows = {});

/// Affine rank of a point set (-1 when empty).
int affine_dimension(const std::vector<RatVector>& points);

}  // namespace toric
