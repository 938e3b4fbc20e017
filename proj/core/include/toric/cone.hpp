#pragma once

// Rational polyhedral cones and fans. Every cone keeps its generators and
// its H-representation in sync through an exact double-description pass.

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Generators of {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}.
struct DoubleDescription {
  std::vector<IntVector> lineality;  // basis of the lineality space (not canonical)
  std::vector<IntVector> rays;       // extreme rays modulo lineality, primitive
};
DoubleDescription double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equations = {});

class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(std::size_t dim, const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& lineality = {});
  static RationalCone from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities,
                                        const std::vector<IntVector>& equations = {});
  /// {0} in R^dim.
  static RationalCone zero(std::size_t dim) { return from_generators(dim, {}); }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return ambient_dim_ - equations_.size(); }
  std::size_t lineality_dim() const noexcept { return lineality_.size(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }

  /// Primitive extreme rays (modulo lineality), sorted.
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  /// Lattice basis of the lineality space, Hermite-reduced.
  const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
  /// Primitive inner facet normals a: the cone satisfies a.x >= 0. Sorted.
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  /// Lattice basis of the orthogonal complement of the linear span.
  const std::vector<IntVector>& equations() const noexcept { return equations_; }

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;
  bool relative_interior_contains(const RatVector& x) const;
  /// Primitive sum of the rays; lies in the relative interior of a pointed cone.
  IntVector interior_vector() const;

  /// The cone cut out by both H-representations.
  RationalCone intersect(const RationalCone& other) const;
  /// True when this cone is a face of `other`.
  bool is_face_of(const RationalCone& other) const;

  bool operator==(const RationalCone& o) const {
    return ambient_dim_ == o.ambient_dim_ && rays_ == o.rays_ && lineality_ == o.lineality_;
  }
  bool operator<(const RationalCone& o) const;

 private:
  static RationalCone finalize(std::size_t dim, DoubleDescription primal);

  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// sigma-dual = {x : <w, x> >= 0 for all w in sigma}.
RationalCone dual_cone(const RationalCone& sigma);

/// A polyhedral fan: all cones (closed under faces) with their face relations.
class Fan {
 public:
  Fan() = default;
  /// Closes `cones` under taking faces, deduplicates and records containments.
  Fan(std::size_t ambient_dim, std::vector<RationalCone> cones);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Sorted by dimension, then by rays.
  const std::vector<RationalCone>& cones() const noexcept { return cones_; }
  /// Pairs (i, j) with cones[i] a proper face of cones[j].
  const std::vector<std::pair<std::size_t, std::size_t>>& containment() const noexcept { return containment_; }
  /// For refinements: provenance[i][k] is the index of the cone of input fan k
  /// whose relative interior contains the relative interior of cones[i].
  const std::vector<std::vector<std::size_t>>& provenance() const noexcept { return provenance_; }
  void set_provenance(std::vector<std::vector<std::size_t>> p) { provenance_ = std::move(p); }

  std::vector<std::size_t> maximal_cones() const;
  /// Primitive generators of the one-dimensional cones.
  std::vector<IntVector> rays() const;
  /// Index of the cone whose relative interior contains x, if x is in the support.
  std::optional<std::size_t> locate(const RatVector& x) const;
  /// Random-vector completeness test: every sampled vector lies in some maximal cone.
  bool is_complete(std::uint64_t seed = 1, std::size_t samples = 200) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RationalCone> cones_;
  std::vector<std::pair<std::size_t, std::size_t>> containment_;
  std::vector<std::vector<std::size_t>> provenance_;
};

/// All nonempty intersections of one cone from each fan. Inputs must be complete.
Fan common_refinement(const std::vector<Fan>& fans);

}  // namespace toric
