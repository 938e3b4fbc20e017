#pragma once

// Integer linear algebra over Z: Hermite/Smith forms, kernels, lattice
// ranks and indices, and the lift / affine-span predicates built on them.

#include <optional>
#include <string>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss); the matrix must be square.
Integer determinant(const IntMatrix& m);

/// Finite ordered list of distinct lattice points of Z^n. The order indexes
/// the variables z_a of the toric ideal, so it is preserved everywhere.
class SupportSet {
 public:
  SupportSet() = default;
  /// Throws InputError on a length mismatch or a repeated point.
  SupportSet(std::size_t ambient_dim, std::vector<IntVector> points, std::vector<std::string> labels = {});

  /// Points given as the columns of a matrix written one row per coordinate.
  static SupportSet from_rows(const std::vector<std::vector<long>>& rows);
  static SupportSet from_points(const std::vector<std::vector<long>>& points);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<IntVector>& points() const noexcept { return points_; }
  const IntVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// ambient_dim x size matrix whose columns are the points.
  IntMatrix matrix() const;
  /// Index of a point, if present.
  std::optional<std::size_t> index_of(const IntVector& p) const;

  bool operator==(const SupportSet& other) const {
    return ambient_dim_ == other.ambient_dim_ && points_ == other.points_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> points_;
  std::vector<std::string> labels_;
};

struct HermiteResult {
  IntMatrix h;  // row-echelon Hermite form
  IntMatrix u;  // unimodular, h = u * m
};

/// Row Hermite normal form: pivots positive, entries above each pivot in [0, pivot).
HermiteResult hermite_form(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith form of m.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Hermite-reduced basis (as rows) of the lattice generated by `generators` in Z^dim.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim);

/// Basis of span_R(generators) ∩ Z^dim, in Hermite form.
std::vector<IntVector> saturated_basis(const std::vector<IntVector>& generators, std::size_t dim);

/// Basis of {x in Z^cols : m x = 0}, Hermite-reduced (first nonzero entry positive).
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Integer coordinates of v in a lattice basis (rows), if v lies in the lattice.
std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis, const IntVector& v);

/// Basis of the integer kernel {u in Z^A : A u = 0}.
std::vector<IntVector> kernel_basis(const SupportSet& a);

struct RankIndex {
  std::size_t rank = 0;
  std::optional<Integer> index;  // empty when rank < ambient_dim (infinite index)
};

/// rank of ZA and [Z^n : ZA].
RankIndex lattice_rank_index(const SupportSet& a);

/// True iff the differences b - a_0 generate Z^n.
bool integral_affine_span_is_full(const SupportSet& a);

struct HyperplaneWitness {
  IntVector w;  // primitive
  Integer c;    // nonzero, positive
};

/// (w, c) with w.a = c != 0 for every point, if A lies on such an affine hyperplane.
/// A coordinate that is constant on A is preferred (w = +-e_i); otherwise c is minimal.
std::optional<HyperplaneWitness> affine_hyperplane_witness(const SupportSet& a);

/// A+ = {(1, a)}: prepend a coordinate 1 to every point.
SupportSet lift(const SupportSet& a);

// --- rational linear algebra -------------------------------------------------

/// Rank of a list of rational row vectors.
std::size_t rank(std::vector<RatVector> rows);
std::size_t rank(const std::vector<IntVector>& rows);

/// Some solution x of M x = b where M is given by rows, if one exists.
std::optional<RatVector> solve(const std::vector<RatVector>& rows, const RatVector& b);

/// Basis of {x : M x = 0} over Q (M given by rows with `cols` columns).
std::vector<RatVector> rational_nullspace(const std::vector<RatVector>& rows, std::size_t cols);

/// Determinant of a square rational matrix.
Rational determinant(std::vector<RatVector> rows);

}  // namespace toric
