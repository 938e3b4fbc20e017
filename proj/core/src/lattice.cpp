#include "toric/lattice.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

// --- IntMatrix ----------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("matrix column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// --- SupportSet ---------------------------------------------------------------

SupportSet::SupportSet(std::size_t ambient_dim, std::vector<IntVector> points, std::vector<std::string> labels)
    : ambient_dim_(ambient_dim), points_(std::move(points)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != points_.size())
    throw InputError("support set: " + std::to_string(labels_.size()) + " labels for " +
                     std::to_string(points_.size()) + " points");
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != ambient_dim_)
      throw InputError("support set: point " + std::to_string(i) + " has length " +
                       std::to_string(points_[i].size()) + ", expected " + std::to_string(ambient_dim_));
    if (!seen.insert(points_[i]).second)
      throw InputError("support set: duplicate point " + to_string(points_[i]));
  }
}

SupportSet SupportSet::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) throw InputError("support set: no coordinate rows");
  const std::size_t m = rows.front().size();
  std::vector<IntVector> pts(m, IntVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m) throw InputError("support set: ragged coordinate rows");
    for (std::size_t j = 0; j < m; ++j) pts[j][i] = rows[i][j];
  }
  return SupportSet(rows.size(), std::move(pts));
}

SupportSet SupportSet::from_points(const std::vector<std::vector<long>>& points) {
  if (points.empty()) throw InputError("support set: no points");
  std::vector<IntVector> pts;
  for (const auto& p : points) pts.emplace_back(p.begin(), p.end());
  return SupportSet(points.front().size(), std::move(pts));
}

IntMatrix SupportSet::matrix() const { return IntMatrix::from_columns(points_, ambient_dim_); }

std::optional<std::size_t> SupportSet::index_of(const IntVector& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

// --- normal forms ---------------------------------------------------------------

HermiteResult hermite_form(const IntMatrix& m) {
  if (m.rows() == 0 && m.cols() == 0) throw InputError("hermite_form: empty matrix");
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on the column below `row` until a single nonzero entry remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = row; r < h.rows(); ++r)
        if (h(r, col) != 0 && (best == h.rows() || abs(h(r, col)) < abs(h(best, col)))) best = r;
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool done = true;
      for (std::size_t r = row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Integer q = floor_div(h(r, col), h(row, col));
        h.add_row_multiple(r, row, -q);
        u.add_row_multiple(r, row, -q);
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = floor_div(h(r, col), h(row, col));
      h.add_row_multiple(r, row, -q);
      u.add_row_multiple(r, row, -q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return diag;
      a.swap_rows(t, bi);
      if (bj != t)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, bj));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = floor_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = floor_div(a(t, j), a(t, t));
        if (q != 0)
          for (std::size_t i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim) {
  if (generators.empty() || dim == 0) return {};
  auto h = hermite_form(IntMatrix::from_rows(generators, dim)).h;
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    IntVector r = h.row(i);
    if (!is_zero(r)) basis.push_back(std::move(r));
  }
  return basis;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return {};
  if (m.rows() == 0) return IntMatrix::identity(n).row_vectors();
  auto [h, u] = hermite_form(m.transposed());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (is_zero(h.row(i))) kernel.push_back(u.row(i));
  return lattice_basis(kernel, n);
}

std::vector<IntVector> saturated_basis(const std::vector<IntVector>& generators, std::size_t dim) {
  if (dim == 0) return {};
  std::vector<IntVector> nonzero;
  for (const auto& g : generators)
    if (!is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  auto perp = integer_kernel(IntMatrix::from_rows(nonzero, dim));
  return integer_kernel(IntMatrix::from_rows(perp, dim));
}

std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis, const IntVector& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  const std::size_t n = v.size(), k = basis.size();
  std::vector<RatVector> rows(n, RatVector(k));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i) rows[j][i] = basis[i][j];
  auto x = solve(rows, to_rational(v));
  if (!x || !is_integral(*x)) return std::nullopt;
  return to_integer(*x);
}

std::vector<IntVector> kernel_basis(const SupportSet& a) {
  if (a.empty()) return {};
  if (a.ambient_dim() == 0) return IntMatrix::identity(a.size()).row_vectors();
  return integer_kernel(a.matrix());
}

RankIndex lattice_rank_index(const SupportSet& a) {
  RankIndex out;
  const std::size_t n = a.ambient_dim();
  auto basis = lattice_basis(a.points(), n);
  out.rank = basis.size();
  if (out.rank == n) {
    Integer index = 1;
    for (std::size_t i = 0; i < n; ++i) index *= basis[i][i];  // triangular Hermite basis
    out.index = abs(index);
  }
  return out;
}

bool integral_affine_span_is_full(const SupportSet& a) {
  if (a.empty()) throw InputError("integral_affine_span_is_full: empty support set");
  const std::size_t n = a.ambient_dim();
  if (n == 0) return true;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < a.size(); ++i) diffs.push_back(sub(a[i], a[0]));
  auto basis = lattice_basis(diffs, n);
  if (basis.size() != n) return false;
  Integer index = 1;
  for (std::size_t i = 0; i < n; ++i) index *= basis[i][i];
  return abs(index) == 1;
}

std::optional<HyperplaneWitness> affine_hyperplane_witness(const SupportSet& a) {
  if (a.empty()) return std::nullopt;
  const std::size_t n = a.ambient_dim();
  // A constant nonzero coordinate gives the simplest witness (e.g. for lifts).
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& c = a[0][i];
    if (c == 0) continue;
    bool constant = true;
    for (const auto& p : a.points()) constant = constant && p[i] == c;
    if (!constant) continue;
    HyperplaneWitness wit{IntVector(n), abs(c)};
    wit.w[i] = c > 0 ? 1 : -1;
    return wit;
  }
  std::vector<IntVector> rows;
  for (const auto& p : a.points()) {
    IntVector r{Integer(1)};
    r.insert(r.end(), p.begin(), p.end());
    rows.push_back(std::move(r));
  }
  auto kernel = integer_kernel(IntMatrix::from_rows(rows, n + 1));
  if (kernel.empty() || kernel.front()[0] == 0) return std::nullopt;
  const IntVector& y = kernel.front();
  HyperplaneWitness wit;
  wit.c = -y[0];
  wit.w.assign(y.begin() + 1, y.end());
  if (wit.c < 0) {
    wit.c = -wit.c;
    for (auto& x : wit.w) x = -x;
  }
  return wit;
}

SupportSet lift(const SupportSet& a) {
  std::vector<IntVector> pts;
  pts.reserve(a.size());
  for (const auto& p : a.points()) {
    IntVector q{Integer(1)};
    q.insert(q.end(), p.begin(), p.end());
    pts.push_back(std::move(q));
  }
  return SupportSet(a.ambient_dim() + 1, std::move(pts), a.labels());
}

// --- rational linear algebra ---------------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

std::size_t rank(const std::vector<IntVector>& rows) {
  std::vector<RatVector> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rank(std::move(r));
}

std::optional<RatVector> solve(const std::vector<RatVector>& rows, const RatVector& b) {
  if (rows.size() != b.size()) throw InputError("solve: right-hand side has wrong length");
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<RatVector> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVector r = rows[i];
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::vector<RatVector> rational_nullspace(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> a = rows;
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(std::vector<RatVector> rows) {
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(rows[p], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[c][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return det;
}

}  // namespace toric
