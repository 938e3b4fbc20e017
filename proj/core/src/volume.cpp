#include "toric/volume.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

namespace {

using IndexSet = std::vector<std::size_t>;

// Recursive pulling: cone from the smallest vertex of F over each facet of F
// that misses it.
class Puller {
 public:
  explicit Puller(const Polytope& p) {
    for (const auto& [d, faces] : face_lattice(p))
      for (const auto& f : faces) by_dim_[d].push_back(f.vertex_indices);
  }

  const std::vector<IndexSet>& run(const IndexSet& face, int d) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    std::vector<IndexSet> out;
    if (d == 0) {
      out.push_back(face);
    } else {
      const std::size_t apex = face.front();
      for (const auto& sub : by_dim_[d - 1]) {
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end())) continue;
        for (const auto& s : run(sub, d - 1)) {
          IndexSet simplex = s;
          simplex.insert(simplex.begin(), apex);
          out.push_back(std::move(simplex));
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

 private:
  std::map<int, std::vector<IndexSet>> by_dim_;
  std::map<IndexSet, std::vector<IndexSet>> memo_;
};

Rational full_dimensional_volume(const Polytope& p) {
  if (p.dim() == 0) return 1;
  Rational total = 0;
  for (const auto& s : pulling_triangulation(p)) {
    std::vector<RatVector> pts;
    for (auto i : s) pts.push_back(p.vertices()[i]);
    total += simplex_volume(pts);
  }
  return total;
}

// Lattice basis (rows) of span(P - v0) ∩ Z^n, plus the coordinates of every
// vertex of P - v0 in that basis.
struct IntrinsicChart {
  std::vector<IntVector> basis;
  std::vector<RatVector> coordinates;
};

IntrinsicChart intrinsic_chart(const Polytope& p) {
  const auto& verts = p.vertices();
  const std::size_t n = p.ambient_dim();
  std::vector<IntVector> directions;
  for (std::size_t i = 1; i < verts.size(); ++i) directions.push_back(clear_denominators(sub(verts[i], verts[0])));
  IntrinsicChart chart;
  chart.basis = saturated_basis(directions, n);
  const std::size_t k = chart.basis.size();
  // Solve sum_j c_j basis_j = v - v0: n equations in k unknowns.
  std::vector<RatVector> rows(n, RatVector(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = chart.basis[j][i];
  for (const auto& v : verts) {
    auto c = solve(rows, sub(v, verts[0]));
    if (!c) throw Error("intrinsic chart: vertex outside its own affine span");
    chart.coordinates.push_back(std::move(*c));
  }
  return chart;
}

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p) {
  if (!p.is_full_dimensional()) throw DegenerateError("triangulation requires a full-dimensional polytope");
  IndexSet all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Puller puller(p);
  return puller.run(all, p.dim());
}

Rational simplex_volume(const std::vector<RatVector>& vertices) {
  if (vertices.empty()) throw InputError("simplex volume of no points");
  const std::size_t k = vertices.size() - 1;
  if (k == 0) return 1;
  if (vertices[0].size() != k) throw InputError("simplex volume: need dim + 1 vertices");
  std::vector<RatVector> rows;
  for (std::size_t i = 1; i <= k; ++i) rows.push_back(sub(vertices[i], vertices[0]));
  return abs(determinant(rows)) / Rational(factorial(static_cast<unsigned>(k)));
}

Rational volume(const Polytope& p) {
  if (!p.is_full_dimensional()) return 0;
  return full_dimensional_volume(p);
}

Rational normalized_volume(const Polytope& p) {
  return volume(p) * Rational(factorial(static_cast<unsigned>(p.ambient_dim())));
}

Rational intrinsic_volume(const Polytope& p) {
  if (p.is_full_dimensional()) return full_dimensional_volume(p);
  if (p.dim() == 0) return 1;
  IntrinsicChart chart = intrinsic_chart(p);
  return full_dimensional_volume(Polytope::hull(chart.basis.size(), chart.coordinates));
}

Rational euclidean_intrinsic_volume_squared(const Polytope& p) {
  if (p.is_full_dimensional()) {
    Rational v = full_dimensional_volume(p);
    return v * v;
  }
  if (p.dim() == 0) return 1;
  IntrinsicChart chart = intrinsic_chart(p);
  const std::size_t k = chart.basis.size();
  std::vector<RatVector> gram(k, RatVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(chart.basis[i], chart.basis[j]));
  Rational v = full_dimensional_volume(Polytope::hull(k, chart.coordinates));
  return v * v * determinant(gram);
}

double euclidean_intrinsic_volume(const Polytope& p) {
  return std::sqrt(to_double(euclidean_intrinsic_volume_squared(p)));
}

Integer count_lattice_points(const Polytope& p) { return Integer(lattice_points(p).size()); }

UniPoly ehrhart(const Polytope& p) {
  if (!p.is_lattice()) throw InputError("Ehrhart polynomial needs a lattice polytope");
  const int k = p.dim();
  std::vector<Rational> xs, ys;
  for (int d = 0; d <= k; ++d) {
    xs.emplace_back(d);
    ys.emplace_back(count_lattice_points(scale(p, Rational(d))));
  }
  return UniPoly::interpolate(xs, ys);
}

Integer MixedVolumeResult::normalized_integer() const {
  if (denominator(normalized) != 1) throw InputError("normalized mixed volume is not an integer");
  return numerator(normalized);
}

MixedVolumeResult mixed_volume(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw InputError("mixed volume of an empty list");
  const std::size_t n = ps.front().ambient_dim();
  for (const auto& p : ps)
    if (p.ambient_dim() != n) throw InputError("mixed volume: polytopes of different ambient dimension");
  if (ps.size() != n)
    throw InputError("mixed volume needs exactly " + std::to_string(n) + " polytopes, got " +
                     std::to_string(ps.size()));
  if (n > 20) throw ResourceError("mixed volume: too many summands for inclusion-exclusion");
  const std::size_t subsets = std::size_t{1} << n;
  // sums[A] = P(A), built from sums[A without its top element].
  std::vector<Polytope> sums(subsets);
  Rational total = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::size_t top = 0;
    while ((mask >> (top + 1)) != 0) ++top;
    const std::size_t rest = mask & ~(std::size_t{1} << top);
    sums[mask] = rest == 0 ? ps[top] : minkowski_sum(sums[rest], ps[top]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const Rational vol = volume(sums[mask]);
    if ((n - size) % 2 == 0) total += vol;
    else total -= vol;
  }
  MixedVolumeResult r;
  r.normalized = total;
  r.mv = total / Rational(factorial(static_cast<unsigned>(n)));
  return r;
}

MultiPoly minkowski_volume_polynomial(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw InputError("Minkowski volume polynomial of an empty list");
  const std::size_t n = ps.front().ambient_dim();
  for (const auto& p : ps)
    if (p.ambient_dim() != n) throw InputError("Minkowski volume polynomial: mixed ambient dimensions");
  const std::size_t r = ps.size();
  MultiPoly out(r);
  const Integer nfact = factorial(static_cast<unsigned>(n));
  std::vector<unsigned> alpha(r, 0);
  // Enumerate compositions alpha of n into r parts.
  auto recurse = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == r) {
      alpha[i] = left;
      std::vector<Polytope> multiset;
      Integer denom = 1;
      for (std::size_t j = 0; j < r; ++j) {
        denom *= factorial(alpha[j]);
        for (unsigned t = 0; t < alpha[j]; ++t) multiset.push_back(ps[j]);
      }
      out.add_term(alpha, mixed_volume(multiset).mv * Rational(nfact, denom));
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      alpha[i] = a;
      self(self, i + 1, left - a);
    }
  };
  recurse(recurse, 0, static_cast<unsigned>(n));
  return out;
}

}  // namespace toric
