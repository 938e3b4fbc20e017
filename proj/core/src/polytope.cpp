#include "toric/polytope.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"
#include "toric/linear_program.hpp"

namespace toric {

namespace {

IntVector homogenize(const RatVector& p) {
  RatVector h;
  h.reserve(p.size() + 1);
  h.push_back(Rational(1));
  h.insert(h.end(), p.begin(), p.end());
  return clear_denominators(h);
}

std::vector<std::size_t> tight_vertices(const std::vector<RatVector>& vertices, const IntVector& normal,
                                        const Rational& offset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (dot(normal, vertices[i]) == offset) out.push_back(i);
  return out;
}

// Odometer over the integer box [lo, hi].
template <typename Visit>
void for_each_box_point(const IntVector& lo, const IntVector& hi, Visit&& visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVector x = lo;
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

}  // namespace

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank(std::move(diffs)));
}

Polytope Polytope::hull(std::size_t ambient_dim, const std::vector<RatVector>& points) {
  if (points.empty()) throw InputError("convex hull of no points");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw InputError("convex hull: points of different dimensions");

  Polytope poly;
  poly.ambient_dim_ = ambient_dim;
  std::vector<IntVector> rays;
  rays.reserve(points.size());
  for (const auto& p : points) rays.push_back(homogenize(p));
  auto cone = RationalCone::from_generators(ambient_dim + 1, rays);

  for (const auto& r : cone.rays()) {
    RatVector v(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) v[j] = Rational(r[j + 1], r[0]);
    poly.vertices_.push_back(std::move(v));
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  poly.dim_ = static_cast<int>(cone.dim()) - 1;

  for (const auto& e : cone.equations()) {
    IntVector normal(e.begin() + 1, e.end());
    Integer g = content(normal);
    poly.equations_.push_back({primitive(normal), Rational(-e[0], g)});
  }
  for (const auto& f : cone.facets()) {
    IntVector tail(f.begin() + 1, f.end());
    Integer g = content(tail);
    if (g == 0) continue;
    HalfSpace h{scaled(primitive(tail), Integer(-1)), Rational(f[0], g)};
    if (tight_vertices(poly.vertices_, h.normal, h.offset).empty()) continue;
    poly.facets_.push_back(std::move(h));
  }
  std::sort(poly.facets_.begin(), poly.facets_.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  for (const auto& h : poly.facets_) poly.facet_vertices_.push_back(tight_vertices(poly.vertices_, h.normal, h.offset));
  return poly;
}

Polytope Polytope::hull(const std::vector<IntVector>& points) {
  if (points.empty()) throw InputError("convex hull of no points");
  std::vector<RatVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return hull(points.front().size(), pts);
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    if (!is_integral(v)) return false;
  return true;
}

std::vector<IntVector> Polytope::integer_vertices() const {
  std::vector<IntVector> out;
  for (const auto& v : vertices_) out.push_back(to_integer(v));
  return out;
}

bool Polytope::contains(const RatVector& x) const {
  if (x.size() != ambient_dim_) throw InputError("polytope membership: point of wrong dimension");
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& h : facets_)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

bool Polytope::contains(const IntVector& x) const {
  if (x.size() != ambient_dim_) throw InputError("polytope membership: point of wrong dimension");
  for (const auto& e : equations_)
    if (Rational(dot(e.normal, x)) != e.offset) return false;
  for (const auto& h : facets_)
    if (Rational(dot(h.normal, x)) > h.offset) return false;
  return true;
}

bool Polytope::interior_contains(const RatVector& x) const {
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& h : facets_)
    if (dot(h.normal, x) >= h.offset) return false;
  return true;
}

Rational support_function(const Polytope& p, const IntVector& w) {
  if (w.size() != p.ambient_dim()) throw InputError("support function: direction of wrong dimension");
  std::optional<Rational> best;
  for (const auto& v : p.vertices()) {
    Rational s = dot(w, v);
    if (!best || s > *best) best = s;
  }
  return *best;
}

Integer support_function(const SupportSet& a, const IntVector& w) {
  if (a.empty()) throw InputError("support function of an empty set");
  std::optional<Integer> best;
  for (const auto& p : a.points()) {
    Integer s = dot(w, p);
    if (!best || s > *best) best = s;
  }
  return *best;
}

SupportSet exposed_subset(const SupportSet& a, const IntVector& w) {
  Integer h = support_function(a, w);
  std::vector<IntVector> pts;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (dot(w, a[i]) == h) {
      pts.push_back(a[i]);
      if (!a.labels().empty()) labels.push_back(a.labels()[i]);
    }
  return SupportSet(a.ambient_dim(), std::move(pts), std::move(labels));
}

Face exposed_face(const Polytope& p, const IntVector& w) {
  Rational h = support_function(p, w);
  Face f;
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (dot(w, p.vertices()[i]) == h) {
      f.vertex_indices.push_back(i);
      pts.push_back(p.vertices()[i]);
    }
  f.dim = affine_dimension(pts);
  f.exposing_vector = w;
  return f;
}

std::map<int, std::vector<Face>> face_lattice(const Polytope& p) {
  const auto& verts = p.vertices();
  auto dim_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> pts;
    for (auto i : idx) pts.push_back(verts[i]);
    return affine_dimension(pts);
  };
  std::set<std::vector<std::size_t>> sets;
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& fv : p.facet_vertices())
    if (sets.insert(fv).second) frontier.push_back(fv);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier)
      for (const auto& fv : p.facet_vertices()) {
        std::vector<std::size_t> inter;
        std::set_intersection(s.begin(), s.end(), fv.begin(), fv.end(), std::back_inserter(inter));
        if (!inter.empty() && sets.insert(inter).second) next.push_back(std::move(inter));
      }
    frontier = std::move(next);
  }
  std::map<int, std::vector<Face>> out;
  Face whole;
  for (std::size_t i = 0; i < verts.size(); ++i) whole.vertex_indices.push_back(i);
  whole.dim = p.dim();
  whole.exposing_vector = IntVector(p.ambient_dim());
  out[whole.dim].push_back(whole);
  for (const auto& s : sets) {
    if (s.size() == verts.size()) continue;
    Face f;
    f.vertex_indices = s;
    f.dim = dim_of(s);
    IntVector expose(p.ambient_dim());
    for (std::size_t k = 0; k < p.facets().size(); ++k) {
      const auto& fv = p.facet_vertices()[k];
      if (std::includes(fv.begin(), fv.end(), s.begin(), s.end())) expose = add(expose, p.facets()[k].normal);
    }
    f.exposing_vector = std::move(expose);
    out[f.dim].push_back(std::move(f));
  }
  return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("Minkowski sum: dimension mismatch");
  std::vector<RatVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::hull(p.ambient_dim(), sums);
}

Polytope scale(const Polytope& p, const Rational& lambda) {
  if (lambda < 0) throw InputError("scale: negative factor " + to_string(lambda));
  if (lambda == 0) return Polytope::hull(p.ambient_dim(), {RatVector(p.ambient_dim())});
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(scaled(v, lambda));
  return Polytope::hull(p.ambient_dim(), pts);
}

Polytope translate(const Polytope& p, const RatVector& t) {
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(add(v, t));
  return Polytope::hull(p.ambient_dim(), pts);
}

Fan normal_fan(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw DegenerateError("normal fan: polytope of dimension " + std::to_string(p.dim()) +
                          " in ambient dimension " + std::to_string(p.ambient_dim()) + " is not full-dimensional");
  std::vector<RationalCone> cones;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    std::vector<IntVector> normals;
    for (std::size_t k = 0; k < p.facets().size(); ++k) {
      const auto& fv = p.facet_vertices()[k];
      if (std::binary_search(fv.begin(), fv.end(), v)) normals.push_back(p.facets()[k].normal);
    }
    cones.push_back(RationalCone::from_generators(p.ambient_dim(), normals));
  }
  return Fan(p.ambient_dim(), std::move(cones));
}

std::vector<IntVector> lattice_points(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertices().front()[j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil(mn);
    hi[j] = floor(mx);
  }
  std::vector<IntVector> out;
  for_each_box_point(lo, hi, [&](const IntVector& x) {
    if (p.contains(x)) out.push_back(x);
  });
  return out;
}

std::vector<IntVector> half_open_zonotope_points(std::size_t dim, const std::vector<IntVector>& generators,
                                                 const std::vector<IntVector>& lattice_rows) {
  if (generators.empty()) return {IntVector(dim)};
  // Closed zonotope, built one segment at a time.
  Polytope z = Polytope::hull(dim, {RatVector(dim)});
  for (const auto& g : generators) {
    std::vector<RatVector> pts = z.vertices();
    for (const auto& v : z.vertices()) pts.push_back(add(v, to_rational(g)));
    z = Polytope::hull(dim, pts);
  }
  bool full_lattice = lattice_rows.empty();
  if (!full_lattice && lattice_rows.size() == dim) {
    Integer det = 1;
    for (std::size_t i = 0; i < dim; ++i) det *= lattice_rows[i][i];
    full_lattice = abs(det) == 1;
  }

  const std::size_t k = generators.size();
  auto in_half_open = [&](const IntVector& x) {
    // maximize t subject to sum lambda_i g_i = x, lambda_i + t + s_i = 1, all >= 0.
    const std::size_t vars = 2 * k + 1;
    std::vector<RatVector> a;
    RatVector b;
    for (std::size_t j = 0; j < dim; ++j) {
      RatVector row(vars);
      for (std::size_t i = 0; i < k; ++i) row[i] = generators[i][j];
      a.push_back(std::move(row));
      b.push_back(x[j]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      RatVector row(vars);
      row[i] = 1;
      row[k] = 1;
      row[k + 1 + i] = 1;
      a.push_back(std::move(row));
      b.push_back(1);
    }
    RatVector c(vars);
    c[k] = 1;
    auto r = maximize(a, b, c);
    return r.status == LpResult::Status::kOptimal && r.value > 0;
  };

  std::vector<IntVector> out;
  for (const auto& x : lattice_points(z)) {
    if (!full_lattice && !lattice_coordinates(lattice_rows, x)) continue;
    if (z.interior_contains(to_rational(x)) || in_half_open(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toric
