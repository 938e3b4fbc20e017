#include "toric/cone.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  Bits zeros;  // processed inequalities tight at v
};

// Component of v orthogonal to span(basis), scaled to a primitive integer vector.
IntVector reduce_modulo(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  std::vector<RatVector> gram(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto c = solve(gram, rhs);
  RatVector r = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[j] -= (*c)[i] * Rational(basis[i][j]);
  return clear_denominators(r);
}

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays, const std::vector<IntVector>& modulo) {
  std::set<IntVector> out;
  for (const auto& r : rays) {
    IntVector p = reduce_modulo(r, modulo);
    if (!is_zero(p)) out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

}  // namespace

DoubleDescription double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equations) {
  std::vector<IntVector> constraints;
  for (const auto& a : inequalities) constraints.push_back(a);
  for (const auto& e : equations) {
    constraints.push_back(e);
    constraints.push_back(scaled(e, Integer(-1)));
  }
  for (const auto& a : constraints)
    if (a.size() != dim) throw InputError("double description: constraint of wrong length");

  const std::size_t total = constraints.size();
  std::vector<IntVector> lin = IntMatrix::identity(dim).row_vectors();
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < total; ++k) {
    const IntVector& a = constraints[k];
    if (is_zero(a)) continue;
    // A lineality direction not orthogonal to a becomes a ray.
    std::size_t pick = lin.size();
    Integer al;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      al = dot(a, lin[i]);
      if (al != 0) {
        pick = i;
        break;
      }
    }
    if (pick != lin.size()) {
      IntVector l = lin[pick];
      if (al < 0) {
        l = scaled(l, Integer(-1));
        al = -al;
      }
      std::vector<IntVector> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        IntVector p = sub(scaled(lin[i], al), scaled(l, dot(a, lin[i])));
        next_lin.push_back(primitive(std::move(p)));
      }
      for (auto& r : rays) {
        r.v = primitive(sub(scaled(r.v, al), scaled(l, dot(a, r.v))));
        r.zeros.resize(total);
        r.zeros.set(k);
      }
      Bits z(total);
      for (std::size_t j = 0; j < k; ++j) z.set(j);
      rays.push_back({l, z});
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].v);
      if (s[i] > 0)
        pos.push_back(i);
      else if (s[i] < 0)
        neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) rays[i].zeros.set(k);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      Ray r = rays[i];
      if (s[i] == 0) r.zeros.set(k);
      next.push_back(std::move(r));
    }
    for (auto p : pos)
      for (auto q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = primitive(sub(scaled(rays[q].v, s[p]), scaled(rays[p].v, s[q])));
        common.set(k);
        next.push_back({std::move(v), std::move(common)});
      }
    rays = std::move(next);
  }

  DoubleDescription out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

RationalCone RationalCone::finalize(std::size_t dim, DoubleDescription primal) {
  RationalCone c;
  c.ambient_dim_ = dim;
  c.lineality_ = saturated_basis(primal.lineality, dim);
  c.rays_ = canonical_rays(primal.rays, c.lineality_);
  auto dual = double_description(dim, c.rays_, c.lineality_);
  c.equations_ = saturated_basis(dual.lineality, dim);
  c.facets_ = canonical_rays(dual.rays, c.equations_);
  return c;
}

RationalCone RationalCone::from_generators(std::size_t dim, const std::vector<IntVector>& rays,
                                           const std::vector<IntVector>& lineality) {
  for (const auto& r : rays)
    if (r.size() != dim) throw InputError("cone generator has wrong length");
  // Facets first, then the irredundant generators they cut out.
  auto dual = double_description(dim, rays, lineality);
  return finalize(dim, double_description(dim, dual.rays, dual.lineality));
}

RationalCone RationalCone::from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities,
                                             const std::vector<IntVector>& equations) {
  return finalize(dim, double_description(dim, inequalities, equations));
}

bool RationalCone::contains(const RatVector& x) const {
  if (x.size() != ambient_dim_) throw InputError("cone membership: vector of wrong length");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::contains(const IntVector& x) const {
  if (x.size() != ambient_dim_) throw InputError("cone membership: vector of wrong length");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::relative_interior_contains(const RatVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

IntVector RationalCone::interior_vector() const {
  IntVector s(ambient_dim_);
  for (const auto& r : rays_) s = add(s, r);
  return primitive(std::move(s));
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("cone intersection: dimension mismatch");
  std::vector<IntVector> ineq = facets_, eq = equations_;
  ineq.insert(ineq.end(), other.facets_.begin(), other.facets_.end());
  eq.insert(eq.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(ambient_dim_, ineq, eq);
}

bool RationalCone::is_face_of(const RationalCone& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (const auto& r : rays_)
    if (!other.contains(r)) return false;
  for (const auto& l : lineality_)
    if (!other.contains(l) || !other.contains(scaled(l, Integer(-1)))) return false;
  RatVector p = to_rational(interior_vector());
  std::vector<IntVector> eq = other.equations_;
  for (const auto& f : other.facets_)
    if (dot(f, p) == 0) eq.push_back(f);
  return from_inequalities(ambient_dim_, other.facets_, eq) == *this;
}

bool RationalCone::operator<(const RationalCone& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  if (rays_ != o.rays_) return rays_ < o.rays_;
  return lineality_ < o.lineality_;
}

RationalCone dual_cone(const RationalCone& sigma) {
  return RationalCone::from_generators(sigma.ambient_dim(), sigma.facets(), sigma.equations());
}

// --- fans ---------------------------------------------------------------------

Fan::Fan(std::size_t ambient_dim, std::vector<RationalCone> cones) : ambient_dim_(ambient_dim) {
  std::set<RationalCone> all;
  std::vector<RationalCone> stack = std::move(cones);
  while (!stack.empty()) {
    RationalCone c = std::move(stack.back());
    stack.pop_back();
    if (c.ambient_dim() != ambient_dim_) throw InputError("fan: cone of wrong ambient dimension");
    if (!all.insert(c).second) continue;
    for (const auto& f : c.facets()) {
      std::vector<IntVector> eq = c.equations();
      eq.push_back(f);
      stack.push_back(RationalCone::from_inequalities(ambient_dim_, c.facets(), eq));
    }
  }
  cones_.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = 0; j < cones_.size(); ++j) {
      if (i == j || cones_[i].dim() >= cones_[j].dim()) continue;
      bool inside = true;
      for (const auto& r : cones_[i].rays())
        if (!cones_[j].contains(r)) {
          inside = false;
          break;
        }
      for (const auto& l : cones_[i].lineality())
        if (inside && !cones_[j].contains(l)) inside = false;
      if (inside) containment_.emplace_back(i, j);
    }
}

std::vector<std::size_t> Fan::maximal_cones() const {
  std::vector<bool> is_face(cones_.size(), false);
  for (auto [i, j] : containment_) is_face[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (!is_face[i]) out.push_back(i);
  return out;
}

std::vector<IntVector> Fan::rays() const {
  std::vector<IntVector> out;
  for (const auto& c : cones_)
    if (c.dim() == 1 && c.is_pointed()) out.push_back(c.rays().front());
  return out;
}

std::optional<std::size_t> Fan::locate(const RatVector& x) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].relative_interior_contains(x)) return i;
  return std::nullopt;
}

bool Fan::is_complete(std::uint64_t seed, std::size_t samples) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  auto maximal = maximal_cones();
  for (std::size_t s = 0; s < samples; ++s) {
    IntVector x(ambient_dim_);
    for (auto& c : x) c = coord(rng);
    bool covered = false;
    for (auto i : maximal)
      if (cones_[i].contains(x)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

Fan common_refinement(const std::vector<Fan>& fans) {
  if (fans.empty()) throw InputError("common refinement of no fans");
  const std::size_t dim = fans.front().ambient_dim();
  for (const auto& f : fans) {
    if (f.ambient_dim() != dim) throw InputError("common refinement: ambient dimension mismatch");
    if (!f.is_complete()) throw InputError("common refinement: input fan is not complete");
  }
  std::vector<RationalCone> current = fans.front().cones();
  for (std::size_t k = 1; k < fans.size(); ++k) {
    std::set<RationalCone> next;
    for (const auto& a : current)
      for (const auto& b : fans[k].cones()) next.insert(a.intersect(b));
    current.assign(next.begin(), next.end());
  }
  Fan out(dim, std::move(current));
  std::vector<std::vector<std::size_t>> prov;
  for (const auto& c : out.cones()) {
    RatVector p = to_rational(c.interior_vector());
    std::vector<std::size_t> row;
    for (const auto& f : fans) {
      auto idx = f.locate(p);
      if (!idx) throw Error("common refinement: cone not located in an input fan");
      row.push_back(*idx);
    }
    prov.push_back(std::move(row));
  }
  out.set_provenance(std::move(prov));
  return out;
}

}  // namespace toric
