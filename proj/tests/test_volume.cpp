#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/volume.hpp"

using namespace toric;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<IntVector> pts(std::initializer_list<std::initializer_list<long>> xs) {
  std::vector<IntVector> out;
  for (auto x : xs) out.push_back(iv(x));
  return out;
}

std::vector<IntVector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::set<IntVector> s;
  while (s.size() < count) {
    IntVector p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(d(rng));
    s.insert(p);
  }
  return {s.begin(), s.end()};
}

const auto kP = pts({{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
const auto kQ = pts({{0, 0}, {1, 1}, {1, 2}, {2, 1}});

}  // namespace

TEST_CASE("volumes of simplices and the example polygons") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<IntVector> s{IntVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      s.push_back(e);
    }
    CHECK(volume(Polytope::hull(s)) == Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
  }
  const Polytope p = Polytope::hull(kP), q = Polytope::hull(kQ);
  CHECK(volume(p) == oracle::area(oracle::to_p2(kP)));
  CHECK(volume(p) == Rational(5, 2));
  CHECK(volume(q) == Rational(3, 2));
  CHECK(volume(minkowski_sum(p, q)) == 10);
  CHECK(volume(Polytope::hull(pts({{1, 1}}))) == 0);
  CHECK(volume(Polytope::hull(pts({{0, 0}, {2, 3}}))) == 0);
}

TEST_CASE("intrinsic volumes of lower-dimensional polytopes") {
  const Polytope seg = Polytope::hull(pts({{0, 0, 0}, {2, 2, 0}}));
  CHECK(volume(seg) == 0);
  CHECK(intrinsic_volume(seg) == 2);
  CHECK(euclidean_intrinsic_volume_squared(seg) == 8);
  CHECK(euclidean_intrinsic_volume(seg) == doctest::Approx(std::sqrt(8.0)));
  const Polytope tri = Polytope::hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(intrinsic_volume(tri) == Rational(1, 2));
  CHECK(euclidean_intrinsic_volume_squared(tri) == Rational(3, 4));
  CHECK(intrinsic_volume(Polytope::hull(pts({{5, 5}}))) == 1);
  // Leading Ehrhart coefficient equals the lattice-normalized intrinsic volume.
  CHECK(ehrhart(seg).leading() == intrinsic_volume(seg));
  CHECK(ehrhart(tri).leading() == intrinsic_volume(tri));
}

TEST_CASE("ehrhart polynomials") {
  CHECK(ehrhart(Polytope::hull(pts({{0}, {3}}))).coefficients() == std::vector<Rational>{1, 3});
  CHECK(ehrhart(Polytope::hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).coefficients() ==
        std::vector<Rational>{1, 2, 1});
  const auto hex = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  const UniPoly e = ehrhart(Polytope::hull(hex));
  CHECK(e.degree() == 2);
  CHECK(e.leading() == 3);
  CHECK(e.leading() == oracle::area(oracle::to_p2(hex)));
  CHECK(e.coefficients() == std::vector<Rational>{1, 3, 3});
  CHECK_THROWS_AS(ehrhart(Polytope::hull(1, std::vector<RatVector>{{0}, {Rational(1, 2)}})), InputError);
}

TEST_CASE("ehrhart predicts brute-force counts beyond the interpolation window") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 2;
    // The 3D brute-force oracle is cubic in the scale, so keep those boxes small.
    const auto v = random_points(rng, n, n + 1 + rng() % 3, n == 2 ? 2 : 1);
    const Polytope p = Polytope::hull(v);
    const UniPoly e = ehrhart(p);
    CHECK(e(0) == 1);
    for (long d = p.dim() + 1; d <= p.dim() + 2; ++d) {
      const Integer brute = n == 2 ? oracle::pick_count([&] {
        auto q = oracle::to_p2(v);
        for (auto& [x, y] : q) {
          x *= d;
          y *= d;
        }
        return q;
      }())
                                   : Integer(oracle::brute_count(v, d));
      CHECK(e(d) == brute);
    }
    CHECK(count_lattice_points(p) == (n == 2 ? oracle::pick_count(oracle::to_p2(v)) : Integer(oracle::brute_count(v))));
    if (p.is_full_dimensional()) CHECK(e.leading() == volume(p));
  }
}

TEST_CASE("pulling triangulation volumes add up") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Polytope p = Polytope::hull(random_points(rng, n, 7, 3));
    if (!p.is_full_dimensional()) continue;
    Rational total = 0;
    for (const auto& simplex : pulling_triangulation(p)) {
      std::vector<RatVector> verts;
      for (auto i : simplex) verts.push_back(p.vertices()[i]);
      const Rational v = simplex_volume(verts);
      CHECK(v > 0);
      total += v;
    }
    CHECK(total == volume(p));
    if (n == 2) {
      std::vector<oracle::P2> q;
      for (const auto& x : p.vertices()) q.emplace_back(numerator(x[0]), numerator(x[1]));
      CHECK(volume(p) == oracle::area(q));
    }
  }
}

TEST_CASE("minkowski volume polynomials") {
  const Polytope p = Polytope::hull(kP), q = Polytope::hull(kQ);
  const MultiPoly poly = minkowski_volume_polynomial({p, q});
  CHECK(poly.to_string("l") == "5/2*l1^2 + 6*l1*l2 + 3/2*l2^2");
  CHECK(poly.is_homogeneous());
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      const Polytope s = minkowski_sum(scale(p, a), scale(q, b));
      CHECK(poly(RatVector{a, b}) == volume(s));
    }
  CHECK(poly(RatVector{Rational(1, 2), Rational(2, 3)}) ==
        volume(minkowski_sum(scale(p, Rational(1, 2)), scale(q, Rational(2, 3)))));

  const MultiPoly single = minkowski_volume_polynomial({p});
  CHECK(single.to_string("l") == "5/2*l1^2");

  const MultiPoly intervals =
      minkowski_volume_polynomial({Polytope::hull(pts({{1}, {4}})), Polytope::hull(pts({{-2}, {0}}))});
  CHECK(intervals.to_string("l") == "3*l1 + 2*l2");
}

TEST_CASE("mixed volumes") {
  const Polytope p = Polytope::hull(kP), q = Polytope::hull(kQ);
  const auto mv = mixed_volume({p, q});
  CHECK(mv.normalized == 6);
  CHECK(mv.mv == 3);
  CHECK(mv.normalized_integer() == 6);
  // Oracle: 2 MV(P, Q) = area(P+Q) - area(P) - area(Q).
  const auto sum = oracle::minkowski(oracle::to_p2(kP), oracle::to_p2(kQ));
  CHECK(mv.normalized == oracle::area(sum) - oracle::area(oracle::to_p2(kP)) - oracle::area(oracle::to_p2(kQ)));

  CHECK(mixed_volume({p, p}).mv == volume(p));
  const auto tri = pts({{0, 0}, {1, 0}, {0, 1}});
  const Polytope t2 = scale(Polytope::hull(tri), 2), t3 = scale(Polytope::hull(tri), 3);
  CHECK(mixed_volume({t2, t3}).normalized == 6);
  CHECK_THROWS_AS(mixed_volume({p}), InputError);
  CHECK_THROWS_AS(mixed_volume({}), InputError);
  // A point summand contributes nothing in the plane.
  CHECK(mixed_volume({p, Polytope::hull(pts({{1, 1}}))}).normalized == 0);
}

TEST_CASE("mixed volume axioms on random lattice polygons and polytopes") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> small(0, 3), shift(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(Polytope::hull(random_points(rng, n, 2 + rng() % 4, 4)));
    const auto base = mixed_volume(ps);
    CHECK(base.normalized >= 0);
    CHECK(denominator(base.normalized) == 1);
    // Symmetry.
    auto perm = ps;
    std::reverse(perm.begin(), perm.end());
    CHECK(mixed_volume(perm).normalized == base.normalized);
    // Multilinearity in the first argument.
    const Polytope other = Polytope::hull(random_points(rng, n, 3, 4));
    const long lam = small(rng), mu = small(rng);
    auto combo = ps;
    combo[0] = minkowski_sum(scale(ps[0], lam), scale(other, mu));
    auto with_other = ps;
    with_other[0] = other;
    CHECK(mixed_volume(combo).normalized == lam * base.normalized + mu * mixed_volume(with_other).normalized);
    // Normalization.
    CHECK(mixed_volume(std::vector<Polytope>(n, ps[0])).mv == volume(ps[0]));
    // Translation invariance.
    auto moved = ps;
    RatVector t;
    for (std::size_t i = 0; i < n; ++i) t.emplace_back(shift(rng));
    moved[n - 1] = translate(ps[n - 1], t);
    CHECK(mixed_volume(moved).normalized == base.normalized);
    CHECK(volume(moved[n - 1]) == volume(ps[n - 1]));
    // Planar oracle.
    if (n == 2) {
      std::vector<oracle::P2> a, b;
      for (const auto& x : ps[0].vertices()) a.emplace_back(numerator(x[0]), numerator(x[1]));
      for (const auto& x : ps[1].vertices()) b.emplace_back(numerator(x[0]), numerator(x[1]));
      CHECK(base.normalized == oracle::area(oracle::minkowski(a, b)) - oracle::area(a) - oracle::area(b));
    }
  }
}
