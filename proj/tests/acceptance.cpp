// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when a criterion fails, unless that criterion is listed with --allow-fail.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "toric/toric.hpp"

using namespace toric;
using Json = nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

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

Json cli_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != 0) throw std::runtime_error("toric-kit " + args[0] + ": " + err.str());
  return Json::parse(out.str());
}

std::set<std::set<IntVector>> as_pairs(const std::vector<Binomial>& gens) {
  std::set<std::set<IntVector>> out;
  for (const auto& g : gens) out.insert({g.plus(), g.minus()});
  return out;
}

std::set<std::set<IntVector>> twisted_cubic_pairs() {
  return {{iv({1, 0, 1, 0}), iv({0, 2, 0, 0})},
          {iv({1, 0, 0, 1}), iv({0, 1, 1, 0})},
          {iv({0, 1, 0, 1}), iv({0, 0, 2, 0})}};
}

bool near(std::complex<double> z, double re, double im, double tol) {
  return std::abs(z.real() - re) < tol && std::abs(z.imag() - im) < tol;
}

bool has_real_point(const BivariateResult& r, double x, double y, double tol) {
  for (const auto& s : r.solutions)
    if (near(s.coordinates[0], x, 0, tol) && near(s.coordinates[1], y, 0, tol)) return true;
  return false;
}

std::vector<IntVector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::set<IntVector> s;
  while (s.size() < count) {
    IntVector p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(d(rng));
    s.insert(p);
  }
  return {s.begin(), s.end()};
}

const std::vector<std::string> kXY{"x", "y"};

Verdict twisted_cubic() {
  Verdict v;
  const Json j = cli_json({"toric-ideal", "--points", "[[3,0],[2,1],[1,2],[0,3]]", "--order", "degrevlex"});
  std::set<std::set<IntVector>> got;
  for (const auto& u : j["exponents"]) {
    IntVector e;
    for (const auto& x : u) e.emplace_back(x.get<long>());
    const Binomial b{e};
    got.insert({b.plus(), b.minus()});
  }
  v.require(got == twisted_cubic_pairs(), "binomials differ: " + j["binomials"].dump());
  v.detail = v.pass ? j["binomials"].dump() : v.detail;
  return v;
}

Verdict rank_one() {
  Verdict v;
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<IntVector> points;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          IntVector p(k + m);
          p[i] = p[k + j] = 1;
          points.push_back(p);
        }
      // z_{ab} < z_{cd} iff a < c, or a = c and b > d: list largest first.
      std::vector<std::size_t> order;
      for (std::size_t a = k; a-- > 0;)
        for (std::size_t b = 0; b < m; ++b) order.push_back(a * m + b);
      const GroebnerBasis gb = toric_groebner(SupportSet(k + m, points), TermOrder::degrevlex(order));
      std::set<std::set<IntVector>> minors;
      for (std::size_t r1 = 0; r1 < k; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < k; ++r2)
          for (std::size_t c1 = 0; c1 < m; ++c1)
            for (std::size_t c2 = c1 + 1; c2 < m; ++c2) {
              IntVector d(k * m), a(k * m);
              d[r1 * m + c1] = d[r2 * m + c2] = 1;
              a[r1 * m + c2] = a[r2 * m + c1] = 1;
              minors.insert({d, a});
            }
      v.require(gb.reduced && as_pairs(gb.generators) == minors,
                std::to_string(k) + "x" + std::to_string(m) + " basis is not the set of minors");
      ++checked;
    }
  if (v.pass) v.detail = std::to_string(checked) + " shapes (k,m <= 3)";
  return v;
}

Verdict cuspidal() {
  Verdict v;
  const SupportSet a = SupportSet::from_points({{0}, {2}, {3}});
  const auto hf = hilbert_function_values(a, 4);
  v.require(hf == std::vector<Integer>{1, 3, 6, 9, 12}, "Hilbert function values");
  const UniPoly hp = hilbert_polynomial(a);
  v.require(hp.coefficients() == std::vector<Rational>{0, 3}, "Hilbert polynomial " + hp.to_string("d"));
  const UniPoly e = ehrhart(Polytope::hull(pts({{0}, {3}})));
  v.require(e.coefficients() == std::vector<Rational>{1, 3}, "Ehrhart polynomial " + e.to_string("d"));
  if (v.pass) v.detail = "HF 1,3,6,9,12; HP " + hp.to_string("d") + "; Ehrhart " + e.to_string("d");
  return v;
}

Verdict gap_shift() {
  Verdict v;
  const GapData g = semigroup_gap_data(SupportSet::from_points({{0}, {2}, {3}}));
  v.require(g.b_set == pts({{0, 0}, {1, 1}, {1, 2}, {2, 3}, {2, 4}}), "B set");
  v.require(g.nu == 1, "nu = " + to_string(g.nu));
  v.require(g.v == iv({3, 5}), "v = " + to_string(g.v));
  v.require(g.v_prime == iv({1, 2}), "v' = " + to_string(g.v_prime));
  v.require(g.verified, "inclusion check");
  if (v.pass) v.detail = "|B| = 5, nu = 1, v = (3,5), v' = (1,2)";
  return v;
}

Verdict mixed_volume_example() {
  Verdict v;
  const Polytope p = Polytope::hull(pts({{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}));
  const Polytope q = Polytope::hull(pts({{0, 0}, {1, 1}, {1, 2}, {2, 1}}));
  const auto mv = mixed_volume({p, q});
  v.require(mv.normalized == 6, "2 MV = " + to_string(mv.normalized));
  const Polytope s = minkowski_sum(p, q);
  std::set<RatVector> got(s.vertices().begin(), s.vertices().end());
  std::set<RatVector> want;
  for (const auto& c : pts({{0, 1}, {1, 0}, {1, 3}, {2, 0}, {2, 4}, {4, 1}, {4, 2}})) want.insert(to_rational(c));
  v.require(got == want, "P+Q has " + std::to_string(got.size()) + " vertices, not the 7 expected");
  if (v.pass) v.detail = "2 MV(P,Q) = 6; P+Q vertices match the 7 columns";
  return v;
}

Verdict bernstein_solver() {
  Verdict v;
  const PolySystem s =
      parse_system({"x + 2y + 3xy + 5x^2y + 7y^2 + 11xy^2", "1 + 3xy + 9x^2y + 27xy^2"}, kXY);
  const Integer bound = bernstein_bound(s);
  v.require(bound == 6, "bound = " + to_string(bound));
  SolveOptions opt;
  opt.tol = 1e-8;
  const BivariateResult r = solve_bivariate(s, opt);
  v.require(r.solutions.size() == 6 && r.total_multiplicity() == 6,
            std::to_string(r.solutions.size()) + " solutions");
  const double expected[4][2] = {{-0.21013, -0.44087}, {0.94037, -0.13693}, {-0.62796, 0.29688}, {-1.1747, 0.36649}};
  for (const auto& e : expected)
    v.require(has_real_point(r, e[0], e[1], 1e-4), "missing real solution near (" + std::to_string(e[0]) + ", " +
                                                       std::to_string(e[1]) + ")");
  if (v.pass) v.detail = "bound 6, 6 torus solutions, 4 real ones match to 1e-4";
  return v;
}

Verdict kushnirenko_solver() {
  Verdict v;
  const PolySystem s = parse_system({"x^2y + 2xy^2 - 1 + xy", "x^2y - xy^2 + 2 - xy"}, kXY);
  const Integer bound = kushnirenko_bound(s.polynomials[0].support());
  v.require(bound == 3, "bound = " + to_string(bound));
  const BivariateResult r = solve_bivariate(s);
  v.require(r.total_multiplicity() == 3, "count = " + std::to_string(r.total_multiplicity()));
  if (!has_real_point(r, 1.53277, -0.90655, 1e-4)) {
    std::ostringstream real;
    real << std::setprecision(6);
    for (const auto& sol : r.solutions)
      if (std::abs(sol.coordinates[0].imag()) < 1e-9 && std::abs(sol.coordinates[1].imag()) < 1e-9)
        real << " (" << sol.coordinates[0].real() << ", " << sol.coordinates[1].real() << ")";
    v.require(false, "bound 3 and count 3 hold, but no real solution near (1.53277, -0.90655); real solutions:" +
                         real.str());
  }
  if (v.pass) v.detail = "bound 3, count 3, real solution matches";
  return v;
}

Verdict cone_duality() {
  Verdict v;
  const RationalCone sigma = RationalCone::from_generators(2, pts({{1, 2}, {2, 1}}));
  const RationalCone dual = dual_cone(sigma);
  std::set<IntVector> rays(dual.rays().begin(), dual.rays().end());
  v.require(rays == std::set<IntVector>{iv({2, -1}), iv({-1, 2})}, "dual rays");
  const SupportSet hb = hilbert_basis(dual);
  std::set<IntVector> basis(hb.points().begin(), hb.points().end());
  v.require(basis == std::set<IntVector>{iv({2, -1}), iv({1, 0}), iv({0, 1}), iv({-1, 2})}, "Hilbert basis");
  // Patch ideal in the variables ordered as the corresponding twisted-cubic points.
  const PatchIdeal patch = affine_patch_ideal(sigma);
  const std::vector<IntVector> ordered = pts({{2, -1}, {1, 0}, {0, 1}, {-1, 2}});
  std::vector<std::size_t> where;
  for (const auto& p : ordered) {
    const auto i = patch.generators.index_of(p);
    v.require(i.has_value(), "patch generator " + to_string(p) + " missing");
    where.push_back(i.value_or(0));
  }
  std::set<std::set<IntVector>> got;
  for (const auto& g : patch.gb.generators) {
    IntVector u(4);
    for (std::size_t k = 0; k < 4; ++k) u[k] = g.u[where[k]];
    const Binomial b{u};
    got.insert({b.plus(), b.minus()});
  }
  v.require(got == twisted_cubic_pairs(), "patch ideal differs from the twisted cubic equations");
  if (v.pass) v.detail = "dual rays (2,-1),(-1,2); 4 Hilbert basis elements; patch ideal = twisted cubic ideal";
  return v;
}

Verdict double_pillow() {
  Verdict v;
  const PatchIdeal cone = affine_patch_ideal(RationalCone::from_generators(2, pts({{1, 1}, {1, -1}})));
  const PatchIdeal ray = affine_patch_ideal(RationalCone::from_generators(2, pts({{1, 1}})));
  auto text = [](const PatchIdeal& p) {
    std::string s;
    for (const auto& g : p.gb.generators) s += (s.empty() ? "" : ", ") + g.to_string(support_variable_names(p.generators));
    return s;
  };
  auto one = [](const PatchIdeal& p, const std::set<IntVector>& want) {
    return p.gb.generators.size() == 1 &&
           std::set<IntVector>{p.gb.generators[0].u, scaled(p.gb.generators[0].u, Integer(-1))}.count(*want.begin());
  };
  // z_(1,-1) z_(1,1) - z_(1,0)^2 as an exponent difference over the cone's generators.
  IntVector uc(cone.generators.size());
  const auto a = cone.generators.index_of(iv({1, -1})), b = cone.generators.index_of(iv({1, 1})),
             c = cone.generators.index_of(iv({1, 0}));
  if (a && b && c && cone.generators.size() == 3) {
    uc[*a] = 1;
    uc[*b] = 1;
    uc[*c] = -2;
  }
  v.require(one(cone, {uc}), "cone patch: " + text(cone));
  IntVector ur(ray.generators.size());
  const auto d = ray.generators.index_of(iv({1, -1})), e = ray.generators.index_of(iv({-1, 1}));
  if (d && e && ray.generators.size() == 3) {
    ur[*d] = 1;
    ur[*e] = 1;
  }
  v.require(one(ray, {ur}), "ray patch: " + text(ray));
  if (v.pass) v.detail = text(cone) + "; " + text(ray);
  return v;
}

Verdict octahedron() {
  Verdict v;
  const Polytope p = Polytope::hull(pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  std::set<IntVector> normals;
  for (const auto& f : p.facets()) {
    v.require(f.offset == 1, "offset " + to_string(f.offset));
    normals.insert(f.normal);
  }
  std::set<IntVector> want;
  for (long a : {-1, 1})
    for (long b : {-1, 1})
      for (long c : {-1, 1}) want.insert(iv({a, b, c}));
  v.require(p.facets().size() == 8 && normals == want, std::to_string(p.facets().size()) + " facets");
  if (v.pass) v.detail = "8 half-spaces +-x+-y+-z <= 1";
  return v;
}

Verdict mixed_volume_axioms() {
  Verdict v;
  const std::uint64_t seed = 11;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(0, 3), shift(-4, 4);
  std::size_t failures = 0;
  auto fail = [&](int family, const std::string& what) {
    if (++failures <= 3) v.require(false, "family " + std::to_string(family) + ": " + what);
  };
  for (int family = 0; family < 200; ++family) {
    const std::size_t n = 2 + family % 2;
    auto random_polytope = [&] { return Polytope::hull(random_points(rng, n, 1 + rng() % (n == 2 ? 6 : 5), -4, 4)); };
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(random_polytope());
    const Rational base = mixed_volume(ps).mv;

    std::vector<Polytope> perm = ps;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (mixed_volume(perm).mv != base) fail(family, "symmetry");

    const Polytope other = random_polytope();
    const long lam = coef(rng), mu = coef(rng);
    auto combo = ps, alt = ps;
    combo[0] = minkowski_sum(scale(ps[0], lam), scale(other, mu));
    alt[0] = other;
    if (mixed_volume(combo).mv != lam * base + mu * mixed_volume(alt).mv) fail(family, "multilinearity");

    if (mixed_volume(std::vector<Polytope>(n, ps[0])).mv != volume(ps[0])) fail(family, "normalization");

    auto moved = ps;
    for (auto& p : moved) {
      RatVector t;
      for (std::size_t i = 0; i < n; ++i) t.emplace_back(shift(rng));
      p = translate(p, t);
    }
    if (mixed_volume(moved).mv != base) fail(family, "translation invariance");
  }
  v.detail = (v.pass ? "" : v.detail + "; ") + "200 families (seed " + std::to_string(seed) + "), " +
             std::to_string(failures) + " failures";
  return v;
}

Verdict bound_vs_solver() {
  Verdict v;
  const std::uint64_t seed = 12;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000, 1000), size(3, 6);
  int equal = 0, exceeded = 0;
  std::vector<std::string> log;
  for (int k = 0; k < 100; ++k) {
    std::vector<SparsePolynomial> ps;
    for (int i = 0; i < 2; ++i) {
      std::vector<std::pair<IntVector, Rational>> terms;
      for (const auto& a : random_points(rng, 2, static_cast<std::size_t>(size(rng)), 0, 4)) {
        long c = 0;
        while (c == 0) c = coef(rng);
        terms.push_back({a, c});
      }
      ps.push_back(SparsePolynomial::from_terms(2, terms));
    }
    const PolySystem s{kXY, ps};
    const Integer bound = bernstein_bound(s);
    std::string outcome;
    try {
      const Integer count = solve_bivariate(s).total_multiplicity();
      if (count > bound) ++exceeded;
      if (count == bound) {
        ++equal;
        continue;
      }
      outcome = "count " + to_string(count) + " < bound " + to_string(bound);
    } catch (const DegenerateError& e) {
      outcome = std::string("not isolated (") + e.what() + ")";
    }
    const GenericityReport g = genericity_check(s);
    log.push_back("system " + std::to_string(k) + ": " + outcome + "; genericity " + to_string(g.verdict) +
                  (g.witness ? ", witness w = " + to_string(*g.witness) : ""));
  }
  for (const auto& line : log) std::cout << "    " << line << "\n";
  v.require(exceeded == 0, std::to_string(exceeded) + " systems exceed the bound");
  v.require(equal >= 95, "equality on " + std::to_string(equal) + " < 95");
  v.detail = (v.pass ? "" : v.detail + "; ") + "seed " + std::to_string(seed) + ": count <= bound on 100/100, equality on " +
             std::to_string(equal) + "/100";
  return v;
}

Verdict degree_identity() {
  Verdict v;
  const std::uint64_t seed = 13;
  std::mt19937_64 rng(seed);
  int tested = 0;
  while (tested < 20) {
    const SupportSet a(2, random_points(rng, 2, 3 + rng() % 4, 0, 4));
    const Polytope p = Polytope::hull(a);
    if (!integral_affine_span_is_full(a) || !p.is_full_dimensional()) continue;
    ++tested;
    const Rational lhs = hilbert_polynomial(a).leading() * 2;
    const Rational rhs = normalized_volume(p);
    if (lhs != rhs) {
      std::string points;
      for (const auto& x : a.points()) points += to_string(x);
      v.require(false, points + ": 2 lead(HP) = " + to_string(lhs) + ", normalized volume " + to_string(rhs));
    }
  }
  if (v.pass) v.detail = "20 supports (seed " + std::to_string(seed) + ")";
  return v;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict()> run;
  double limit_seconds;  // 0: no limit
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--allow-fail" && i + 1 < argc) {
      allowed.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--allow-fail N]...\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "twisted cubic toric ideal", twisted_cubic, 1},
      {2, "rank-one matrices: reduced basis = 2x2 minors", rank_one, 5},
      {3, "cuspidal semigroup Hilbert data and Ehrhart of [0,3]", cuspidal, 0},
      {4, "gap/shift data for {0,2,3}", gap_shift, 0},
      {5, "mixed volume and Minkowski sum of P, Q", mixed_volume_example, 0},
      {6, "Bernstein bound and solver on the mixed system", bernstein_solver, 10},
      {7, "Kushnirenko bound and solver on the sparse cubic", kushnirenko_solver, 0},
      {8, "cone duality, Hilbert basis, patch ideal", cone_duality, 0},
      {9, "double-pillow patch ideals", double_pillow, 0},
      {10, "octahedron H-representation", octahedron, 0},
      {11, "mixed volume axioms on 200 random families", mixed_volume_axioms, 0},
      {12, "Bernstein bound vs solver on 100 random systems", bound_vs_solver, 0},
      {13, "degree identity on 20 random planar supports", degree_identity, 0},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) v.require(false, "time limit exceeded");
    std::ostringstream time;
    time << std::fixed << std::setprecision(3) << seconds << " s";
    if (c.limit_seconds > 0) time << ", limit " << c.limit_seconds << " s";
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << v.detail << " (" << time.str()
              << ")" << (v.pass || !allowed.count(c.id) ? "" : " [allowed failure]") << std::endl;
    if (!v.pass && !allowed.count(c.id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
