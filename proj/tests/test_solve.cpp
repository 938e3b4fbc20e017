#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/solve.hpp"

using namespace toric;

namespace {

const std::vector<std::string> kXY{"x", "y"};

using C = std::complex<double>;

// Independent residual: evaluate every term in complex double.
double residual(const PolySystem& s, const std::vector<C>& z) {
  double worst = 0;
  for (const auto& f : s.polynomials) {
    C sum = 0;
    for (std::size_t t = 0; t < f.size(); ++t) {
      C term = to_double(f.coefficients()[t]);
      for (std::size_t i = 0; i < 2; ++i) term *= std::pow(z[i], static_cast<int>(f.support()[t][i]));
      sum += term;
    }
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

// Sylvester determinant of f(x0, y), g(x0, y) in y.
Rational sylvester_at(const SparsePolynomial& f, const SparsePolynomial& g, const Rational& x0) {
  auto coeffs = [&](const SparsePolynomial& p) {
    std::vector<Rational> c;
    for (std::size_t t = 0; t < p.size(); ++t) {
      const auto d = static_cast<std::size_t>(p.support()[t][1]);
      if (c.size() <= d) c.resize(d + 1);
      Rational xp = 1;
      for (long k = 0; k < p.support()[t][0]; ++k) xp *= x0;
      c[d] += p.coefficients()[t] * xp;
    }
    return c;  // ascending in y
  };
  const auto a = coeffs(f), b = coeffs(g);
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<RatVector> s(size, RatVector(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return oracle::det(s);
}

bool has_point(const BivariateResult& r, C x, C y, double tol) {
  for (const auto& s : r.solutions)
    if (std::abs(s.coordinates[0] - x) < tol && std::abs(s.coordinates[1] - y) < tol) return true;
  return false;
}

}  // namespace

TEST_CASE("the mixed system has six torus solutions") {
  const PolySystem s =
      parse_system({"x + 2y + 3xy + 5x^2y + 7y^2 + 11xy^2", "1 + 3xy + 9x^2y + 27xy^2"}, kXY);
  SolveOptions opt;
  opt.tol = 1e-8;
  const BivariateResult r = solve_bivariate(s, opt);
  CHECK(r.solutions.size() == 6);
  CHECK(r.total_multiplicity() == 6);
  CHECK(bernstein_bound(s) == 6);
  CHECK_FALSE(r.multiplicity_ambiguous);
  CHECK(has_point(r, -0.21013, -0.44087, 1e-4));
  CHECK(has_point(r, 0.94037, -0.13693, 1e-4));
  CHECK(has_point(r, -0.62796, 0.29688, 1e-4));
  CHECK(has_point(r, -1.1747, 0.36649, 1e-4));
  int real = 0;
  for (const auto& sol : r.solutions) {
    CHECK(sol.residual < opt.tol);
    CHECK(residual(s, sol.coordinates) < 1e-8);
    CHECK(std::abs(sol.coordinates[0]) > 1e-6);
    CHECK(std::abs(sol.coordinates[1]) > 1e-6);
    if (std::abs(sol.coordinates[0].imag()) < 1e-9 && std::abs(sol.coordinates[1].imag()) < 1e-9) ++real;
  }
  CHECK(real == 4);
  for (std::size_t i = 1; i < r.solutions.size(); ++i)
    CHECK(r.solutions[i - 1].coordinates[0].real() <= r.solutions[i].coordinates[0].real());

  // The reported resultant matches a Sylvester determinant at sample abscissae, up to one global sign.
  const UniPoly res = resultant_y(s.polynomials[0], s.polynomials[1]);
  CHECK(res.coefficients() == r.resultant.coefficients());
  int sign = 0;
  for (long x0 : {-3, -1, 0, 2, 5, 9}) {
    const Rational d = sylvester_at(s.polynomials[0], s.polynomials[1], x0);
    const Rational v = res(Rational(x0));
    if (d == 0) {
      CHECK(v == 0);
      continue;
    }
    const int sg = v == d ? 1 : (v == -d ? -1 : 0);
    CHECK(sg != 0);
    if (sign == 0) sign = sg;
    CHECK(sg == sign);
  }
}

TEST_CASE("the sparse cubic intersection") {
  const PolySystem printed = parse_system({"x^2y + 2xy^2 - 1 + xy", "x^2y - xy^2 + 2 - xy"}, kXY);
  const BivariateResult r = solve_bivariate(printed);
  CHECK(r.total_multiplicity() == 3);
  CHECK(kushnirenko_bound(printed.polynomials[0].support()) == 3);
  CHECK(has_point(r, 1.03702, -1.37035, 1e-4));
  // The quoted real point solves the variant with constant term +1 in the first equation.
  const PolySystem variant = parse_system({"x^2y + 2xy^2 + 1 + xy", "x^2y - xy^2 + 2 - xy"}, kXY);
  const BivariateResult rv = solve_bivariate(variant);
  CHECK(has_point(rv, 1.53277, -0.90655, 1e-4));
  CHECK(rv.total_multiplicity() == 3);
}

TEST_CASE("small systems") {
  auto solve = [](std::vector<std::string> polys) { return solve_bivariate(parse_system(polys, kXY)); };
  auto r = solve({"x - 1", "y - 1"});
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].multiplicity == 1);
  CHECK(has_point(r, 1, 1, 1e-12));

  r = solve({"x^2 - 2x + 1", "y - 1"});
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].multiplicity == 2);
  CHECK(r.total_multiplicity() == 2);

  r = solve({"x^-1 + y - 3", "xy - 2"});
  REQUIRE(r.solutions.size() == 1);
  CHECK(has_point(r, 1, 2, 1e-10));

  // Roots on the coordinate axes are not torus solutions.
  r = solve({"x^2 - x", "y - 1"});
  REQUIRE(r.solutions.size() == 1);
  CHECK(has_point(r, 1, 1, 1e-10));

  // Complex conjugate pair.
  r = solve({"x^2 + 1", "y - x"});
  CHECK(r.solutions.size() == 2);
  CHECK(has_point(r, C(0, 1), C(0, 1), 1e-10));
  CHECK(has_point(r, C(0, -1), C(0, -1), 1e-10));

  CHECK_THROWS_AS(solve({"xy - 1", "x^2y^2 - 1"}), DegenerateError);
  CHECK_THROWS_AS(solve_bivariate(parse_system({"x - 1"}, {"x"})), InputError);
  CHECK_THROWS_AS(solve({"0", "y - 1"}), InputError);
}

TEST_CASE("random systems never exceed the Bernstein bound") {
  const std::uint64_t seed = 20240607;
  CAPTURE(seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> e(0, 3), c(-1000, 1000), n(2, 4);
  int equal = 0, total = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SparsePolynomial> ps;
    for (int i = 0; i < 2; ++i) {
      std::vector<std::pair<IntVector, Rational>> t;
      const long terms = n(rng);
      while (static_cast<long>(t.size()) < terms) {
        const long coef = c(rng);
        if (coef != 0) t.push_back({IntVector{e(rng), e(rng)}, coef});
      }
      ps.push_back(SparsePolynomial::from_terms(2, t));
    }
    const PolySystem s{kXY, ps};
    if (ps[0].is_zero() || ps[1].is_zero()) continue;
    const Integer bound = bernstein_bound(s);
    BivariateResult r;
    try {
      r = solve_bivariate(s);
    } catch (const DegenerateError&) {
      continue;  // shared factor: not isolated
    }
    ++total;
    CAPTURE(ps[0].to_string(kXY));
    CAPTURE(ps[1].to_string(kXY));
    CHECK(Integer(r.total_multiplicity()) <= bound);
    for (const auto& sol : r.solutions) CHECK(residual(s, sol.coordinates) < 1e-6);
    if (Integer(r.total_multiplicity()) == bound) ++equal;
  }
  CHECK(total >= 20);
  CHECK(equal * 100 >= 90 * total);
}
