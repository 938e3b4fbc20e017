#include "toric/solve.hpp"

#include <algorithm>
#include <optional>

#include <boost/multiprecision/mpfr.hpp>

#include "toric/errors.hpp"

namespace toric {

unsigned BivariateResult::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& s : solutions) total += s.multiplicity;
  return total;
}

namespace {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision for every Real created in its scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits * 30103 / 100000 + 1);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct Cx {
  Real re = 0, im = 0;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real norm(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Rational& q) {
  Real num(numerator(q).str()), den(denominator(q).str());
  return num / den;
}

// Parts below the working precision relative to |z| are set to zero.
std::complex<double> to_complex(const Cx& z, unsigned bits) {
  const Real noise = pow(Real(2), -static_cast<int>(bits) + 32) * (1 + norm(z));
  const double re = abs(z.re) <= noise ? 0.0 : z.re.convert_to<double>();
  const double im = abs(z.im) <= noise ? 0.0 : z.im.convert_to<double>();
  return {re, im};
}

// p(z) and p'(z) by Horner; coefficients constant first.
std::pair<Cx, Cx> horner(const std::vector<Cx>& p, const Cx& z) {
  Cx v, d;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

// Simultaneous Aberth-Ehrlich iteration. Returns the roots once every
// correction is below the working precision; otherwise nullopt, or the last
// iterates when `accept_unconverged` (multiple roots converge slowly).
std::optional<std::vector<Cx>> aberth(const std::vector<Cx>& p, unsigned bits, bool accept_unconverged = false) {
  const std::size_t n = p.size() - 1;
  if (n == 0) return std::vector<Cx>{};
  const Cx lead = p.back();
  if (n == 1) return std::vector<Cx>{Cx{} - p[0] / lead};
  Real radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Real r = pow(norm(p[i] / lead), Real(1) / Real(static_cast<unsigned>(n - i)));
    radius = max(radius, r);
  }
  if (radius == 0) radius = 1;
  const Cx center = Cx{} - p[n - 1] / (lead * Cx{Real(static_cast<unsigned>(n)), 0});
  std::vector<Cx> z(n);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = two_pi * Real(static_cast<unsigned>(k)) / Real(static_cast<unsigned>(n)) + Real(0.7);
    z[k] = center + Cx{radius * cos(angle), radius * sin(angle)};
  }
  const Real eps = pow(Real(2), -static_cast<int>(bits) + 24);
  const std::size_t max_iter = 400 + 40 * n;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto [v, d] = horner(p, z[k]);
      if (v.re == 0 && v.im == 0) continue;
      Cx sum;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum = sum + Cx{1, 0} / (z[k] - z[j]);
      const Cx ratio = v / d;
      const Cx w = ratio / (Cx{1, 0} - ratio * sum);
      z[k] = z[k] - w;
      if (norm(w) > eps * (1 + norm(z[k]))) converged = false;
    }
    if (converged) return z;
  }
  if (accept_unconverged) return z;
  return std::nullopt;
}

// Dense bivariate polynomial: rows[j] = coefficient of y^j, a polynomial in x.
struct Dense {
  std::vector<UniPoly> rows;

  int degree_y() const { return static_cast<int>(rows.size()) - 1; }
  int degree_x() const {
    int d = 0;
    for (const auto& r : rows) d = std::max(d, r.degree());
    return d;
  }
};

// Divide by the smallest monomial so that no exponent is negative and
// neither x nor y divides the result.
SparsePolynomial clear_monomial(const SparsePolynomial& f) {
  IntVector lo = f.support()[0];
  for (const auto& a : f.support().points())
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], a[i]);
  return f.shifted(scaled(lo, Integer(-1)));
}

Dense to_dense(const SparsePolynomial& f) {
  Integer dy = 0;
  for (const auto& a : f.support().points()) {
    if (a[0] < 0 || a[1] < 0) throw InputError("resultant needs nonnegative exponents");
    dy = std::max(dy, a[1]);
  }
  std::vector<std::vector<Rational>> coeffs(dy.convert_to<std::size_t>() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& a = f.support()[i];
    auto& row = coeffs[a[1].convert_to<std::size_t>()];
    const auto ex = a[0].convert_to<std::size_t>();
    if (row.size() <= ex) row.resize(ex + 1);
    row[ex] += f.coefficients()[i];
  }
  Dense d;
  for (auto& c : coeffs) d.rows.emplace_back(std::move(c));
  return d;
}

Rational sylvester_at(const Dense& f, const Dense& g, const Rational& x) {
  const int p = f.degree_y(), q = g.degree_y();
  const int size = p + q;
  if (size == 0) return 1;
  std::vector<RatVector> m(static_cast<std::size_t>(size), RatVector(static_cast<std::size_t>(size)));
  for (int r = 0; r < q; ++r)
    for (int j = 0; j <= p; ++j) m[r][static_cast<std::size_t>(r + p - j)] = f.rows[static_cast<std::size_t>(j)](x);
  for (int r = 0; r < p; ++r)
    for (int j = 0; j <= q; ++j)
      m[static_cast<std::size_t>(q + r)][static_cast<std::size_t>(r + q - j)] = g.rows[static_cast<std::size_t>(j)](x);
  return determinant(m);
}

UniPoly content_in_x(const Dense& f) {
  UniPoly c;
  for (const auto& r : f.rows) c = gcd(c, r);
  return c;
}

struct PolyEval {
  std::vector<std::pair<std::vector<long>, Cx>> terms;

  explicit PolyEval(const SparsePolynomial& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<long> e;
      for (const auto& x : f.support()[i]) e.push_back(x.convert_to<long>());
      terms.emplace_back(std::move(e), Cx{to_real(f.coefficients()[i]), 0});
    }
  }

  static Cx power(const Cx& z, long e) {
    Cx base = e < 0 ? Cx{1, 0} / z : z;
    Cx r{1, 0};
    for (long k = 0; k < std::labs(e); ++k) r = r * base;
    return r;
  }

  Cx value(const Cx& x, const Cx& y) const {
    Cx s;
    for (const auto& [e, c] : terms) s = s + c * power(x, e[0]) * power(y, e[1]);
    return s;
  }

  // Partial derivatives.
  std::pair<Cx, Cx> gradient(const Cx& x, const Cx& y) const {
    Cx dx, dy;
    for (const auto& [e, c] : terms) {
      if (e[0] != 0) dx = dx + c * Cx{Real(e[0]), 0} * power(x, e[0] - 1) * power(y, e[1]);
      if (e[1] != 0) dy = dy + c * Cx{Real(e[1]), 0} * power(x, e[0]) * power(y, e[1] - 1);
    }
    return {dx, dy};
  }

  Real scale(const Cx& x, const Cx& y) const {
    Real s = 0;
    const Real ax = norm(x), ay = norm(y);
    for (const auto& [e, c] : terms) s += norm(c) * pow(ax, e[0]) * pow(ay, e[1]);
    return s;
  }
};

struct Candidate {
  Cx x, y;
  unsigned multiplicity;
  Real residual;
};

// The numerical phase at a fixed precision; nullopt asks for more bits.
std::optional<std::vector<Candidate>> numeric_phase(const std::vector<std::pair<UniPoly, unsigned>>& factors,
                                                    const SparsePolynomial& f, const SparsePolynomial& g,
                                                    const SparsePolynomial& f_orig, const SparsePolynomial& g_orig,
                                                    unsigned bits, bool* ambiguous) {
  PrecisionScope scope(bits);
  const Dense fd = to_dense(f), gd = to_dense(g);
  const bool use_f = fd.degree_y() > 0;
  const Dense& hd = use_f ? fd : gd;
  const PolyEval fe(f), ge(g), fo(f_orig), go(g_orig);
  const Real filter = pow(Real(2), -static_cast<int>(bits) / 3);
  const Real same = pow(Real(2), -static_cast<int>(bits) / 4);

  std::vector<Candidate> out;
  for (const auto& [factor, mult] : factors) {
    std::vector<Cx> coeffs;
    for (const auto& c : factor.coefficients()) coeffs.push_back(Cx{to_real(c), 0});
    auto xs = aberth(coeffs, bits);
    if (!xs) return std::nullopt;
    for (const auto& x : *xs) {
      // Specialize h(x, y) and drop leading coefficients that vanish at x.
      std::vector<Cx> hy;
      Real biggest = 0;
      for (const auto& row : hd.rows) {
        Cx v;
        for (auto it = row.coefficients().rbegin(); it != row.coefficients().rend(); ++it)
          v = v * x + Cx{to_real(*it), 0};
        biggest = max(biggest, norm(v));
        hy.push_back(v);
      }
      while (!hy.empty() && norm(hy.back()) <= filter * biggest) hy.pop_back();
      if (hy.size() <= 1) continue;
      const auto ys = aberth(hy, bits, true);
      std::vector<Cx> fiber;
      for (Cx y : *ys) {
        const PolyEval& other = use_f ? ge : fe;
        if (norm(other.value(x, y)) > sqrt(filter) * (1 + other.scale(x, y))) continue;
        Cx px = x;
        // Newton on (f, g).
        for (int it = 0; it < 30; ++it) {
          const Cx fv = fe.value(px, y), gv = ge.value(px, y);
          auto [fx, fy] = fe.gradient(px, y);
          auto [gx, gy] = ge.gradient(px, y);
          const Cx det = fx * gy - fy * gx;
          if (norm(det) == 0) break;
          const Cx dx = (fv * gy - fy * gv) / det;
          const Cx dy = (fx * gv - fv * gx) / det;
          px = px - dx;
          y = y - dy;
          if (norm(dx) + norm(dy) <= pow(Real(2), -static_cast<int>(bits) + 16) * (1 + norm(px) + norm(y))) break;
        }
        bool duplicate = false;
        for (const auto& other_y : fiber)
          if (norm(other_y - y) <= same * (1 + norm(y))) duplicate = true;
        if (duplicate) continue;
        fiber.push_back(y);
        const Real residual = max(norm(fo.value(px, y)), norm(go.value(px, y)));
        out.push_back({px, y, mult, residual});
      }
      if (fiber.size() > 1) {
        *ambiguous = true;
        const std::size_t s = fiber.size();
        const unsigned share = std::max<unsigned>(1, mult / static_cast<unsigned>(s));
        unsigned given = 0;
        for (std::size_t k = out.size() - s; k < out.size(); ++k) {
          out[k].multiplicity = share;
          given += share;
        }
        if (given < mult) out[out.size() - s].multiplicity += mult - given;
      }
    }
  }
  return out;
}

}  // namespace

UniPoly resultant_y(const SparsePolynomial& f, const SparsePolynomial& g) {
  if (f.variables() != 2 || g.variables() != 2) throw InputError("resultant_y needs bivariate polynomials");
  const Dense fd = to_dense(f), gd = to_dense(g);
  const int bound = fd.degree_x() * gd.degree_y() + fd.degree_y() * gd.degree_x();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    xs.emplace_back(k);
    ys.push_back(sylvester_at(fd, gd, Rational(k)));
  }
  return UniPoly::interpolate(xs, ys);
}

BivariateResult solve_bivariate(const PolySystem& system, const SolveOptions& options) {
  system.require_square();
  if (system.variables.size() != 2) throw InputError("solve_bivariate needs two equations in two unknowns");
  const SparsePolynomial& f_orig = system.polynomials[0];
  const SparsePolynomial& g_orig = system.polynomials[1];
  if (f_orig.is_zero() || g_orig.is_zero()) throw InputError("solve_bivariate: zero polynomial");
  const SparsePolynomial f = clear_monomial(f_orig), g = clear_monomial(g_orig);

  BivariateResult result;
  const UniPoly common = content_in_x(to_dense(f)).degree() >= 0 && content_in_x(to_dense(g)).degree() >= 0
                             ? gcd(content_in_x(to_dense(f)), content_in_x(to_dense(g)))
                             : UniPoly();
  if (common.split_zero_root().second.degree() > 0)
    throw DegenerateError("non-isolated solutions: the equations share the factor " + common.to_string("x"));
  result.resultant = resultant_y(f, g);
  if (result.resultant.is_zero())
    throw DegenerateError("non-isolated solutions: the resultant vanishes identically (common factor)");
  const UniPoly torus_part = result.resultant.split_zero_root().second;
  const auto factors = squarefree_decomposition(torus_part);

  for (unsigned bits = options.start_bits; bits <= options.max_bits; bits *= 2) {
    bool ambiguous = false;
    auto candidates = numeric_phase(factors, f, g, f_orig, g_orig, bits, &ambiguous);
    if (!candidates) continue;
    PrecisionScope scope(bits);
    for (const auto& c : *candidates) {
      TorusSolution s;
      s.coordinates = {to_complex(c.x, bits), to_complex(c.y, bits)};
      s.multiplicity = c.multiplicity;
      s.residual = c.residual.convert_to<double>();
      if (s.residual >= options.tol) continue;
      if (std::abs(s.coordinates[0]) < options.tol || std::abs(s.coordinates[1]) < options.tol) continue;
      result.solutions.push_back(std::move(s));
    }
    result.precision_bits = bits;
    result.multiplicity_ambiguous = ambiguous;
    std::sort(result.solutions.begin(), result.solutions.end(), [](const TorusSolution& a, const TorusSolution& b) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (a.coordinates[i].real() != b.coordinates[i].real()) return a.coordinates[i].real() < b.coordinates[i].real();
        if (a.coordinates[i].imag() != b.coordinates[i].imag()) return a.coordinates[i].imag() < b.coordinates[i].imag();
      }
      return false;
    });
    return result;
  }
  throw ResourceError("root finding did not converge at " + std::to_string(options.max_bits) + " bits");
}

}  // namespace toric
