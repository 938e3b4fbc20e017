#include "toric/sparse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "toric/errors.hpp"
#include "toric/polyq.hpp"
#include "toric/volume.hpp"

namespace toric {

// --- polynomials -------------------------------------------------------------------

SparsePolynomial::SparsePolynomial(SupportSet support, std::vector<Rational> coefficients)
    : support_(std::move(support)), coefficients_(std::move(coefficients)) {
  if (support_.size() != coefficients_.size()) throw InputError("polynomial: one coefficient per support point");
  for (const auto& c : coefficients_)
    if (c == 0) throw InputError("polynomial: zero coefficient stored");
}

SparsePolynomial SparsePolynomial::from_terms(std::size_t nvars,
                                              const std::vector<std::pair<IntVector, Rational>>& terms) {
  std::vector<IntVector> order;
  std::map<IntVector, Rational> sums;
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw InputError("polynomial term of wrong arity");
    auto [it, fresh] = sums.emplace(e, c);
    if (fresh) order.push_back(e);
    else it->second += c;
  }
  std::vector<IntVector> pts;
  std::vector<Rational> coeffs;
  for (const auto& e : order) {
    const Rational& c = sums[e];
    if (c == 0) continue;
    pts.push_back(e);
    coeffs.push_back(c);
  }
  return SparsePolynomial(SupportSet(nvars, std::move(pts)), std::move(coeffs));
}

Rational SparsePolynomial::operator()(const RatVector& x) const {
  if (x.size() != variables()) throw InputError("polynomial evaluation: wrong number of values");
  Rational total = 0;
  const RatVector values = monomial_map_values(x);
  for (std::size_t i = 0; i < size(); ++i) total += coefficients_[i] * values[i];
  return total;
}

RatVector SparsePolynomial::monomial_map_values(const RatVector& x) const {
  RatVector out;
  for (const auto& a : support_.points()) {
    Rational v = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const long e = a[j].convert_to<long>();
      if (e < 0 && x[j] == 0) throw InputError("polynomial evaluation: zero coordinate with a negative exponent");
      const Rational base = e < 0 ? Rational(1) / x[j] : x[j];
      for (long k = 0; k < std::labs(e); ++k) v *= base;
    }
    out.push_back(v);
  }
  return out;
}

std::complex<double> SparsePolynomial::operator()(const std::vector<std::complex<double>>& x) const {
  if (x.size() != variables()) throw InputError("polynomial evaluation: wrong number of values");
  std::complex<double> total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    std::complex<double> t = to_double(coefficients_[i]);
    for (std::size_t j = 0; j < x.size(); ++j) t *= std::pow(x[j], support_[i][j].convert_to<int>());
    total += t;
  }
  return total;
}

SparsePolynomial SparsePolynomial::shifted(const IntVector& shift) const {
  if (shift.size() != variables()) throw InputError("monomial shift of wrong length");
  std::vector<IntVector> pts;
  for (const auto& a : support_.points()) pts.push_back(add(a, shift));
  return SparsePolynomial(SupportSet(variables(), std::move(pts)), coefficients_);
}

bool SparsePolynomial::equivalent(const SparsePolynomial& o) const {
  if (variables() != o.variables() || size() != o.size()) return false;
  std::map<IntVector, Rational> mine;
  for (std::size_t i = 0; i < size(); ++i) mine.emplace(support_[i], coefficients_[i]);
  for (std::size_t i = 0; i < o.size(); ++i) {
    auto it = mine.find(o.support_[i]);
    if (it == mine.end() || it->second != o.coefficients_[i]) return false;
  }
  return true;
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& variables) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    const Rational& c = coefficients_[i];
    if (i > 0) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::string mono;
    for (std::size_t j = 0; j < this->variables(); ++j) {
      const Integer& e = support_[i][j];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables.empty() ? "x" + std::to_string(j + 1) : variables[j];
      if (e != 1) mono += "^" + toric::to_string(e);
    }
    const Rational a = abs(c);
    if (mono.empty()) s += toric::to_string(a);
    else if (a == 1) s += mono;
    else s += toric::to_string(a) + "*" + mono;
  }
  return s;
}

// --- parser --------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables) : text_(text), vars_(variables) {}

  SparsePolynomial run() {
    std::vector<std::pair<IntVector, Rational>> terms;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      auto [e, c] = term();
      terms.emplace_back(std::move(e), sign * c);
      first = false;
      skip_space();
    }
    return SparsePolynomial::from_terms(vars_.size(), terms);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return Integer(text_.substr(start, pos_ - start));
  }

  Rational number() {
    Integer num = digits();
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      Integer den = digits();
      if (den == 0) throw ParseError("zero denominator", at);
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::size_t variable() {
    std::size_t best = vars_.size(), best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > best_len && text_.compare(pos_, v.size(), v) == 0) {
        best = i;
        best_len = v.size();
      }
    }
    if (best == vars_.size()) {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      throw ParseError("unknown variable '" + text_.substr(pos_, end - pos_) + "'", pos_);
    }
    pos_ += best_len;
    return best;
  }

  std::pair<IntVector, Rational> term() {
    const std::size_t start = pos_;
    IntVector e(vars_.size());
    Rational c = 1;
    bool seen = false;
    bool need_factor = false;
    while (true) {
      skip_space();
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (ident_start(ch)) {
        const std::size_t v = variable();
        skip_space();
        Integer power = 1;
        if (peek() == '^') {
          ++pos_;
          skip_space();
          bool negative = false;
          if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_space();
          }
          power = digits();
          if (negative) power = -power;
        }
        e[v] += power;
      } else {
        if (need_factor) throw ParseError("expected a factor after '*'", pos_);
        break;
      }
      seen = true;
      need_factor = false;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    if (!seen) throw ParseError(pos_ < text_.size() ? std::string("unexpected character '") + peek() + "'"
                                                    : std::string("expected a term"),
                                pos_ < text_.size() ? pos_ : start);
    return {std::move(e), c};
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  for (const auto& v : variables) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("invalid variable name '" + v + "'");
  }
  return Parser(text, variables).run();
}

void PolySystem::require_square() const {
  if (polynomials.size() != variables.size())
    throw InputError("system must have as many polynomials (" + std::to_string(polynomials.size()) +
                     ") as variables (" + std::to_string(variables.size()) + ")");
}

PolySystem parse_system(const std::vector<std::string>& polynomials, const std::vector<std::string>& variables) {
  PolySystem s;
  s.variables = variables;
  for (const auto& text : polynomials) s.polynomials.push_back(parse_polynomial(text, variables));
  return s;
}

// --- bounds --------------------------------------------------------------------------

Polytope newton_polytope(const SparsePolynomial& f) {
  if (f.is_zero()) throw InputError("Newton polytope of the zero polynomial");
  return Polytope::hull(f.support());
}

Integer kushnirenko_bound(const SupportSet& a) {
  if (a.empty()) throw InputError("Kushnirenko bound of an empty support");
  const Rational v = normalized_volume(Polytope::hull(a));
  return numerator(v) / denominator(v);
}

Integer bernstein_bound(const PolySystem& system) {
  system.require_square();
  std::vector<Polytope> ps;
  for (const auto& f : system.polynomials) ps.push_back(newton_polytope(f));
  return mixed_volume(ps).normalized_integer();
}

SparsePolynomial initial_form(const SparsePolynomial& f, const IntVector& w) {
  if (f.is_zero()) return f;
  const SupportSet face = exposed_subset(f.support(), w);
  std::vector<Rational> coeffs;
  for (const auto& a : face.points()) coeffs.push_back(f.coefficients()[*f.support().index_of(a)]);
  return SparsePolynomial(face, std::move(coeffs));
}

std::vector<FacialSystem> facial_systems(const PolySystem& system) {
  system.require_square();
  std::vector<Fan> fans;
  for (const auto& f : system.polynomials) {
    const Polytope p = newton_polytope(f);
    if (!p.is_full_dimensional())
      throw DegenerateError("facial systems need full-dimensional Newton polytopes; " + f.to_string(system.variables) +
                            " has dimension " + std::to_string(p.dim()));
    fans.push_back(normal_fan(p));
  }
  const Fan refinement = common_refinement(fans);
  std::vector<FacialSystem> out;
  for (const auto& cone : refinement.cones()) {
    if (cone.dim() == 0) continue;
    FacialSystem fs{cone.interior_vector(), cone, {}};
    for (const auto& f : system.polynomials) fs.faces.push_back(initial_form(f, fs.w));
    out.push_back(std::move(fs));
  }
  return out;
}

// --- genericity --------------------------------------------------------------------

namespace {

// f restricted to a line parallel to e: x^base * p(x^e); returns p.
UniPoly along_direction(const SparsePolynomial& f, const IntVector& e) {
  Integer ee = dot(e, e);
  const IntVector& a0 = f.support()[0];
  std::vector<Integer> ks;
  Integer kmin = 0;
  for (const auto& a : f.support().points()) {
    Integer k = dot(sub(a, a0), e) / ee;
    ks.push_back(k);
    kmin = std::min(kmin, k);
  }
  Integer kmax = 0;
  for (auto& k : ks) {
    k -= kmin;
    kmax = std::max(kmax, k);
  }
  std::vector<Rational> coeffs(kmax.convert_to<std::size_t>() + 1);
  for (std::size_t i = 0; i < ks.size(); ++i) coeffs[ks[i].convert_to<std::size_t>()] += f.coefficients()[i];
  return UniPoly(std::move(coeffs));
}

Emptiness planar_emptiness(const std::vector<SparsePolynomial>& faces, const IntVector& w) {
  for (const auto& f : faces)
    if (f.is_monomial()) return Emptiness::kEmpty;
  // Both supports lie on lines perpendicular to w.
  const IntVector e = primitive(IntVector{-w[1], w[0]});
  const UniPoly g = gcd(along_direction(faces[0], e), along_direction(faces[1], e));
  return g.degree() > 0 ? Emptiness::kNonempty : Emptiness::kEmpty;
}

// Both normals of every edge of every Newton polygon (both directions of a segment).
std::vector<IntVector> planar_directions(const PolySystem& system) {
  std::vector<IntVector> dirs;
  for (const auto& f : system.polynomials) {
    const Polytope p = newton_polytope(f);
    if (p.dim() == 0) continue;
    const auto& vs = p.vertices();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (p.dim() == 1) edges.emplace_back(0, 1);
    else
      for (const auto& fv : p.facet_vertices()) edges.emplace_back(fv[0], fv[1]);
    for (auto [i, j] : edges) {
      const IntVector d = clear_denominators(sub(vs[j], vs[i]));
      IntVector normal{-d[1], d[0]};
      dirs.push_back(normal);
      dirs.push_back(scaled(normal, Integer(-1)));
    }
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

}  // namespace

GenericityReport genericity_check(const PolySystem& system) {
  system.require_square();
  for (const auto& f : system.polynomials)
    if (f.is_zero()) throw InputError("genericity check: zero polynomial in the system");
  const std::size_t n = system.variables.size();
  GenericityReport report;
  if (n == 1) {
    for (long s : {-1L, 1L}) {
      FacialCheck c{IntVector{Integer(s)}, {}, Emptiness::kEmpty};
      c.faces.push_back(initial_form(system.polynomials[0], c.w));
      if (!c.faces[0].is_monomial()) c.status = Emptiness::kNonempty;
      report.checks.push_back(std::move(c));
    }
  } else if (n == 2) {
    for (const auto& w : planar_directions(system)) {
      FacialCheck c{w, {}, Emptiness::kUndecided};
      for (const auto& f : system.polynomials) c.faces.push_back(initial_form(f, w));
      c.status = planar_emptiness(c.faces, w);
      report.checks.push_back(std::move(c));
    }
    report.note = "directions: both normals of every Newton polygon edge";
  } else {
    bool full = true;
    for (const auto& f : system.polynomials) full = full && newton_polytope(f).is_full_dimensional();
    if (!full) {
      report.note = "lower-dimensional Newton polytope in dimension >= 3; facial systems not enumerated";
      return report;
    }
    for (auto& fs : facial_systems(system)) {
      FacialCheck c{fs.w, fs.faces, Emptiness::kUndecided};
      for (const auto& f : c.faces)
        if (f.is_monomial()) c.status = Emptiness::kEmpty;
      report.checks.push_back(std::move(c));
    }
    report.note = "emptiness of non-monomial facial systems is not decided in dimension >= 3";
  }
  report.verdict = Genericity::kGeneric;
  for (const auto& c : report.checks) {
    if (c.status == Emptiness::kNonempty) {
      report.verdict = Genericity::kDegenerate;
      report.witness = c.w;
      break;
    }
    if (c.status == Emptiness::kUndecided) report.verdict = Genericity::kUndecided;
  }
  return report;
}

std::string to_string(Emptiness e) {
  switch (e) {
    case Emptiness::kEmpty: return "empty";
    case Emptiness::kNonempty: return "nonempty";
    case Emptiness::kUndecided: return "undecided";
  }
  return "";
}

std::string to_string(Genericity g) {
  switch (g) {
    case Genericity::kGeneric: return "GENERIC";
    case Genericity::kDegenerate: return "DEGENERATE";
    case Genericity::kUndecided: return "UNDECIDED";
  }
  return "";
}

}  // namespace toric
