#pragma once

// Sparse (Laurent) polynomials over Q: parsing, Newton polytopes, the
// Kushnirenko and Bernstein bounds, initial forms, facial systems and the
// genericity check for square systems.

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// sum c_a x^a over a support; every stored coefficient is nonzero.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t nvars = 0) : support_(nvars, {}) {}
  /// Throws InputError on a size mismatch or a zero coefficient.
  SparsePolynomial(SupportSet support, std::vector<Rational> coefficients);
  /// Merges like terms (first-appearance order) and drops terms that cancel.
  static SparsePolynomial from_terms(std::size_t nvars, const std::vector<std::pair<IntVector, Rational>>& terms);

  std::size_t variables() const noexcept { return support_.ambient_dim(); }
  std::size_t size() const noexcept { return coefficients_.size(); }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  bool is_monomial() const noexcept { return coefficients_.size() == 1; }
  const SupportSet& support() const noexcept { return support_; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  /// Throws InputError at a zero coordinate raised to a negative power.
  Rational operator()(const RatVector& x) const;
  std::complex<double> operator()(const std::vector<std::complex<double>>& x) const;

  /// Multiply by x^shift.
  SparsePolynomial shifted(const IntVector& shift) const;

  /// Same terms, order ignored.
  bool equivalent(const SparsePolynomial& o) const;

  std::string to_string(const std::vector<std::string>& variables = {}) const;

 private:
  RatVector monomial_map_values(const RatVector& x) const;

  SupportSet support_;
  std::vector<Rational> coefficients_;
};

/// Grammar: signed sums of terms; a term is an optional integer or rational
/// coefficient times variable powers (`x^3`, `x^-1`), with `*` optional
/// (`2xy^2`). Whitespace is ignored; variable names match greedily.
/// Throws ParseError (with position) on bad syntax or an unknown variable.
SparsePolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

struct PolySystem {
  std::vector<std::string> variables;
  std::vector<SparsePolynomial> polynomials;

  std::size_t size() const noexcept { return polynomials.size(); }
  /// Throws InputError unless there are as many polynomials as variables.
  void require_square() const;
};

PolySystem parse_system(const std::vector<std::string>& polynomials, const std::vector<std::string>& variables);

/// Throws InputError for the zero polynomial.
Polytope newton_polytope(const SparsePolynomial& f);

/// n! Vol(conv A).
Integer kushnirenko_bound(const SupportSet& a);

/// n! MV(Newton polytopes) of a square system.
Integer bernstein_bound(const PolySystem& system);

/// Terms of f whose exponents maximize w.a.
SparsePolynomial initial_form(const SparsePolynomial& f, const IntVector& w);

struct FacialSystem {
  IntVector w;  // primitive, in the relative interior of `cone`
  RationalCone cone;
  std::vector<SparsePolynomial> faces;  // initial forms at w
};

/// One entry per nonzero cone of the common refinement of the normal fans.
/// Throws DegenerateError when a Newton polytope is not full-dimensional.
std::vector<FacialSystem> facial_systems(const PolySystem& system);

enum class Emptiness { kEmpty, kNonempty, kUndecided };
enum class Genericity { kGeneric, kDegenerate, kUndecided };

struct FacialCheck {
  IntVector w;
  std::vector<SparsePolynomial> faces;
  Emptiness status = Emptiness::kUndecided;
};

struct GenericityReport {
  Genericity verdict = Genericity::kUndecided;
  std::optional<IntVector> witness;  // a w whose facial system has torus solutions
  std::vector<FacialCheck> checks;
  std::string note;
};

/// Decides, for n <= 2, whether every facial system (w != 0) is empty in the
/// torus. For n >= 3 only monomial facial systems are decided.
GenericityReport genericity_check(const PolySystem& system);

std::string to_string(Emptiness e);
std::string to_string(Genericity g);

}  // namespace toric
