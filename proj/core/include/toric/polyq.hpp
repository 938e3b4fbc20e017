#pragma once

// Polynomials with exact rational coefficients: univariate (Ehrhart and
// Hilbert polynomials, resultants) and multivariate (Minkowski volume).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Univariate polynomial over Q, coefficients stored constant term first,
/// with no stored zero leading coefficient.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
  static UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& c) const;
  bool operator==(const UniPoly& o) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Multiplicity of 0 as a root, and the cofactor.
  std::pair<std::size_t, UniPoly> split_zero_root() const;

  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's squarefree decomposition: pairs (factor, multiplicity) with
/// squarefree, pairwise coprime monic factors.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

/// Multivariate polynomial over Q keyed by exponent vectors.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  std::size_t variables() const noexcept { return nvars_; }
  const std::map<std::vector<unsigned>, Rational>& terms() const noexcept { return terms_; }
  void add_term(const std::vector<unsigned>& exponent, const Rational& c);
  Rational coefficient(const std::vector<unsigned>& exponent) const;
  Rational operator()(const RatVector& x) const;
  /// Largest total degree among the terms, -1 when zero.
  int total_degree() const;
  bool is_homogeneous() const;
  std::string to_string(const std::string& var = "l") const;

 private:
  std::size_t nvars_;
  std::map<std::vector<unsigned>, Rational> terms_;
};

}  // namespace toric
