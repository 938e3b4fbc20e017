#pragma once

// Toric ideals I_A as binomial ideals: membership, primitive factorization,
// reduced Gröbner bases via binomial Buchberger plus saturation, Hilbert
// functions/polynomials, and the semigroup shift vectors v, v'.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/arith.hpp"
#include "toric/lattice.hpp"
#include "toric/polyq.hpp"

namespace toric {

/// A term order on monomials in m variables.
///
/// variable_order lists variable indices from largest to smallest; empty
/// means the identity (variable 0 largest). Weighted orders compare w.e first
/// and fall back to `tie`. kRevlex is only a term order under a positive
/// weight and is meant for use as a tie-breaker.
class TermOrder {
 public:
  enum class Kind { kDegrevlex, kLex, kRevlex, kWeighted };

  static TermOrder degrevlex(std::vector<std::size_t> variable_order = {});
  static TermOrder lex(std::vector<std::size_t> variable_order = {});
  static TermOrder revlex(std::vector<std::size_t> variable_order = {});
  static TermOrder weighted(IntVector weight, const TermOrder& tie);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& variable_order() const noexcept { return order_; }
  const IntVector& weight() const noexcept { return weight_; }
  const TermOrder* tie() const noexcept { return tie_.get(); }

  /// Negative, zero or positive as z^a is smaller, equal or larger than z^b.
  int compare(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;
  int compare(const IntVector& a, const IntVector& b) const;

  /// Throws InputError when the order does not fit m variables.
  void validate(std::size_t m) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::kDegrevlex;
  std::vector<std::size_t> order_;
  IntVector weight_;
  std::shared_ptr<const TermOrder> tie_;
};

/// z^{u+} - z^{u-}; the zero vector encodes 0. In a Gröbner basis the leading
/// term is z^{u+}.
struct Binomial {
  IntVector u;

  IntVector plus() const;
  IntVector minus() const;
  bool is_zero() const { return toric::is_zero(u); }
  bool operator==(const Binomial&) const = default;
  bool operator<(const Binomial& o) const { return u < o.u; }

  /// "z1^2*z3 - z2" with the given variable names (defaults z1..zm).
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

/// Variable names z_(a) built from support points, e.g. "z_(3,0)".
std::vector<std::string> support_variable_names(const SupportSet& a);

struct GroebnerBasis {
  std::vector<Binomial> generators;  // sorted by leading exponent, ascending under `order`
  TermOrder order;
  bool reduced = false;
};

struct GroebnerOptions {
  enum class Saturation { kAuto, kPerVariable, kElimination };
  std::size_t spair_budget = 200000;  // ResourceError once exceeded
  Saturation saturation = Saturation::kAuto;
};

/// True iff A u = A v (z^u - z^v in I_A); u, v must be nonnegative.
bool binomial_membership(const IntVector& u, const IntVector& v, const SupportSet& a);

struct PrimitiveFactorization {
  IntVector r;        // min(u, v)
  IntVector w_plus;   // max(u - v, 0)
  IntVector w_minus;  // max(v - u, 0)
};
PrimitiveFactorization factor_primitive(const IntVector& u, const IntVector& v);

/// Reduced Gröbner basis of I_A.
GroebnerBasis toric_groebner(const SupportSet& a, const TermOrder& order, const GroebnerOptions& options = {});

/// Reduced Gröbner basis of the saturation (I_L : (z_1...z_m)^inf) of the
/// lattice ideal spanned by `lattice_generators` in Z^m.
GroebnerBasis saturated_lattice_groebner(std::size_t m, const std::vector<IntVector>& lattice_generators,
                                         const TermOrder& order, const GroebnerOptions& options = {});

/// Reduced Gröbner basis of the ideal generated by the given binomials (no saturation).
GroebnerBasis binomial_groebner(std::size_t m, const std::vector<Binomial>& generators, const TermOrder& order,
                                const GroebnerOptions& options = {});

/// Normal form of z^{u+} - z^{u-} modulo a Gröbner basis (as a difference vector;
/// zero iff the binomial reduces to 0).
Binomial normal_form(const Binomial& b, const GroebnerBasis& gb);

/// Every S-pair of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);
/// No term of any generator is divisible by the leading term of another.
bool is_reduced(const GroebnerBasis& gb);

/// A positive grading: integer weights c_j >= 1 with c.u = 0 for every lattice generator u.
std::optional<IntVector> positive_grading(std::size_t m, const std::vector<IntVector>& lattice_generators);

bool is_homogeneous(const SupportSet& a);

struct CoincidentCombination {
  RatVector point;
  std::vector<std::pair<std::size_t, Rational>> lambda;  // over supp(u)
  std::vector<std::pair<std::size_t, Rational>> mu;      // over supp(v)
};
/// For a homogeneous A and z^u - z^v in I_A: lambda = u/d, mu = v/d with
/// d = |u| = |v|, and the common point sum lambda_a a = sum mu_a a.
CoincidentCombination coincident_combination(const IntVector& u, const IntVector& v, const SupportSet& a);
CoincidentCombination coincident_combination(const Binomial& b, const SupportSet& a);
/// The same for a binomial of I_{A+}, reported in the coordinates of A.
CoincidentCombination coincident_combination_on_lift(const Binomial& b, const SupportSet& a);

/// |dA|, the number of distinct d-fold sums (1 for d = 0).
Integer hilbert_function(const SupportSet& a, unsigned d);
/// |0A|, |1A|, ..., |dA|.
std::vector<Integer> hilbert_function_values(const SupportSet& a, unsigned max_d);
UniPoly hilbert_polynomial(const SupportSet& a);

struct GapData {
  std::vector<IntVector> b_set;  // lattice points of the half-open zonotope of A+
  std::vector<IntVector> beta;   // beta[i]: integer coefficients with sum beta_a (1,a) = b_set[i]
  Integer nu;
  IntVector v;
  IntVector v_prime;
  unsigned verified_levels = 0;  // v' + S_A ⊂ N A+ checked for levels 0..verified_levels
  bool verified = false;
};
/// Throws DegenerateError for an empty support.
GapData semigroup_gap_data(const SupportSet& a);

/// (x^a | a in A); throws InputError on 0 raised to a negative power.
RatVector monomial_map_eval(const SupportSet& a, const RatVector& x);
std::vector<std::complex<double>> monomial_map_eval(const SupportSet& a, const std::vector<std::complex<double>>& x);
/// sum a |z_a| / sum |z_a|; throws InputError for z = 0.
RatVector moment_map_eval(const SupportSet& a, const RatVector& z);
std::vector<double> moment_map_eval(const SupportSet& a, const std::vector<std::complex<double>>& z);

}  // namespace toric
