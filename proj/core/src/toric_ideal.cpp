#include "toric/toric_ideal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "toric/errors.hpp"
#include "toric/linear_program.hpp"
#include "toric/polytope.hpp"

namespace toric {

// --- term orders ------------------------------------------------------------

TermOrder TermOrder::degrevlex(std::vector<std::size_t> variable_order) {
  TermOrder t;
  t.kind_ = Kind::kDegrevlex;
  t.order_ = std::move(variable_order);
  return t;
}

TermOrder TermOrder::lex(std::vector<std::size_t> variable_order) {
  TermOrder t;
  t.kind_ = Kind::kLex;
  t.order_ = std::move(variable_order);
  return t;
}

TermOrder TermOrder::revlex(std::vector<std::size_t> variable_order) {
  TermOrder t;
  t.kind_ = Kind::kRevlex;
  t.order_ = std::move(variable_order);
  return t;
}

TermOrder TermOrder::weighted(IntVector weight, const TermOrder& tie) {
  TermOrder t;
  t.kind_ = Kind::kWeighted;
  t.weight_ = std::move(weight);
  t.tie_ = std::make_shared<const TermOrder>(tie);
  return t;
}

namespace {

template <class V>
int compare_impl(const TermOrder& t, const V& a, const V& b) {
  const std::size_t m = a.size();
  const auto& ord = t.variable_order();
  auto var = [&](std::size_t k) { return ord.empty() ? k : ord[k]; };
  switch (t.kind()) {
    case TermOrder::Kind::kWeighted: {
      Integer wa = 0, wb = 0;
      for (std::size_t i = 0; i < m; ++i) {
        wa += t.weight()[i] * a[i];
        wb += t.weight()[i] * b[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return compare_impl(*t.tie(), a, b);
    }
    case TermOrder::Kind::kDegrevlex: {
      typename V::value_type da = 0, db = 0;
      for (std::size_t i = 0; i < m; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      [[fallthrough]];
    }
    case TermOrder::Kind::kRevlex:
      for (std::size_t k = m; k-- > 0;) {
        const std::size_t v = var(k);
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
      }
      return 0;
    case TermOrder::Kind::kLex:
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t v = var(k);
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
      return 0;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
  return compare_impl(*this, a, b);
}

int TermOrder::compare(const IntVector& a, const IntVector& b) const { return compare_impl(*this, a, b); }

void TermOrder::validate(std::size_t m) const {
  if (!order_.empty()) {
    if (order_.size() != m) throw InputError("term order: variable order must list all " + std::to_string(m) + " variables");
    std::vector<std::size_t> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < m; ++i)
      if (sorted[i] != i) throw InputError("term order: variable order is not a permutation");
  }
  if (kind_ == Kind::kWeighted) {
    if (weight_.size() != m) throw InputError("term order: weight vector has wrong length");
    for (const auto& w : weight_)
      if (w < 0) throw InputError("term order: weights must be nonnegative");
    tie_->validate(m);
  }
}

std::string TermOrder::describe() const {
  std::string s;
  switch (kind_) {
    case Kind::kDegrevlex: s = "degrevlex"; break;
    case Kind::kLex: s = "lex"; break;
    case Kind::kRevlex: s = "revlex"; break;
    case Kind::kWeighted: return "weighted(" + to_string(weight_) + "; " + tie_->describe() + ")";
  }
  if (!order_.empty()) {
    std::vector<Integer> o(order_.begin(), order_.end());
    s += to_string(o);
  }
  return s;
}

// --- binomials ----------------------------------------------------------------

IntVector Binomial::plus() const {
  IntVector p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) p[i] = u[i] > 0 ? u[i] : Integer(0);
  return p;
}

IntVector Binomial::minus() const {
  IntVector p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) p[i] = u[i] < 0 ? Integer(-u[i]) : Integer(0);
  return p;
}

namespace {

std::string monomial_string(const IntVector& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.empty() ? "z" + std::to_string(i + 1) : names[i];
    if (e[i] != 1) s += "^" + toric::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string Binomial::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  if (!names.empty() && names.size() != u.size()) throw InputError("binomial: wrong number of variable names");
  return monomial_string(plus(), names) + " - " + monomial_string(minus(), names);
}

std::vector<std::string> support_variable_names(const SupportSet& a) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i)
    names.push_back(!a.labels().empty() && !a.labels()[i].empty() ? a.labels()[i] : "z_" + to_string(a[i]));
  return names;
}

// --- binomial Buchberger --------------------------------------------------------

namespace {

using Exp = std::vector<std::int64_t>;

struct Bin {
  Exp lead, tail;
};

constexpr std::int64_t kExponentLimit = std::int64_t{1} << 40;

Exp to_exp(const IntVector& v) {
  Exp e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (abs(v[i]) >= kExponentLimit) throw ResourceError("exponent too large for the binomial engine");
    e[i] = v[i].convert_to<std::int64_t>();
  }
  return e;
}

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

// m - d + t, the rewrite of z^m by the rule z^d -> z^t.
Exp rewrite(const Exp& m, const Exp& d, const Exp& t) {
  Exp r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i] + t[i];
  return r;
}

class BinomialEngine {
 public:
  BinomialEngine(std::size_t m, const TermOrder& order, std::size_t budget, std::size_t* used)
      : m_(m), order_(order), budget_(budget), used_(used) {}

  // False when the two terms coincide (the binomial is zero).
  bool orient(Bin& b) const {
    int c = order_.compare(b.lead, b.tail);
    if (c == 0) return false;
    if (c < 0) std::swap(b.lead, b.tail);
    return true;
  }

  const Bin* find_divisor(const Exp& e, const std::vector<Bin>& basis) const {
    for (const auto& g : basis)
      if (divides(g.lead, e)) return &g;
    return nullptr;
  }

  // Top-reduce until the leading term is irreducible; false when it vanishes.
  bool top_reduce(Bin& b, const std::vector<Bin>& basis) const {
    if (!orient(b)) return false;
    while (const Bin* g = find_divisor(b.lead, basis)) {
      b.lead = rewrite(b.lead, g->lead, g->tail);
      if (!orient(b)) return false;
    }
    return true;
  }

  void tail_reduce(Bin& b, const std::vector<Bin>& basis) const {
    while (const Bin* g = find_divisor(b.tail, basis)) b.tail = rewrite(b.tail, g->lead, g->tail);
  }

  Bin spair(const Bin& f, const Bin& g) const {
    Exp l = lcm(f.lead, g.lead);
    return {rewrite(l, f.lead, f.tail), rewrite(l, g.lead, g.tail)};
  }

  std::vector<Bin> run(const std::vector<Bin>& input) {
    std::vector<Bin> basis;
    // Pending pairs (i, j), i < j.
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add = [&](Bin b) {
      const std::size_t k = basis.size();
      basis.push_back(std::move(b));
      for (std::size_t i = 0; i < k; ++i) pending.emplace(i, k);
    };
    for (Bin b : input)
      if (top_reduce(b, basis)) add(std::move(b));

    while (!pending.empty()) {
      // Normal strategy: smallest lcm first.
      auto best = pending.begin();
      Exp best_lcm = lcm(basis[best->first].lead, basis[best->second].lead);
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        Exp l = lcm(basis[it->first].lead, basis[it->second].lead);
        if (order_.compare(l, best_lcm) < 0) {
          best = it;
          best_lcm = std::move(l);
        }
      }
      auto [i, j] = *best;
      pending.erase(best);
      const Bin& f = basis[i];
      const Bin& g = basis[j];
      if (coprime(f.lead, g.lead)) continue;
      if (chain_criterion(i, j, best_lcm, basis, pending)) continue;
      if (++*used_ > budget_)
        throw ResourceError("Gröbner basis S-pair budget of " + std::to_string(budget_) + " exhausted");
      Bin s = spair(f, g);
      if (top_reduce(s, basis)) add(std::move(s));
    }
    return basis;
  }

  // Minimal, tail-reduced basis sorted by leading term (ascending).
  std::vector<Bin> reduce_basis(std::vector<Bin> basis) const {
    std::vector<Bin> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j || !divides(basis[j].lead, basis[i].lead)) continue;
        // Equal leads: keep the first copy.
        redundant = basis[j].lead != basis[i].lead || j < i;
      }
      if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Bin> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      tail_reduce(minimal[i], others);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Bin& a, const Bin& b) { return order_.compare(a.lead, b.lead) < 0; });
    return minimal;
  }

 private:
  static bool chain_criterion(std::size_t i, std::size_t j, const Exp& l, const std::vector<Bin>& basis,
                              const std::set<std::pair<std::size_t, std::size_t>>& pending) {
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j || !divides(basis[k].lead, l)) continue;
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) return true;
    }
    return false;
  }

  std::size_t m_;
  const TermOrder& order_;
  std::size_t budget_;
  std::size_t* used_;
};

Bin from_difference(const IntVector& u) {
  Binomial b{u};
  return {to_exp(b.plus()), to_exp(b.minus())};
}

GroebnerBasis package(const std::vector<Bin>& basis, const TermOrder& order) {
  GroebnerBasis gb;
  gb.order = order;
  gb.reduced = true;
  for (const auto& b : basis) {
    IntVector u(b.lead.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = Integer(b.lead[i]) - Integer(b.tail[i]);
    gb.generators.push_back(Binomial{std::move(u)});
  }
  return gb;
}

std::vector<Bin> groebner_bins(std::size_t m, const std::vector<Bin>& input, const TermOrder& order,
                               std::size_t budget, std::size_t* used) {
  BinomialEngine engine(m, order, budget, used);
  return engine.reduce_basis(engine.run(input));
}

std::vector<std::size_t> order_with_last(std::size_t m, std::size_t last) {
  std::vector<std::size_t> ord;
  for (std::size_t k = 0; k < m; ++k)
    if (k != last) ord.push_back(k);
  ord.push_back(last);
  return ord;
}

// I_L : z_i^inf for each i in turn, using graded reverse lexicographic orders
// in which z_i is cheapest (z_i divides a homogeneous binomial iff it divides
// its leading term).
std::vector<Bin> saturate_per_variable(std::size_t m, std::vector<Bin> current, const IntVector& grading,
                                       std::size_t budget, std::size_t* used) {
  for (std::size_t i = 0; i < m; ++i) {
    TermOrder ord = TermOrder::weighted(grading, TermOrder::revlex(order_with_last(m, i)));
    current = groebner_bins(m, current, ord, budget, used);
    for (auto& b : current) {
      std::int64_t k = std::min(b.lead[i], b.tail[i]);
      b.lead[i] -= k;
      b.tail[i] -= k;
    }
  }
  return current;
}

// (I_L + <t z_1...z_m - 1>) ∩ k[z].
std::vector<Bin> saturate_by_elimination(std::size_t m, const std::vector<Bin>& current, std::size_t budget,
                                         std::size_t* used) {
  std::vector<Bin> lifted;
  for (const auto& b : current) {
    Bin c = b;
    c.lead.push_back(0);
    c.tail.push_back(0);
    lifted.push_back(std::move(c));
  }
  lifted.push_back({Exp(m + 1, 1), Exp(m + 1, 0)});
  IntVector et(m + 1);
  et[m] = 1;
  TermOrder ord = TermOrder::weighted(et, TermOrder::degrevlex());
  std::vector<Bin> out;
  for (auto& b : groebner_bins(m + 1, lifted, ord, budget, used)) {
    if (b.lead[m] != 0 || b.tail[m] != 0) continue;
    b.lead.pop_back();
    b.tail.pop_back();
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

GroebnerBasis binomial_groebner(std::size_t m, const std::vector<Binomial>& generators, const TermOrder& order,
                                const GroebnerOptions& options) {
  order.validate(m);
  std::vector<Bin> input;
  for (const auto& g : generators) {
    if (g.u.size() != m) throw InputError("binomial of wrong length");
    input.push_back(from_difference(g.u));
  }
  std::size_t used = 0;
  return package(groebner_bins(m, input, order, options.spair_budget, &used), order);
}

std::optional<IntVector> positive_grading(std::size_t m, const std::vector<IntVector>& lattice_generators) {
  bool standard = true;
  for (const auto& u : lattice_generators) {
    Integer s = 0;
    for (const auto& x : u) s += x;
    if (s != 0) standard = false;
  }
  if (standard) return IntVector(m, Integer(1));
  // Find y with u.y = 0 and y_j - s_j = 1, s >= 0.
  std::vector<RatVector> rows;
  RatVector rhs;
  for (const auto& u : lattice_generators) {
    RatVector row(2 * m);
    for (std::size_t j = 0; j < m; ++j) row[j] = u[j];
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    RatVector row(2 * m);
    row[j] = 1;
    row[m + j] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  std::vector<bool> nonneg(2 * m, false);
  for (std::size_t j = m; j < 2 * m; ++j) nonneg[j] = true;
  auto r = maximize_mixed(rows, rhs, RatVector(2 * m), nonneg);
  if (r.status != LpResult::Status::kOptimal) return std::nullopt;
  return clear_denominators(RatVector(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(m)));
}

GroebnerBasis saturated_lattice_groebner(std::size_t m, const std::vector<IntVector>& lattice_generators,
                                         const TermOrder& order, const GroebnerOptions& options) {
  order.validate(m);
  std::vector<Bin> current;
  for (const auto& u : lattice_generators) {
    if (u.size() != m) throw InputError("lattice generator of wrong length");
    if (!is_zero(u)) current.push_back(from_difference(u));
  }
  std::size_t used = 0;
  if (!current.empty()) {
    auto grading = positive_grading(m, lattice_generators);
    auto mode = options.saturation;
    if (mode == GroebnerOptions::Saturation::kAuto)
      mode = grading ? GroebnerOptions::Saturation::kPerVariable : GroebnerOptions::Saturation::kElimination;
    if (mode == GroebnerOptions::Saturation::kPerVariable) {
      if (!grading) throw DegenerateError("per-variable saturation needs a positive grading");
      current = saturate_per_variable(m, std::move(current), *grading, options.spair_budget, &used);
    } else {
      current = saturate_by_elimination(m, current, options.spair_budget, &used);
    }
  }
  return package(groebner_bins(m, current, order, options.spair_budget, &used), order);
}

GroebnerBasis toric_groebner(const SupportSet& a, const TermOrder& order, const GroebnerOptions& options) {
  return saturated_lattice_groebner(a.size(), kernel_basis(a), order, options);
}

namespace {

std::vector<Bin> to_bins(const GroebnerBasis& gb) {
  std::vector<Bin> out;
  for (const auto& g : gb.generators) out.push_back(from_difference(g.u));
  return out;
}

}  // namespace

Binomial normal_form(const Binomial& b, const GroebnerBasis& gb) {
  const std::size_t m = b.u.size();
  std::size_t used = 0;
  BinomialEngine engine(m, gb.order, 0, &used);
  auto basis = to_bins(gb);
  Bin x = from_difference(b.u);
  if (!engine.top_reduce(x, basis)) return Binomial{IntVector(m)};
  engine.tail_reduce(x, basis);
  IntVector u(m);
  for (std::size_t i = 0; i < m; ++i) u[i] = Integer(x.lead[i]) - Integer(x.tail[i]);
  return Binomial{std::move(u)};
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  if (gb.generators.empty()) return true;
  const std::size_t m = gb.generators.front().u.size();
  std::size_t used = 0;
  BinomialEngine engine(m, gb.order, 0, &used);
  auto basis = to_bins(gb);
  for (auto& b : basis)
    if (!engine.orient(b)) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Bin s = engine.spair(basis[i], basis[j]);
      if (engine.top_reduce(s, basis)) return false;
    }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  auto basis = to_bins(gb);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (gb.order.compare(basis[i].lead, basis[i].tail) <= 0) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (divides(basis[j].lead, basis[i].lead) || divides(basis[j].lead, basis[i].tail)) return false;
    }
  }
  return true;
}

// --- membership, primitive factorization, homogeneity ---------------------------

namespace {

void require_nonnegative(const IntVector& u, const char* what) {
  for (const auto& x : u)
    if (x < 0) throw InputError(std::string(what) + " has a negative entry");
}

IntVector apply(const SupportSet& a, const IntVector& u) {
  if (u.size() != a.size()) throw InputError("exponent vector length differs from the support size");
  IntVector out(a.ambient_dim());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) out[i] += u[j] * a[j][i];
  return out;
}

}  // namespace

bool binomial_membership(const IntVector& u, const IntVector& v, const SupportSet& a) {
  require_nonnegative(u, "u");
  require_nonnegative(v, "v");
  return apply(a, u) == apply(a, v);
}

PrimitiveFactorization factor_primitive(const IntVector& u, const IntVector& v) {
  require_nonnegative(u, "u");
  require_nonnegative(v, "v");
  if (u.size() != v.size()) throw InputError("factor_primitive: length mismatch");
  PrimitiveFactorization f;
  for (std::size_t i = 0; i < u.size(); ++i) {
    f.r.push_back(std::min(u[i], v[i]));
    f.w_plus.push_back(std::max(Integer(u[i] - v[i]), Integer(0)));
    f.w_minus.push_back(std::max(Integer(v[i] - u[i]), Integer(0)));
  }
  return f;
}

bool is_homogeneous(const SupportSet& a) { return affine_hyperplane_witness(a).has_value(); }

CoincidentCombination coincident_combination(const IntVector& u, const IntVector& v, const SupportSet& a) {
  if (!is_homogeneous(a)) throw InputError("coincident combination needs a support on an affine hyperplane");
  if (!binomial_membership(u, v, a)) throw InputError("coincident combination: binomial is not in the toric ideal");
  Integer du = 0, dv = 0;
  for (const auto& x : u) du += x;
  for (const auto& x : v) dv += x;
  if (du != dv || du == 0) throw InputError("coincident combination: binomial is not homogeneous of positive degree");
  CoincidentCombination c;
  c.point = RatVector(a.ambient_dim());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (u[j] != 0) {
      Rational l(u[j], du);
      c.lambda.emplace_back(j, l);
      c.point = add(c.point, scaled(to_rational(a[j]), l));
    }
    if (v[j] != 0) c.mu.emplace_back(j, Rational(v[j], dv));
  }
  return c;
}

CoincidentCombination coincident_combination(const Binomial& b, const SupportSet& a) {
  return coincident_combination(b.plus(), b.minus(), a);
}

CoincidentCombination coincident_combination_on_lift(const Binomial& b, const SupportSet& a) {
  auto c = coincident_combination(b, lift(a));
  c.point.erase(c.point.begin());
  return c;
}

// --- Hilbert functions ----------------------------------------------------------

namespace {

using Small = std::vector<long>;

std::vector<Small> small_points(const SupportSet& a) {
  std::vector<Small> pts;
  for (const auto& p : a.points()) {
    Small s;
    for (const auto& x : p) {
      if (abs(x) > 1000000) throw ResourceError("support coordinates too large for sumset enumeration");
      s.push_back(x.convert_to<long>());
    }
    pts.push_back(std::move(s));
  }
  return pts;
}

// The d-fold sumset dA as a dense grid over the box [d lo, d hi].
class SumsetLevel {
 public:
  SumsetLevel(Small lo, Small hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      const auto w = static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
      if (w != 0 && cells > kMaxCells / w) throw ResourceError("sumset enumeration exceeds the memory budget");
      cells *= w;
    }
    bits_.assign(cells, 0);
  }

  std::size_t size() const noexcept { return size_; }
  bool count(const Small& x) const {
    const auto i = index(x);
    return i && bits_[*i];
  }
  void insert(const Small& x) {
    auto& b = bits_[*index(x)];
    size_ += b == 0;
    b = 1;
  }
  // Visit every member.
  template <class F>
  void each(F f) const {
    Small x = lo_;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) f(x);
      for (std::size_t k = 0; k < x.size() && ++x[k] > hi_[k]; ++k) x[k] = lo_[k];
    }
  }

 private:
  static constexpr std::size_t kMaxCells = std::size_t{1} << 30;

  std::optional<std::size_t> index(const Small& x) const {
    std::size_t i = 0, stride = 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < lo_[k] || x[k] > hi_[k]) return std::nullopt;
      i += static_cast<std::size_t>(x[k] - lo_[k]) * stride;
      stride *= static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    }
    return i;
  }

  Small lo_, hi_;
  std::vector<char> bits_;
  std::size_t size_ = 0;
};

// Calls visit(d, dA) for d = 0..max_d with one level in memory; stops early
// when visit returns false.
template <class Visit>
void for_each_sumset(const SupportSet& a, unsigned max_d, Visit visit) {
  const auto pts = small_points(a);
  const std::size_t n = a.ambient_dim();
  Small lo(n, 0), hi(n, 0);
  if (!pts.empty())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = hi[i] = pts[0][i];
      for (const auto& p : pts) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    }
  auto box = [&](long d, const Small& v) {
    Small out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d * v[i];
    return out;
  };
  SumsetLevel level(Small(n, 0), Small(n, 0));
  level.insert(Small(n, 0));
  for (unsigned d = 0;; ++d) {
    if (!visit(d, level) || d == max_d) return;
    SumsetLevel next(box(d + 1, lo), box(d + 1, hi));
    level.each([&](const Small& s) {
      Small t(n);
      for (const auto& p : pts) {
        for (std::size_t i = 0; i < n; ++i) t[i] = s[i] + p[i];
        next.insert(t);
      }
    });
    level = std::move(next);
  }
}

// b_set, beta, nu, v and v' without the inclusion check.
GapData gap_expressions(const SupportSet& a);

}  // namespace

std::vector<Integer> hilbert_function_values(const SupportSet& a, unsigned max_d) {
  std::vector<Integer> out;
  for_each_sumset(a, max_d, [&](unsigned, const SumsetLevel& level) {
    out.emplace_back(level.size());
    return true;
  });
  return out;
}

Integer hilbert_function(const SupportSet& a, unsigned d) { return hilbert_function_values(a, d).back(); }

UniPoly hilbert_polynomial(const SupportSet& a) {
  if (a.empty()) throw InputError("Hilbert polynomial of an empty support");
  const SupportSet lifted = lift(a);
  const auto r = static_cast<unsigned>(lattice_basis(lifted.points(), lifted.ambient_dim()).size() - 1);
  std::vector<Integer> values;
  auto value = [&](unsigned d) -> Rational {
    if (d >= values.size()) values = hilbert_function_values(a, std::max<unsigned>(d, 2 * static_cast<unsigned>(values.size())));
    return Rational(values[d]);
  };
  // A window of r+1 values starting at d0 is accepted once its interpolant
  // predicts the next three values.
  auto try_window = [&](unsigned d0) -> std::optional<UniPoly> {
    std::vector<Rational> xs, ys;
    for (unsigned d = d0; d <= d0 + r; ++d) {
      xs.emplace_back(d);
      ys.push_back(value(d));
    }
    UniPoly p = UniPoly::interpolate(xs, ys);
    for (unsigned d = d0 + r + 1; d <= d0 + r + 3; ++d)
      if (p(Rational(d)) != value(d)) return std::nullopt;
    return p;
  };
  const unsigned quick = r + 5;
  for (unsigned d0 = 0; d0 <= quick; ++d0)
    if (auto p = try_window(d0)) return *p;
  // The shift vector bounds the level past which HF is polynomial.
  const GapData gap = gap_expressions(a);
  const unsigned cap = gap.nu.convert_to<unsigned>() * static_cast<unsigned>(a.size()) + r + 5;
  const unsigned extended = 2 * cap + 10;
  for (unsigned d0 = quick + 1; d0 <= extended; ++d0)
    if (auto p = try_window(d0)) return *p;
  throw ResourceError("Hilbert polynomial not detected up to level " + std::to_string(extended));
}

// --- semigroup gap data -----------------------------------------------------------

namespace {

// Integer solutions of sum beta_j p_j = b: a particular solution plus a kernel basis.
struct IntegerSolver {
  std::vector<IntVector> basis;   // nonzero Hermite rows
  std::vector<IntVector> coeffs;  // basis[i] = sum coeffs[i][j] p_j
  std::vector<IntVector> kernel;

  explicit IntegerSolver(const std::vector<IntVector>& points) {
    auto [h, u] = hermite_form(IntMatrix::from_rows(points, points.front().size()));
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (is_zero(h.row(i))) kernel.push_back(u.row(i));
      else {
        basis.push_back(h.row(i));
        coeffs.push_back(u.row(i));
      }
    }
  }

  std::optional<IntVector> particular(const IntVector& b) const {
    auto y = lattice_coordinates(basis, b);
    if (!y) return std::nullopt;
    IntVector beta(coeffs.empty() ? 0 : coeffs.front().size());
    if (beta.empty() && !kernel.empty()) beta.resize(kernel.front().size());
    for (std::size_t i = 0; i < y->size(); ++i) beta = add(beta, scaled(coeffs[i], (*y)[i]));
    return beta;
  }
};

Integer linf(const IntVector& v) {
  Integer m = 0;
  for (const auto& x : v) m = std::max(m, Integer(abs(x)));
  return m;
}

Integer l1(const IntVector& v) {
  Integer m = 0;
  for (const auto& x : v) m += abs(x);
  return m;
}

// Optimize c_k (or t when k == q) over {(c, t) : -t <= beta0 + cK <= t}, optionally with t fixed.
LpResult linf_lp(const IntVector& beta0, const std::vector<IntVector>& kernel, std::optional<Integer> fixed_t,
                 std::size_t objective_index, bool minimize) {
  const std::size_t m = beta0.size(), q = kernel.size();
  // Variables: c (q, free), t (>= 0), slacks (2m, >= 0).
  const std::size_t vars = q + 1 + 2 * m;
  std::vector<RatVector> rows;
  RatVector rhs;
  for (std::size_t j = 0; j < m; ++j) {
    RatVector up(vars), down(vars);
    for (std::size_t k = 0; k < q; ++k) {
      up[k] = kernel[k][j];
      down[k] = -kernel[k][j];
    }
    up[q] = -1;
    down[q] = -1;
    up[q + 1 + 2 * j] = 1;
    down[q + 2 + 2 * j] = 1;
    rows.push_back(std::move(up));
    rhs.push_back(-beta0[j]);
    rows.push_back(std::move(down));
    rhs.push_back(beta0[j]);
  }
  if (fixed_t) {
    RatVector row(vars);
    row[q] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(*fixed_t);
  }
  RatVector c(vars);
  c[objective_index] = minimize ? -1 : 1;
  std::vector<bool> nonneg(vars, true);
  for (std::size_t k = 0; k < q; ++k) nonneg[k] = false;
  return maximize_mixed(rows, rhs, c, nonneg);
}

// Minimal l_inf integer point of beta0 + ZK; ties broken by l_1, then lexicographically.
IntVector minimal_expression(const IntVector& beta0, const std::vector<IntVector>& kernel) {
  if (kernel.empty()) return beta0;
  const std::size_t q = kernel.size();
  auto relax = linf_lp(beta0, kernel, std::nullopt, q, true);
  if (relax.status != LpResult::Status::kOptimal) throw Error("gap data: l_inf relaxation failed");
  Integer t = ceil(-relax.value);
  for (;; ++t) {
    IntVector lo(q), hi(q);
    bool feasible = true;
    for (std::size_t k = 0; k < q && feasible; ++k) {
      auto mn = linf_lp(beta0, kernel, t, k, true);
      auto mx = linf_lp(beta0, kernel, t, k, false);
      if (mn.status != LpResult::Status::kOptimal || mx.status != LpResult::Status::kOptimal) {
        feasible = false;
        break;
      }
      lo[k] = ceil(-mn.value);
      hi[k] = floor(mx.value);
      if (lo[k] > hi[k]) feasible = false;
    }
    if (!feasible) continue;
    std::optional<IntVector> best;
    IntVector c = lo;
    while (true) {
      IntVector beta = beta0;
      for (std::size_t k = 0; k < q; ++k) beta = add(beta, scaled(kernel[k], c[k]));
      if (linf(beta) <= t) {
        if (!best || l1(beta) < l1(*best) || (l1(beta) == l1(*best) && beta < *best)) best = beta;
      }
      std::size_t k = 0;
      while (k < q && c[k] == hi[k]) {
        c[k] = lo[k];
        ++k;
      }
      if (k == q) break;
      ++c[k];
    }
    if (best) return *best;
  }
}

GapData gap_expressions(const SupportSet& a) {
  const SupportSet lifted = lift(a);
  const std::size_t dim = lifted.ambient_dim();
  const auto& gens = lifted.points();
  const auto lattice = lattice_basis(gens, dim);

  GapData g;
  g.b_set = half_open_zonotope_points(dim, gens, lattice);
  IntegerSolver solver(gens);
  for (const auto& b : g.b_set) {
    auto beta0 = solver.particular(b);
    if (!beta0) throw Error("gap data: zonotope point outside the lattice");
    g.beta.push_back(minimal_expression(*beta0, solver.kernel));
  }

  g.nu = 0;
  IntVector nu_a(a.size());
  for (const auto& beta : g.beta)
    for (std::size_t j = 0; j < beta.size(); ++j) {
      g.nu = std::max(g.nu, Integer(-beta[j]));
      nu_a[j] = std::max(nu_a[j], Integer(-beta[j]));
    }
  g.v = IntVector(dim);
  g.v_prime = IntVector(dim);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    g.v = add(g.v, scaled(gens[j], g.nu));
    g.v_prime = add(g.v_prime, scaled(gens[j], nu_a[j]));
  }

  return g;
}

}  // namespace

GapData semigroup_gap_data(const SupportSet& a) {
  if (a.empty()) throw DegenerateError("gap data of an empty support");
  GapData g = gap_expressions(a);
  const auto lattice = lattice_basis(lift(a).points(), a.ambient_dim() + 1);

  // v' + (level-d points of S_A) must lie in (d + v'_0) A for d <= nu |A| + 3.
  // The scan runs in machine integers: coordinates stay far below their range.
  g.verified_levels = g.nu.convert_to<unsigned>() * static_cast<unsigned>(a.size()) + 3;
  const unsigned shift = g.v_prime[0].convert_to<unsigned>();
  const Polytope hull = Polytope::hull(a);
  const std::size_t n = a.ambient_dim();
  struct Row {
    Small normal;
    long offset;
    bool equality;
  };
  std::vector<Row> rows;
  auto small = [](const IntVector& v) {
    Small out;
    for (const auto& x : v) out.push_back(x.convert_to<long>());
    return out;
  };
  for (const auto& f : hull.facets()) rows.push_back({small(f.normal), numerator(f.offset).convert_to<long>(), false});
  for (const auto& e : hull.equations()) rows.push_back({small(e.normal), numerator(e.offset).convert_to<long>(), true});
  std::vector<Small> basis;
  for (const auto& r : lattice) basis.push_back(small(r));
  // The Hermite rows are in echelon form, so membership is a sequence of exact divisions.
  auto in_lattice = [&](Small v) {
    for (const auto& r : basis) {
      std::size_t p = 0;
      while (r[p] == 0) ++p;
      if (v[p] % r[p] != 0) return false;
      const long q = v[p] / r[p];
      for (std::size_t i = p; i < v.size(); ++i) v[i] -= q * r[i];
    }
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  };
  Small lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = a[0][i].convert_to<long>();
    for (const auto& p : a.points()) {
      lo[i] = std::min(lo[i], p[i].convert_to<long>());
      hi[i] = std::max(hi[i], p[i].convert_to<long>());
    }
  }
  const Small vp = small(g.v_prime);
  g.verified = true;
  for_each_sumset(a, g.verified_levels + shift, [&](unsigned k, const SumsetLevel& level) {
    if (k < shift) return true;
    const long d = static_cast<long>(k - shift);
    Small x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = d * lo[i];
    while (true) {
      bool inside = true;
      for (const auto& r : rows) {
        long dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += r.normal[i] * x[i];
        if (r.equality ? dot != d * r.offset : dot > d * r.offset) {
          inside = false;
          break;
        }
      }
      if (inside) {
        Small s{d};
        s.insert(s.end(), x.begin(), x.end());
        if (in_lattice(s)) {
          Small target(n);
          for (std::size_t i = 0; i < n; ++i) target[i] = x[i] + vp[i + 1];
          if (!level.count(target)) {
            g.verified = false;
            return false;
          }
        }
      }
      std::size_t i = 0;
      while (i < n && x[i] == d * hi[i]) {
        x[i] = d * lo[i];
        ++i;
      }
      if (i == n) break;
      ++x[i];
    }
    return true;
  });
  return g;
}

// --- monomial and moment maps ---------------------------------------------------

RatVector monomial_map_eval(const SupportSet& a, const RatVector& x) {
  if (x.size() != a.ambient_dim()) throw InputError("monomial map: point of wrong dimension");
  RatVector out;
  for (const auto& p : a.points()) {
    Rational value = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const long e = p[i].convert_to<long>();
      if (e < 0 && x[i] == 0) throw InputError("monomial map: zero coordinate raised to a negative power");
      Rational base = e < 0 ? Rational(1) / x[i] : x[i];
      for (long k = 0; k < std::labs(e); ++k) value *= base;
    }
    out.push_back(value);
  }
  return out;
}

std::vector<std::complex<double>> monomial_map_eval(const SupportSet& a, const std::vector<std::complex<double>>& x) {
  if (x.size() != a.ambient_dim()) throw InputError("monomial map: point of wrong dimension");
  std::vector<std::complex<double>> out;
  for (const auto& p : a.points()) {
    std::complex<double> value = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int e = p[i].convert_to<int>();
      if (e < 0 && x[i] == 0.0) throw InputError("monomial map: zero coordinate raised to a negative power");
      value *= std::pow(x[i], e);
    }
    out.push_back(value);
  }
  return out;
}

RatVector moment_map_eval(const SupportSet& a, const RatVector& z) {
  if (z.size() != a.size()) throw InputError("moment map: need one coordinate per support point");
  Rational total = 0;
  RatVector acc(a.ambient_dim());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Rational w = abs(z[j]);
    total += w;
    acc = add(acc, scaled(to_rational(a[j]), w));
  }
  if (total == 0) throw InputError("moment map: all coordinates are zero");
  return scaled(acc, Rational(1) / total);
}

std::vector<double> moment_map_eval(const SupportSet& a, const std::vector<std::complex<double>>& z) {
  if (z.size() != a.size()) throw InputError("moment map: need one coordinate per support point");
  double total = 0;
  std::vector<double> acc(a.ambient_dim(), 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double w = std::abs(z[j]);
    total += w;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * a[j][i].convert_to<double>();
  }
  if (total == 0) throw InputError("moment map: all coordinates are zero");
  for (auto& x : acc) x /= total;
  return acc;
}

}  // namespace toric
