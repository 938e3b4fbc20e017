#include "toric/linear_program.hpp"

#include "toric/errors.hpp"

namespace toric {

namespace {

struct Tableau {
  std::vector<RatVector> rows;  // each row: coefficients then rhs
  std::vector<std::size_t> basis;
  std::size_t cols = 0;         // number of variables

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Reduced costs of objective `obj` (maximize) for the current basis.
  RatVector reduced_costs(const RatVector& obj) const {
    RatVector d(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) d[j] = obj[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = obj[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) d[j] -= cb * rows[i][j];
    }
    return d;  // d[cols] = -(current objective value)
  }

  // Returns false when unbounded. `allowed[j]` restricts entering columns.
  bool optimize(const RatVector& obj, const std::vector<bool>& allowed) {
    while (true) {
      RatVector d = reduced_costs(obj);
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (allowed[j] && d[j] > 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.size(), n = c.size();
  if (b.size() != m) throw InputError("linear program: rhs length mismatch");
  Tableau t;
  t.cols = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw InputError("linear program: row length mismatch");
    RatVector row(n + m + 1);
    bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) row[j] = neg ? -a[i][j] : a[i][j];
    row[n + i] = 1;
    row[n + m] = neg ? -b[i] : b[i];
    t.rows.push_back(std::move(row));
    t.basis.push_back(n + i);
  }

  // Phase I: maximize -(sum of artificials).
  RatVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.optimize(phase1, std::vector<bool>(n + m, true));
  LpResult res;
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= n) infeas += t.rows[i][n + m];
  if (infeas != 0) {
    res.status = LpResult::Status::kInfeasible;
    return res;
  }
  // Drive artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t c2 = n;
    for (std::size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        c2 = j;
        break;
      }
    if (c2 == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, c2);
    ++i;
  }

  RatVector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  std::vector<bool> allowed(n + m, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
  if (!t.optimize(phase2, allowed)) {
    res.status = LpResult::Status::kUnbounded;
    return res;
  }
  res.status = LpResult::Status::kOptimal;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rows[i][n + m];
  res.value = dot(c, res.x);
  return res;
}

LpResult maximize_mixed(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c,
                        const std::vector<bool>& nonneg) {
  const std::size_t n = c.size();
  // Split each free variable into a difference of two nonnegative ones.
  std::vector<std::size_t> neg_col(n, n);
  std::size_t extra = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!nonneg[j]) neg_col[j] = n + extra++;
  std::vector<RatVector> a2;
  for (const auto& row : a) {
    RatVector r(n + extra);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = row[j];
      if (neg_col[j] != n) r[neg_col[j]] = -row[j];
    }
    a2.push_back(std::move(r));
  }
  RatVector c2(n + extra);
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = c[j];
    if (neg_col[j] != n) c2[neg_col[j]] = -c[j];
  }
  LpResult r = maximize(a2, b, c2);
  if (r.status == LpResult::Status::kOptimal) {
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - (neg_col[j] != n ? r.x[neg_col[j]] : Rational(0));
    r.x = std::move(x);
  }
  return r;
}

}  // namespace toric
