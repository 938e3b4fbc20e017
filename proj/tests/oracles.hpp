#pragma once

// Brute-force reference computations used to check the library. They share
// only the number types with the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "toric/arith.hpp"

namespace doctest {
template <>
struct StringMaker<toric::IntVector> {
  static String convert(const toric::IntVector& v) { return toric::to_string(v).c_str(); }
};
template <>
struct StringMaker<toric::RatVector> {
  static String convert(const toric::RatVector& v) { return toric::to_string(v).c_str(); }
};
template <>
struct StringMaker<toric::Integer> {
  static String convert(const toric::Integer& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<toric::Rational> {
  static String convert(const toric::Rational& v) { return toric::to_string(v).c_str(); }
};
}  // namespace doctest

namespace oracle {

using toric::Integer;
using toric::IntVector;
using toric::Rational;
using toric::RatVector;

inline std::size_t rank(std::vector<RatVector> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<IntVector>& rows) {
  std::vector<RatVector> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return rank(m);
}

inline Rational det(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

// Product of columns of A (given as points) with u.
inline IntVector apply(const std::vector<IntVector>& points, const IntVector& u) {
  IntVector out(points.empty() ? 0 : points[0].size());
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += points[j][i] * u[j];
  return out;
}

using P2 = std::pair<Integer, Integer>;

inline Integer cross(const P2& o, const P2& a, const P2& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
inline std::vector<P2> hull2(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Twice the area of a counter-clockwise polygon.
inline Integer twice_area(const std::vector<P2>& h) {
  Integer s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    s += a.first * b.second - a.second * b.first;
  }
  return abs(s);
}

inline Rational area(const std::vector<P2>& pts) { return Rational(twice_area(hull2(pts)), 2); }

inline std::vector<P2> to_p2(const std::vector<IntVector>& pts) {
  std::vector<P2> out;
  for (const auto& p : pts) out.emplace_back(p[0], p[1]);
  return out;
}

inline std::vector<P2> minkowski(const std::vector<P2>& a, const std::vector<P2>& b) {
  std::vector<P2> out;
  for (const auto& p : a)
    for (const auto& q : b) out.emplace_back(p.first + q.first, p.second + q.second);
  return hull2(out);
}

// Lattice points of a lattice polygon by Pick's theorem: A = I + B/2 - 1.
inline Integer pick_count(const std::vector<P2>& pts) {
  const auto h = hull2(pts);
  if (h.size() < 3) {
    if (h.size() == 1) return 1;
    return boost::multiprecision::gcd(abs(h[1].first - h[0].first), abs(h[1].second - h[0].second)) + 1;
  }
  Integer boundary = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    boundary += boost::multiprecision::gcd(abs(b.first - a.first), abs(b.second - a.second));
  }
  // 2A = 2I + B - 2
  return (twice_area(h) - boundary + 2) / 2 + boundary;
}

// x in conv(points) by Caratheodory: x lies in some simplex on <= n+1 points.
inline bool in_hull(const std::vector<RatVector>& points, const RatVector& x) {
  const std::size_t n = x.size(), m = points.size();
  // Solve sum l_i (p_i, 1) = (x, 1) over subsets of affinely independent points.
  std::vector<std::size_t> idx;
  bool found = false;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (found) return;
    if (!idx.empty()) {
      // Least squares is unnecessary: check an exact solution of the
      // (n+1) x k system via elimination.
      const std::size_t k = idx.size();
      std::vector<RatVector> aug(n + 1, RatVector(k + 1));
      for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug[r][c] = r < n ? points[idx[c]][r] : Rational(1);
        aug[r][k] = r < n ? x[r] : Rational(1);
      }
      std::vector<RatVector> coef;
      for (const auto& row : aug) coef.emplace_back(row.begin(), row.begin() + static_cast<long>(k));
      if (rank(coef) == k && rank(aug) == k) {
        // Unique solution; recover it.
        std::size_t r = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < k; ++c) {
          std::size_t p = r;
          while (p <= n && aug[p][c] == 0) ++p;
          std::swap(aug[p], aug[r]);
          for (std::size_t i = 0; i <= n; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const Rational f = aug[i][c] / aug[r][c];
            for (std::size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
          }
          pivots.push_back(r++);
        }
        bool ok = true;
        for (std::size_t c = 0; c < k; ++c)
          if (aug[pivots[c]][k] / aug[pivots[c]][c] < 0) ok = false;
        if (ok) found = true;
      }
    }
    if (idx.size() == n + 1) return;
    for (std::size_t i = start; i < m && !found; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return found;
}

// Lattice points of conv(points) in the bounding box, by Caratheodory.
inline std::size_t brute_count(const std::vector<IntVector>& points, const Integer& scale = 1) {
  const std::size_t n = points[0].size();
  std::vector<RatVector> pts;
  IntVector lo = points[0], hi = points[0];
  for (const auto& p : points) {
    RatVector q;
    for (std::size_t i = 0; i < n; ++i) {
      q.push_back(p[i] * scale);
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
    pts.push_back(q);
  }
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] *= scale;
    hi[i] *= scale;
  }
  std::size_t count = 0;
  IntVector x = lo;
  while (true) {
    if (in_hull(pts, RatVector(x.begin(), x.end()))) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return count;
}

// |dA| by enumerating sums.
inline std::size_t sumset_size(const std::vector<IntVector>& a, unsigned d) {
  std::set<IntVector> cur{IntVector(a[0].size())};
  for (unsigned k = 0; k < d; ++k) {
    std::set<IntVector> next;
    for (const auto& s : cur)
      for (const auto& p : a) next.insert(toric::add(s, p));
    cur = std::move(next);
  }
  return cur.size();
}

// Degree reverse lexicographic comparison with variables ordered by the given
// list (largest first). Returns true when a > b.
inline bool degrevlex_greater(const IntVector& a, const IntVector& b, const std::vector<std::size_t>& largest_first) {
  Integer da = 0, db = 0;
  for (const auto& x : a) da += x;
  for (const auto& x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t k = largest_first.size(); k-- > 0;) {
    const std::size_t v = largest_first[k];
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

// Reduce z^{p} - z^{q} by binomials (lead, tail) until no lead divides a term.
inline bool divides(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct Rule {
  IntVector lead, tail;
};

inline IntVector reduce_term(IntVector t, const std::vector<Rule>& rules) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules)
      if (divides(r.lead, t)) {
        t = toric::add(toric::sub(t, r.lead), r.tail);
        changed = true;
      }
  }
  return t;
}

inline IntVector positive_part(const IntVector& u) {
  IntVector p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) p[i] = u[i] > 0 ? u[i] : Integer(0);
  return p;
}

inline IntVector negative_part(const IntVector& u) {
  IntVector p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) p[i] = u[i] < 0 ? Integer(-u[i]) : Integer(0);
  return p;
}

// Hilbert basis of the pointed cone {x : facets.x >= 0} by enumerating the
// box [-bound, bound]^n and keeping irreducible elements.
inline std::set<IntVector> brute_hilbert_basis(const std::vector<IntVector>& facets, std::size_t n, long bound) {
  std::vector<IntVector> pts;
  IntVector x(n, Integer(-bound));
  while (true) {
    bool in = !toric::is_zero(x);
    for (const auto& f : facets)
      if (toric::dot(f, x) < 0) in = false;
    if (in) pts.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) {
      x[i] = -bound;
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  std::set<IntVector> all(pts.begin(), pts.end());
  std::set<IntVector> basis;
  for (const auto& p : pts) {
    bool reducible = false;
    for (const auto& q : pts)
      if (q != p && all.count(toric::sub(p, q))) {
        reducible = true;
        break;
      }
    if (!reducible) basis.insert(p);
  }
  return basis;
}

}  // namespace oracle
