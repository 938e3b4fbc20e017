#include "toric/arith.hpp"

#include <cctype>

#include "toric/errors.hpp"

namespace toric {

namespace {

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw InputError("vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Integer dot(const IntVector& a, const IntVector& b) {
  check_sizes(a.size(), b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  check_sizes(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  check_sizes(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(numerator(q)) * (l / Integer(denominator(q))));
  return primitive(std::move(out));
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

bool is_integral(const RatVector& v) {
  for (const auto& q : v)
    if (denominator(q) != 1) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (denominator(q) != 1) throw InputError("non-integral coordinate " + to_string(q));
    out.push_back(Integer(numerator(q)));
  }
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector add(const IntVector& a, const IntVector& b) {
  check_sizes(a.size(), b.size());
  IntVector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  check_sizes(a.size(), b.size());
  IntVector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector scaled(const IntVector& v, const Integer& s) {
  IntVector r(v);
  for (auto& x : r) x *= s;
  return r;
}

RatVector add(const RatVector& a, const RatVector& b) {
  check_sizes(a.size(), b.size());
  RatVector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  check_sizes(a.size(), b.size());
  RatVector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector scaled(const RatVector& v, const Rational& s) {
  RatVector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer floor(const Rational& q) { return floor_div(Integer(numerator(q)), Integer(denominator(q))); }

Integer ceil(const Rational& q) { return -floor(-q); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw InputError("not a rational number: '" + text + "'");
    return Rational(Integer(strip_plus(text)));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("not a rational number: '" + text + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(Integer(strip_plus(num)), d);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace toric
