#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "svg.hpp"
#include "toric/toric.hpp"

namespace toric::cli {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- encoding

Json encode(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

Json encode(const Rational& q) {
  if (denominator(q) == 1) return encode(Integer(numerator(q)));
  return toric::to_string(q);
}

Json encode(std::size_t i) { return i; }

Json encode(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

template <typename T>
Json encode(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode_polytope(const Polytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", encode(f.normal)}, {"offset", encode(f.offset)}});
  Json equations = Json::array();
  for (const auto& e : p.equations()) equations.push_back({{"normal", encode(e.normal)}, {"offset", encode(e.offset)}});
  Json out;
  out["ambient_dim"] = p.ambient_dim();
  out["dim"] = p.dim();
  out["vertices"] = encode(p.vertices());
  out["facets"] = std::move(facets);
  out["equations"] = std::move(equations);
  out["facet_vertices"] = encode(p.facet_vertices());
  return out;
}

Json encode_gb(const GroebnerBasis& gb, const std::vector<std::string>& names) {
  Json text = Json::array(), exps = Json::array();
  for (const auto& b : gb.generators) {
    text.push_back(b.to_string(names));
    exps.push_back(encode(b.u));
  }
  Json out;
  out["variables"] = names;
  out["order"] = gb.order.describe();
  out["reduced"] = gb.reduced;
  out["binomials"] = std::move(text);
  out["exponents"] = std::move(exps);
  return out;
}

// Human-readable rendering of a JSON payload.
void write_text(const Json& j, std::ostream& out) {
  if (!j.is_object()) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else if (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object() ||
                                                       value[0].is_string())) {
      out << key << ":\n";
      for (const auto& item : value)
        out << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
}

// ---------------------------------------------------------------- decoding

[[noreturn]] void schema_error(const std::string& source, const std::string& pointer, const std::string& what) {
  throw InputError(source + ": " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": invalid JSON (" + e.what() + ")");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json load_argument(const std::string& arg, const std::string& option) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))
    return parse_json_text(arg, option);
  return parse_json_text(read_file(arg), arg);
}

Integer decode_integer(const Json& j, const std::string& source, const std::string& pointer) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  schema_error(source, pointer, "expected an integer");
}

Rational decode_rational(const Json& j, const std::string& source, const std::string& pointer) {
  if (j.is_number_integer()) return decode_integer(j, source, pointer);
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  schema_error(source, pointer, "expected an integer or a rational string \"a/b\"");
}

std::vector<IntVector> decode_int_rows(const Json& j, const std::string& source, const std::string& pointer,
                                       std::optional<std::size_t> dim) {
  if (!j.is_array()) schema_error(source, pointer, "expected an array of integer vectors");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    if (!j[i].is_array()) schema_error(source, p, "expected an array of integers");
    if (dim && j[i].size() != *dim)
      schema_error(source, p, "expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(j[i].size()));
    if (!dim) dim = j[i].size();
    IntVector v;
    for (std::size_t k = 0; k < j[i].size(); ++k) v.push_back(decode_integer(j[i][k], source, p + "/" + std::to_string(k)));
    rows.push_back(std::move(v));
  }
  return rows;
}

// SupportSet: {"dim": n, "points": [[...], ...]} or a bare list of points.
SupportSet decode_support(const Json& j, const std::string& source) {
  std::optional<std::size_t> dim;
  std::string pointer;
  const Json* points = &j;
  std::vector<std::string> labels;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      if (key != "dim" && key != "points" && key != "labels") schema_error(source, "/" + key, "unknown property");
    if (!j.contains("dim")) schema_error(source, "", "missing property \"dim\"");
    if (!j.contains("points")) schema_error(source, "", "missing property \"points\"");
    if (!j["dim"].is_number_unsigned()) schema_error(source, "/dim", "expected a nonnegative integer");
    dim = j["dim"].get<std::size_t>();
    pointer = "/points";
    points = &j["points"];
    if (j.contains("labels")) {
      const Json& l = j["labels"];
      if (!l.is_array()) schema_error(source, "/labels", "expected an array of strings");
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!l[i].is_string()) schema_error(source, "/labels/" + std::to_string(i), "expected a string");
        labels.push_back(l[i].get<std::string>());
      }
    }
  } else if (!j.is_array()) {
    schema_error(source, "", "expected a support set object or an array of points");
  }
  auto rows = decode_int_rows(*points, source, pointer, dim);
  if (rows.empty()) schema_error(source, pointer, "at least one point is required");
  if (!dim) dim = rows[0].size();
  if (*dim == 0) schema_error(source, pointer, "points must have at least one coordinate");
  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [it, fresh] = seen.emplace(rows[i], i);
    if (!fresh)
      schema_error(source, pointer + "/" + std::to_string(i),
                   "duplicate point " + toric::to_string(rows[i]) + " (same as index " + std::to_string(it->second) + ")");
  }
  if (!labels.empty() && labels.size() != rows.size())
    schema_error(source, "/labels", "expected one label per point");
  return SupportSet(*dim, std::move(rows), std::move(labels));
}

// System: {"variables": [...], "polynomials": ["text", ...]}.
PolySystem decode_system(const Json& j, const std::string& source) {
  if (!j.is_object()) schema_error(source, "", "expected a system object");
  for (const auto& [key, value] : j.items())
    if (key != "variables" && key != "polynomials") schema_error(source, "/" + key, "unknown property");
  if (!j.contains("variables")) schema_error(source, "", "missing property \"variables\"");
  if (!j.contains("polynomials")) schema_error(source, "", "missing property \"polynomials\"");
  const Json& vars = j["variables"];
  const Json& polys = j["polynomials"];
  if (!vars.is_array() || vars.empty()) schema_error(source, "/variables", "expected a nonempty array of names");
  if (!polys.is_array() || polys.empty()) schema_error(source, "/polynomials", "expected a nonempty array of strings");
  std::vector<std::string> names;
  std::set<std::string> unique;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string p = "/variables/" + std::to_string(i);
    if (!vars[i].is_string()) schema_error(source, p, "expected a string");
    const auto name = vars[i].get<std::string>();
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) ||
        name.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") != std::string::npos)
      schema_error(source, p, "variable names are letters, digits and '_', starting with a letter");
    if (!unique.insert(name).second) schema_error(source, p, "duplicate variable '" + name + "'");
    names.push_back(name);
  }
  PolySystem system;
  system.variables = names;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const std::string p = "/polynomials/" + std::to_string(i);
    if (!polys[i].is_string()) schema_error(source, p, "expected a string");
    try {
      system.polynomials.push_back(parse_polynomial(polys[i].get<std::string>(), names));
    } catch (const ParseError& e) {
      schema_error(source, p, e.what());
    }
  }
  return system;
}

// ---------------------------------------------------------------- options

enum Option : unsigned {
  kPoints = 1u << 0,
  kRays = 1u << 1,
  kSystem = 1u << 2,
  kOrder = 1u << 3,
  kDegree = 1u << 4,
  kTol = 1u << 5,
  kSeed = 1u << 6,
  kMoment = 1u << 7,
  kSvg = 1u << 8,
};

struct Job {
  std::string command;
  std::vector<std::string> points;
  std::vector<std::string> supports;
  std::string rays;
  std::string system;
  std::string order = "degrevlex";
  std::string var_order;
  unsigned degree = 6;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::string at;
  std::string torus;
  bool fan = false;
  bool triangulation = false;
  unsigned scale = 40;
  std::string format = "json";
};

std::vector<SupportSet> supports(const Job& job) {
  std::vector<SupportSet> out;
  for (const auto& p : job.points) out.push_back(decode_support(load_argument(p, "--points"), "--points"));
  for (const auto& s : job.supports) out.push_back(decode_support(load_argument(s, "--support"), s));
  return out;
}

SupportSet one_support(const Job& job) {
  auto all = supports(job);
  if (all.size() != 1) throw InputError(job.command + ": expected exactly one --points or --support input");
  return all[0];
}

std::vector<Polytope> polytopes(const Job& job, std::size_t at_least) {
  std::vector<Polytope> out;
  for (const auto& a : supports(job)) out.push_back(Polytope::hull(a));
  if (out.size() < at_least)
    throw InputError(job.command + ": expected at least " + std::to_string(at_least) + " --points/--support inputs");
  return out;
}

RationalCone cone_from_rays(const Job& job) {
  if (job.rays.empty()) throw InputError(job.command + ": --rays is required");
  const auto rows = decode_int_rows(load_argument(job.rays, "--rays"), "--rays", "", std::nullopt);
  if (rows.empty()) throw InputError("--rays: at least one ray is required");
  if (rows[0].empty()) throw InputError("--rays: rays must have at least one coordinate");
  return RationalCone::from_generators(rows[0].size(), rows);
}

PolySystem system_input(const Job& job) {
  if (job.system.empty()) throw InputError(job.command + ": --system is required");
  return decode_system(load_argument(job.system, "--system"), job.system);
}

TermOrder term_order(const Job& job, std::size_t m) {
  std::vector<std::size_t> var_order;
  if (!job.var_order.empty()) {
    const Json j = load_argument(job.var_order, "--var-order");
    if (!j.is_array()) schema_error("--var-order", "", "expected an array of variable indices");
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number_unsigned()) schema_error("--var-order", "/" + std::to_string(i), "expected an index");
      var_order.push_back(j[i].get<std::size_t>());
    }
  }
  TermOrder order;
  if (job.order == "degrevlex")
    order = TermOrder::degrevlex(var_order);
  else if (job.order == "lex")
    order = TermOrder::lex(var_order);
  else if (job.order == "revlex")
    order = TermOrder::revlex(var_order);
  else
    throw InputError("--order: expected degrevlex, lex or revlex, got '" + job.order + "'");
  order.validate(m);
  return order;
}

GroebnerOptions groebner_options() {
  GroebnerOptions options;
  if (const char* env = std::getenv("TORIC_KIT_BUDGET")) {
    const std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 12)
      throw InputError("TORIC_KIT_BUDGET: expected a positive integer, got '" + s + "'");
    options.spair_budget = std::stoull(s);
    if (options.spair_budget == 0) throw InputError("TORIC_KIT_BUDGET: expected a positive integer");
  }
  return options;
}

// ---------------------------------------------------------------- commands

Json cmd_hull(const Job& job) { return encode_polytope(Polytope::hull(one_support(job))); }

Json cmd_volume(const Job& job) {
  const Polytope p = Polytope::hull(one_support(job));
  Json out;
  out["dim"] = p.dim();
  out["volume"] = encode(volume(p));
  out["normalized_volume"] = encode(normalized_volume(p));
  out["intrinsic_volume"] = encode(intrinsic_volume(p));
  out["euclidean_volume_squared"] = encode(euclidean_intrinsic_volume_squared(p));
  out["euclidean_volume"] = euclidean_intrinsic_volume(p);
  out["lattice_points"] = encode(count_lattice_points(p));
  return out;
}

Json cmd_ehrhart(const Job& job) {
  Json out;
  out["coefficients"] = encode(ehrhart(Polytope::hull(one_support(job))).coefficients());
  return out;
}

Json cmd_minkowski_sum(const Job& job) {
  const auto ps = polytopes(job, 2);
  Polytope sum = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) sum = minkowski_sum(sum, ps[i]);
  return encode_polytope(sum);
}

Json cmd_mixed_volume(const Job& job) {
  const auto ps = polytopes(job, 1);
  const auto mv = mixed_volume(ps);
  Json out;
  out["mixed_volume"] = encode(mv.mv);
  out["normalized_mixed_volume"] = encode(mv.normalized);
  if (ps.size() <= 6) out["volume_polynomial"] = minkowski_volume_polynomial(ps).to_string("l");
  return out;
}

Json encode_fan(const Fan& fan, std::uint64_t seed) {
  const auto rays = fan.rays();
  Json cones = Json::array();
  for (const auto& c : fan.cones()) {
    Json idx = Json::array();
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(std::find(rays.begin(), rays.end(), r) - rays.begin()));
    cones.push_back({{"dim", c.dim()}, {"rays", std::move(idx)}, {"lineality", encode(c.lineality())}});
  }
  Json out;
  out["ambient_dim"] = fan.ambient_dim();
  out["rays"] = encode(rays);
  out["cones"] = std::move(cones);
  out["maximal_cones"] = encode(fan.maximal_cones());
  out["complete"] = fan.is_complete(seed);
  return out;
}

Json cmd_normal_fan(const Job& job) {
  return encode_fan(normal_fan(Polytope::hull(one_support(job))), job.seed);
}

Json cmd_dual_cone(const Job& job) {
  const RationalCone dual = dual_cone(cone_from_rays(job));
  Json out;
  out["ambient_dim"] = dual.ambient_dim();
  out["dim"] = dual.dim();
  out["rays"] = encode(dual.rays());
  out["lineality"] = encode(dual.lineality());
  out["facets"] = encode(dual.facets());
  out["equations"] = encode(dual.equations());
  return out;
}

Json cmd_hilbert_basis(const Job& job) {
  Json out;
  out["hilbert_basis"] = encode(hilbert_basis(cone_from_rays(job)).points());
  return out;
}

Json cmd_patch_ideal(const Job& job) {
  const RationalCone sigma = cone_from_rays(job);
  // The number of semigroup generators is only known after the Hilbert basis.
  PatchIdeal patch = affine_patch_ideal(sigma, term_order(Job{}, 0), groebner_options());
  if (job.order != "degrevlex" || !job.var_order.empty())
    patch = affine_patch_ideal(sigma, term_order(job, patch.generators.size()), groebner_options());
  Json out;
  out["generators"] = encode(patch.generators.points());
  const Json gb = encode_gb(patch.gb, support_variable_names(patch.generators));
  for (const auto& [key, value] : gb.items()) out[key] = value;
  return out;
}

Json cmd_toric_ideal(const Job& job) {
  const SupportSet a = one_support(job);
  const GroebnerBasis gb = toric_groebner(a, term_order(job, a.size()), groebner_options());
  return encode_gb(gb, support_variable_names(a));
}

Json cmd_hilbert_function(const Job& job) {
  const SupportSet a = one_support(job);
  Json out;
  out["values"] = encode(hilbert_function_values(a, job.degree));
  const UniPoly hp = hilbert_polynomial(a);
  out["hilbert_polynomial"] = encode(hp.coefficients());
  out["polynomial"] = hp.to_string("d");
  return out;
}

Json cmd_gap_shift(const Job& job) {
  const GapData g = semigroup_gap_data(one_support(job));
  Json out;
  out["b_set"] = encode(g.b_set);
  out["beta"] = encode(g.beta);
  out["nu"] = encode(g.nu);
  out["v"] = encode(g.v);
  out["v_prime"] = encode(g.v_prime);
  out["verified"] = g.verified;
  out["verified_levels"] = g.verified_levels;
  return out;
}

Json cmd_kushnirenko(const Job& job) {
  Json out;
  if (!job.system.empty()) {
    const PolySystem s = system_input(job);
    s.require_square();
    const SupportSet& a = s.polynomials[0].support();
    for (const auto& f : s.polynomials)
      if (!(f.support().points().size() == a.size() && std::is_permutation(f.support().points().begin(), f.support().points().end(), a.points().begin())))
        throw InputError("kushnirenko: the polynomials do not share one support; use bernstein");
    out["bound"] = encode(kushnirenko_bound(a));
    return out;
  }
  out["bound"] = encode(kushnirenko_bound(one_support(job)));
  return out;
}

Json cmd_bernstein(const Job& job) {
  Json out;
  out["bound"] = encode(bernstein_bound(system_input(job)));
  return out;
}

Json encode_faces(const std::vector<SparsePolynomial>& faces, const std::vector<std::string>& vars) {
  Json out = Json::array();
  for (const auto& f : faces) out.push_back(f.to_string(vars));
  return out;
}

Json cmd_facial_systems(const Job& job) {
  const PolySystem s = system_input(job);
  Json systems = Json::array();
  for (const auto& fs : facial_systems(s))
    systems.push_back({{"w", encode(fs.w)}, {"cone_rays", encode(fs.cone.rays())}, {"faces", encode_faces(fs.faces, s.variables)}});
  Json out;
  out["systems"] = std::move(systems);
  return out;
}

Json cmd_genericity(const Job& job) {
  const PolySystem s = system_input(job);
  const GenericityReport r = genericity_check(s);
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"w", encode(c.w)}, {"faces", encode_faces(c.faces, s.variables)}, {"status", to_string(c.status)}});
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["witness"] = r.witness ? encode(*r.witness) : Json(nullptr);
  out["checks"] = std::move(checks);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json cmd_solve2(const Job& job) {
  const PolySystem s = system_input(job);
  if (!(job.tol > 0)) throw InputError("--tol must be positive");
  SolveOptions options;
  options.tol = job.tol;
  const BivariateResult r = solve_bivariate(s, options);
  Json sols = Json::array();
  for (const auto& t : r.solutions)
    sols.push_back({{"coordinates", encode(t.coordinates)}, {"multiplicity", t.multiplicity}, {"residual", t.residual}});
  Json out;
  out["variables"] = s.variables;
  out["solutions"] = std::move(sols);
  out["total_multiplicity"] = r.total_multiplicity();
  out["bound"] = encode(bernstein_bound(s));
  out["multiplicity_ambiguous"] = r.multiplicity_ambiguous;
  out["precision_bits"] = r.precision_bits;
  out["resultant"] = r.resultant.to_string(s.variables[0]);
  return out;
}

RatVector decode_rat_vector(const std::string& arg, const std::string& option) {
  const Json j = load_argument(arg, option);
  if (!j.is_array()) schema_error(option, "", "expected an array of numbers");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(decode_rational(j[i], option, "/" + std::to_string(i)));
  return v;
}

Json cmd_moment_map(const Job& job) {
  const SupportSet a = one_support(job);
  if (job.at.empty() == job.torus.empty()) throw InputError("moment-map: give exactly one of --at (z) or --torus (x)");
  Json out;
  RatVector z;
  if (!job.torus.empty()) {
    const RatVector x = decode_rat_vector(job.torus, "--torus");
    if (x.size() != a.ambient_dim())
      throw InputError("--torus: expected " + std::to_string(a.ambient_dim()) + " coordinates");
    z = monomial_map_eval(a, x);
    out["monomials"] = encode(z);
  } else {
    z = decode_rat_vector(job.at, "--at");
    if (z.size() != a.size()) throw InputError("--at: expected " + std::to_string(a.size()) + " coordinates");
  }
  out["image"] = encode(moment_map_eval(a, z));
  return out;
}

struct Command {
  std::string name;
  std::string help;
  unsigned options;
  std::function<Json(const Job&)> handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"hull", "convex hull with vertices and facet inequalities normal.x <= offset", kPoints, cmd_hull},
      {"volume", "volume, normalized and intrinsic volume, lattice point count", kPoints, cmd_volume},
      {"ehrhart", "Ehrhart polynomial coefficients, constant first", kPoints, cmd_ehrhart},
      {"minkowski-sum", "Minkowski sum of two or more polytopes", kPoints, cmd_minkowski_sum},
      {"mixed-volume", "mixed volume of n polytopes in R^n", kPoints, cmd_mixed_volume},
      {"normal-fan", "outer normal fan of a polytope", kPoints | kSeed, cmd_normal_fan},
      {"dual-cone", "dual of the cone spanned by --rays", kRays, cmd_dual_cone},
      {"hilbert-basis", "Hilbert basis of the pointed cone spanned by --rays", kRays, cmd_hilbert_basis},
      {"patch-ideal", "toric ideal of the affine patch of the cone spanned by --rays", kRays | kOrder, cmd_patch_ideal},
      {"toric-ideal", "reduced Groebner basis of the toric ideal", kPoints | kOrder, cmd_toric_ideal},
      {"hilbert-function", "Hilbert function values up to --degree and the Hilbert polynomial", kPoints | kDegree,
       cmd_hilbert_function},
      {"gap-shift", "semigroup gap data B, beta, nu, v, v'", kPoints, cmd_gap_shift},
      {"kushnirenko", "Kushnirenko bound of a support (or of a system with one shared support)", kPoints | kSystem,
       cmd_kushnirenko},
      {"bernstein", "Bernstein bound of a square system", kSystem, cmd_bernstein},
      {"facial-systems", "facial systems over the common refinement of the normal fans", kSystem, cmd_facial_systems},
      {"genericity", "whether every facial system is empty in the torus", kSystem, cmd_genericity},
      {"solve2", "torus solutions of two equations in two unknowns", kSystem | kTol, cmd_solve2},
      {"moment-map", "moment map image of z (or of the monomial map at x)", kPoints | kMoment, cmd_moment_map},
      {"svg", "SVG 1.1 drawing of 2D polytopes, their triangulations and normal fans", kPoints | kSvg, nullptr},
  };
  return table;
}

void add_options(CLI::App* sub, Job& job, unsigned mask) {
  if (mask & kPoints) {
    sub->add_option("--points", job.points, "support set as inline JSON (list of points or {\"dim\",\"points\"}); repeatable")->allow_extra_args(false);
    sub->add_option("--support", job.supports, "support set JSON file; repeatable")->allow_extra_args(false);
  }
  if (mask & kRays) sub->add_option("--rays", job.rays, "cone generators as JSON list of integer vectors");
  if (mask & kSystem) sub->add_option("--system", job.system, "system JSON file (or inline JSON)");
  if (mask & kOrder) {
    sub->add_option("--order", job.order, "term order: degrevlex, lex or revlex")->capture_default_str();
    sub->add_option("--var-order", job.var_order, "JSON list of variable indices, largest first");
  }
  if (mask & kDegree) sub->add_option("--degree", job.degree, "largest degree to evaluate")->capture_default_str();
  if (mask & kTol) sub->add_option("--tol", job.tol, "residual and torus tolerance")->capture_default_str();
  if (mask & kSeed) sub->add_option("--seed", job.seed, "seed for sampling checks")->capture_default_str();
  if (mask & kMoment) {
    sub->add_option("--at", job.at, "projective coordinates z as JSON list (one per point)");
    sub->add_option("--torus", job.torus, "torus point x as JSON list; z is its monomial image");
  }
  if (mask & kSvg) {
    sub->add_flag("--fan", job.fan, "draw the normal fan of the first polytope");
    sub->add_flag("--triangulation", job.triangulation, "draw a pulling triangulation of each polytope");
    sub->add_option("--scale", job.scale, "pixels per lattice unit")->capture_default_str()->check(CLI::Range(4, 400));
  }
  if (!(mask & kSvg)) sub->add_option("--format", job.format, "output format: json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"toric-kit: exact toric and polyhedral computations", "toric-kit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "toric-kit 1.0");
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_options(sub, job, c.options);
    by_app[sub] = &c;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  const Command* command = nullptr;
  for (const auto& [sub, c] : by_app)
    if (sub->parsed()) command = c;
  job.command = command->name;

  try {
    if (command->name == "svg") {
      SvgRequest request;
      request.polytopes = polytopes(job, 1);
      request.fan = job.fan;
      request.triangulation = job.triangulation;
      request.scale = job.scale;
      out << render_svg(request);
      return kExitOk;
    }
    const Json result = command->handler(job);
    if (job.format == "text")
      write_text(result, out);
    else
      out << result.dump() << "\n";
    return kExitOk;
  } catch (const InputError& e) {
    err << "toric-kit " << job.command << ": input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "toric-kit " << job.command << ": resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const DegenerateError& e) {
    err << "toric-kit " << job.command << ": degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "toric-kit " << job.command << ": internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toric::cli
