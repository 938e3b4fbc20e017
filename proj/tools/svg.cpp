#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/volume.hpp"

namespace toric::cli {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  void include(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

// Vertices of a polygon in counter-clockwise order around their centroid.
std::vector<std::pair<double, double>> ordered_vertices(const Polytope& p) {
  std::vector<std::pair<double, double>> v;
  for (const auto& q : p.vertices()) v.emplace_back(to_double(q[0]), to_double(q[1]));
  double cx = 0, cy = 0;
  for (const auto& [x, y] : v) {
    cx += x;
    cy += y;
  }
  cx /= static_cast<double>(v.size());
  cy /= static_cast<double>(v.size());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
  });
  return v;
}

}  // namespace

std::string render_svg(const SvgRequest& request) {
  if (request.polytopes.empty()) throw InputError("svg: nothing to draw");
  for (const auto& p : request.polytopes)
    if (p.ambient_dim() != 2) throw InputError("svg: only planar polytopes can be drawn");

  Box box;
  for (const auto& p : request.polytopes)
    for (const auto& q : p.vertices()) box.include(to_double(q[0]), to_double(q[1]));
  double fan_radius = 0;
  if (request.fan) {
    fan_radius = std::max({box.x1 - box.x0, box.y1 - box.y0, 2.0}) / 2;
    box.include(-fan_radius, -fan_radius);
    box.include(fan_radius, fan_radius);
  }
  box.x0 = std::floor(box.x0) - 1;
  box.y0 = std::floor(box.y0) - 1;
  box.x1 = std::ceil(box.x1) + 1;
  box.y1 = std::ceil(box.y1) + 1;
  const double s = request.scale;
  const double width = (box.x1 - box.x0) * s, height = (box.y1 - box.y0) * s;
  auto px = [&](double x) { return (x - box.x0) * s; };
  auto py = [&](double y) { return (box.y1 - y) * s; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"lattice\" fill=\"#bbbbbb\">\n";
  for (double x = box.x0; x <= box.x1; x += 1)
    for (double y = box.y0; y <= box.y1; y += 1)
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"1.5\"/>\n";
  out << "</g>\n";

  if (request.fan) {
    const Fan fan = normal_fan(request.polytopes[0]);
    out << "<g id=\"fan\" stroke=\"#555555\" stroke-width=\"1.5\">\n";
    for (const auto& c : fan.cones()) {
      if (c.dim() != 2 || c.rays().size() != 2) continue;
      out << "<polygon fill=\"#eeeeee\" stroke=\"none\" points=\"" << px(0) << "," << py(0);
      for (const auto& r : c.rays()) {
        const double x = r[0].convert_to<double>(), y = r[1].convert_to<double>();
        const double len = std::hypot(x, y);
        out << " " << px(fan_radius * x / len) << "," << py(fan_radius * y / len);
      }
      out << "\"/>\n";
    }
    for (const auto& r : fan.rays()) {
      const double x = r[0].convert_to<double>(), y = r[1].convert_to<double>();
      const double len = std::hypot(x, y);
      out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(fan_radius * x / len) << "\" y2=\""
          << py(fan_radius * y / len) << "\"/>\n";
    }
    out << "</g>\n";
  }

  for (std::size_t i = 0; i < request.polytopes.size(); ++i) {
    const Polytope& p = request.polytopes[i];
    const char* color = kPalette[i % std::size(kPalette)];
    out << "<g id=\"polytope" << i << "\" stroke=\"" << color << "\" stroke-width=\"2\">\n";
    const auto v = ordered_vertices(p);
    if (p.dim() == 2) {
      out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.15\" points=\"";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << px(v[k].first) << "," << py(v[k].second);
      out << "\"/>\n";
    } else if (v.size() >= 2) {
      out << "<line x1=\"" << px(v.front().first) << "\" y1=\"" << py(v.front().second) << "\" x2=\""
          << px(v.back().first) << "\" y2=\"" << py(v.back().second) << "\"/>\n";
    }
    if (request.triangulation && p.dim() == 2) {
      out << "<g stroke-width=\"1\" fill=\"none\">\n";
      for (const auto& simplex : pulling_triangulation(p)) {
        out << "<polygon points=\"";
        for (std::size_t k = 0; k < simplex.size(); ++k) {
          const auto& q = p.vertices()[simplex[k]];
          out << (k ? " " : "") << px(to_double(q[0])) << "," << py(to_double(q[1]));
        }
        out << "\"/>\n";
      }
      out << "</g>\n";
    }
    out << "<g fill=\"" << color << "\" stroke=\"none\">\n";
    if (p.is_lattice())
      for (const auto& q : lattice_points(p))
        out << "<circle cx=\"" << px(q[0].convert_to<double>()) << "\" cy=\"" << py(q[1].convert_to<double>())
            << "\" r=\"3\"/>\n";
    out << "</g>\n</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace toric::cli
