#include "flatgrid/thurston.hpp"

#include <cmath>
#include <stdexcept>

namespace flatgrid {

std::vector<Cylinder> cylinders(const BipartiteRibbonGraph& g, const WidthFunction& w,
                                Cylinder::Direction direction) {
  bool horizontal = direction == Cylinder::Direction::horizontal;
  const std::vector<int>& perm = horizontal ? g.east : g.north;
  std::vector<Cylinder> out;
  std::vector<char> seen(g.edge_count(), 0);
  for (int e0 = 0; e0 < g.edge_count(); ++e0) {
    if (seen[e0]) continue;
    Cylinder cyl;
    cyl.direction = direction;
    cyl.core_node = horizontal ? g.alpha(e0) : g.beta(e0);
    cyl.height = w.values[cyl.core_node];
    int e = e0;
    do {
      seen[e] = 1;
      cyl.member_edges.push_back(e);
      cyl.circumference += w.values[horizontal ? g.beta(e) : g.alpha(e)];
      e = perm[e];
    } while (e != e0);
    out.push_back(std::move(cyl));
  }
  return out;
}

TranslationSurface rectangle_surface(const BipartiteRibbonGraph& g,
                                     const WidthFunction& w) {
  g.check();
  if (w.values.size() != g.nodes.size())
    throw std::invalid_argument("rectangle_surface: width size mismatch");
  for (double v : w.values)
    if (!(v > 0)) throw std::invalid_argument("rectangle_surface: width must be positive");

  int ne = g.edge_count();
  auto width = [&](int e) { return w.values[g.beta(e)]; };
  auto height = [&](int e) { return w.values[g.alpha(e)]; };
  for (int e = 0; e < ne; ++e) {
    // gluing compatibility along east/north cycles; the orbit conditions make
    // these exact
    if (height(e) != height(g.east[e]) || width(e) != width(g.north[e]))
      throw std::runtime_error("rectangle_surface: side mismatch along a gluing");
  }

  // Strip layout: each horizontal cylinder occupies one row.
  std::vector<Vec2> anchor(ne);
  double y = 0.0;
  for (const Cylinder& cyl :
       cylinders(g, w, Cylinder::Direction::horizontal)) {
    double x = 0.0;
    for (int e : cyl.member_edges) {
      anchor[e] = {x, y};
      x += width(e);
    }
    y += cyl.height;
  }

  TranslationSurface s;
  s.polygons.resize(ne);
  s.pairing.resize(ne);
  for (int e = 0; e < ne; ++e) {
    double wd = width(e), ht = height(e);
    Vec2 a = anchor[e];
    s.polygons[e] = {a, a + Vec2{wd, 0}, a + Vec2{wd, ht}, a + Vec2{0, ht}};
    s.pairing[e].resize(4);
  }
  for (int e = 0; e < ne; ++e) {
    s.pairing[e][1] = {g.east[e], 3};
    s.pairing[g.east[e]][3] = {e, 1};
    s.pairing[e][2] = {g.north[e], 0};
    s.pairing[g.north[e]][0] = {e, 2};
  }
  ValidationReport rep = validate(s);
  if (!rep.ok) throw std::runtime_error("rectangle_surface: invalid result: " + rep.message);
  return s;
}

std::pair<Mat2, Mat2> standard_parabolics(double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("standard_parabolics: lambda must be positive");
  Mat2 p0{1, lambda, 0, 1};
  Mat2 q0{1, 0, -lambda, 1};
  return {p0, q0};
}

}  // namespace flatgrid
