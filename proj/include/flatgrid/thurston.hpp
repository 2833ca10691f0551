#pragma once

#include <utility>
#include <vector>

#include "flatgrid/ribbon_graph.hpp"
#include "flatgrid/surface.hpp"

namespace flatgrid {

struct Cylinder {
  enum class Direction { horizontal, vertical };
  Direction direction = Direction::horizontal;
  int core_node = -1;
  double height = 0.0;
  double circumference = 0.0;
  std::vector<int> member_edges;  // in cyclic (east or north) order
  double modulus() const { return height / circumference; }
};

/// One rectangle [0, w(beta(e))] x [0, w(alpha(e))] per edge; the right side
/// of R_e is glued to the left side of R_{east(e)} and the top of R_e to the
/// bottom of R_{north(e)}.  Polygon index equals edge index.  Rectangles are
/// laid out as horizontal cylinder strips for rendering; positions carry no
/// meaning beyond that.
TranslationSurface rectangle_surface(const BipartiteRibbonGraph& g,
                                     const WidthFunction& w);

/// Horizontal cylinders are indexed by A nodes (height w(a), circumference
/// the sum of w(beta(e)) over the star), vertical cylinders by B nodes.
std::vector<Cylinder> cylinders(const BipartiteRibbonGraph& g, const WidthFunction& w,
                                Cylinder::Direction direction);

/// P0 = [[1, lambda],[0,1]] and Q0 = [[1,0],[-lambda,1]].
std::pair<Mat2, Mat2> standard_parabolics(double lambda);

}  // namespace flatgrid
