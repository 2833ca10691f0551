#pragma once

#include <vector>

#include "flatgrid/surface.hpp"

namespace flatgrid {

/// 2n-gon with edge vector i equal to a (cos i*pi/n, sin i*pi/n) for even i
/// and b (...) for odd i.  With a or b zero, half the edges collapse and the
/// loop traces a regular n-gon (a segment when n = 2).
struct SemiregularPolygon {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  std::vector<Vec2> loop;  // raw 2n vertices, zero-length edges included
};

SemiregularPolygon semiregular_polygon(int n, double a, double b);

/// The k-th polygon of the (m,n) family: side lengths sin(k pi/m) and
/// sin((k+1) pi/m), assigned to even/odd sides by the parity of n and k so
/// that opposite sides of neighbors match.
SemiregularPolygon surface_polygon(int m, int n, int k);

struct SemiregularBuild {
  int m = 0;
  int n = 0;
  TranslationSurface surface;
  std::vector<int> poly_of_k;  // k -> polygon index, -1 when degenerate
};

/// Glues P(0),...,P(m-1) edge-to-opposite-edge: for odd k, even side i of
/// P(k) to side i+n of P(k+1) and odd side i to side i+n of P(k-1).
/// Polygons are positioned so glued neighbor sides coincide, matching the
/// usual left-to-right picture.
SemiregularBuild semiregular_surface_build(int m, int n);
TranslationSurface semiregular_surface(int m, int n);

struct SemiregularQuotientBuild {
  int m = 0;
  int n = 0;
  TranslationSurface surface;
  std::vector<int> poly_of_k;  // k < m/2 -> polygon index
};

/// Quotient by the translation involution P(i) <-> P(m-1-i); m and n even.
SemiregularQuotientBuild semiregular_quotient_build(int m, int n);
TranslationSurface semiregular_quotient(int m, int n);

/// Distance from the center of P_n(a,b) to the midpoint of an even side
/// (length a): r_n(a,b) = (b + a cos pi/n) / (2 sin pi/n).  The odd radius is
/// r_n(b,a).
double even_radius(int n, double a, double b);
double odd_radius(int n, double a, double b);

/// Distance between the centers of P(k-1) and P(k):
/// kappa sin(k pi/m) with kappa = (cos pi/m + cos pi/n) / sin(pi/n).
double center_distance(int m, int n, int k);

}  // namespace flatgrid
