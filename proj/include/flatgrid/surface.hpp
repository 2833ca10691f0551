#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatgrid/geometry.hpp"

namespace flatgrid {

struct EdgeRef {
  int poly = -1;
  int edge = -1;
  bool valid() const { return poly >= 0 && edge >= 0; }
  bool operator==(const EdgeRef& o) const { return poly == o.poly && edge == o.edge; }
  bool operator<(const EdgeRef& o) const {
    return poly != o.poly ? poly < o.poly : edge < o.edge;
  }
};

/// A translation surface presented as planar polygons (CCW vertex loops) with
/// an involutive edge pairing.  Paired edges carry opposite edge vectors; the
/// identification is the translation matching the two segments.
struct TranslationSurface {
  std::vector<std::vector<Vec2>> polygons;
  std::vector<std::vector<EdgeRef>> pairing;  // pairing[p][e] = partner of edge e of polygon p

  int polygon_count() const { return static_cast<int>(polygons.size()); }
  int edge_count(int p) const { return static_cast<int>(polygons[p].size()); }
  int total_edges() const;
  Vec2 edge_vector(int p, int e) const;
  double area() const;
};

/// Incremental construction: add raw polygons (possibly with zero-length
/// edges), declare gluings, then finish().  Finishing removes zero-length
/// edges (merging endpoints), eliminates degenerate 2-gon slits by composing
/// the pairing through them, and validates the result.
class SurfaceBuilder {
 public:
  int add_polygon(std::vector<Vec2> loop);
  void glue(int p1, int e1, int p2, int e2);
  void translate_polygon(int p, Vec2 t);
  const std::vector<Vec2>& loop(int p) const { return polys_.at(p); }

  struct Result {
    TranslationSurface surface;
    std::vector<int> poly_index;  // original polygon -> final index, -1 if dropped
  };
  Result finish(double tol = kDefaultTol);

 private:
  std::vector<std::vector<Vec2>> polys_;
  std::vector<std::vector<EdgeRef>> pairing_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  int poly = -1;
  int edge = -1;
};

ValidationReport validate(const TranslationSurface& s, double tol = kDefaultTol);

struct Corner {
  int poly;
  int vertex;
};

struct VertexClass {
  std::vector<Corner> corners;
  double angle = 0.0;     // total cone angle
  int multiple = 0;       // angle / 2pi, rounded
};

/// Partition of polygon corners into surface vertices with their cone angles.
/// Throws if some class angle is not a multiple of 2pi within
/// tol * (corner count of the class).
std::vector<VertexClass> vertex_cycles(const TranslationSurface& s,
                                       double tol = kDefaultTol);

struct StratumInfo {
  int genus = 0;       // summed over components
  int components = 1;
  std::vector<double> cone_angles;  // one per vertex class
  std::vector<int> orders;          // angle/2pi - 1 per class, including zeros
  std::vector<int> zeros() const;   // positive orders only
  int marked_points() const;        // classes with angle exactly 2pi
};

StratumInfo stratum(const TranslationSurface& s, double tol = kDefaultTol);

int connected_components(const TranslationSurface& s);

/// Linear image of the surface.  For det < 0 the vertex loops are reversed to
/// restore CCW orientation and the pairing is re-indexed accordingly.
TranslationSurface apply_matrix(const TranslationSurface& s, const Mat2& M);

struct PolygonMatch {
  int target = -1;
  int offset = 0;  // edge e of source corresponds to edge (e + offset) mod k of target
};

/// Searches for a bijection of polygons with cyclic re-indexings under which
/// corresponding polygons differ by pure translation and the pairings agree.
std::optional<std::vector<PolygonMatch>> is_translation_equivalent(
    const TranslationSurface& s1, const TranslationSurface& s2,
    double tol = kDefaultTol);

/// True iff apply_matrix(s, M) is translation-equivalent to s, or M is a
/// parabolic shear certified through the cylinder twist criterion (requires an
/// all-rectangle presentation).  |det M| must be 1.
bool is_affine_automorphism(const TranslationSurface& s, const Mat2& M,
                            double tol = kDefaultTol);

struct QuotientResult {
  TranslationSurface surface;
  std::vector<int> kept;  // original polygon -> quotient index, -1 if dropped
};

/// Quotient by a fixed-point-free polygon involution realizing a translation
/// automorphism.  Throws if sigma is not such an automorphism.
QuotientResult quotient_by_involution(const TranslationSurface& s,
                                      const std::vector<int>& sigma,
                                      double tol = kDefaultTol);

/// Maximal chains of axis-aligned rectangles glued left-to-right (horizontal)
/// or bottom-to-top (vertical).  Empty optional when some polygon is not an
/// axis-aligned rectangle.
struct RectCylinder {
  std::vector<int> polys;
  double height = 0.0;         // transverse extent
  double circumference = 0.0;  // extent along the flow
};
std::optional<std::vector<RectCylinder>> rectangle_cylinders(
    const TranslationSurface& s, bool horizontal, double tol = kDefaultTol);

std::string render_svg(const TranslationSurface& s, double tol = kDefaultTol);

struct TsurfParseError : std::runtime_error {
  int line;
  TsurfParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

std::string write_tsurf(const TranslationSurface& s);
TranslationSurface read_tsurf(const std::string& text);

}  // namespace flatgrid
