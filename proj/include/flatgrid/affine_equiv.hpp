#pragma once

#include <string>
#include <vector>

#include "flatgrid/ribbon_graph.hpp"
#include "flatgrid/semiregular.hpp"
#include "flatgrid/surface.hpp"

namespace flatgrid {

/// Derivative of the affine map from the rectangle surface onto the
/// semiregular one: [[csc pi/n, cot pi/n],[0,-1]].
Mat2 mu_derivative(int n);

/// Derivative of the companion map onto the transposed family:
/// [[-csc pi/m, cot pi/m],[0,-1]].  Equals mu_derivative(m) * E.
Mat2 nu_derivative(int m);

/// mu_derivative composed with the x-axis reflection on the source; this is
/// the orientation-preserving representative, and the one under which the
/// staircase edge vectors map to the semiregular edge vectors index by index.
Mat2 mu_derivative_aligned(int n);
Mat2 nu_derivative_aligned(int m);

/// Horizontal augmented-graph edges v_{k,i} v_{k+1,i} for 0 < i < n (the k-th
/// column), as augmented edge indices.
std::vector<int> column_edges(const AugmentedGridGraph& g, int k);

/// The 2n-gon carved out of the rectangle surface around column k: edge
/// vectors are signed positive diagonals of the (possibly degenerate)
/// rectangles prescribed case by case for odd and even k.
struct StaircasePolygon {
  int k = 0;
  std::vector<Vec2> edge_vecs;  // 2n vectors, closing up to rounding
  double closure_residual = 0.0;
  double area() const;
};

StaircasePolygon staircase_polygon(int m, int n, int k);

struct VerifyReport {
  bool pass = false;
  double max_deviation = 0.0;
  int fail_k = -1;
  int fail_i = -1;
  std::string detail;
};

/// Checks, for every k, that the aligned derivative maps the staircase edge
/// vectors onto the P(k) edge vectors index by index, that the printed
/// derivative maps the staircase onto P(k) as a polygon, and that the
/// staircase areas add up to the rectangle surface area.
VerifyReport verify_mu(int m, int n, double tol = kDefaultTol);

/// Factors through the transpose map (derivative E) and verify_mu on (n,m);
/// also checks nu_derivative == mu_derivative(m) * E and that E carries the
/// (m,n) rectangle surface onto the (n,m) one.
VerifyReport verify_nu(int m, int n, double tol = kDefaultTol);

/// For m, n even: the central symmetry maps column k to column m-1-k, P(k)
/// and P(m-1-k) are translates, and the swap is a translation automorphism of
/// the semiregular surface.
VerifyReport verify_iota_conjugacy(int m, int n, double tol = kDefaultTol);

}  // namespace flatgrid
