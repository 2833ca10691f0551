#pragma once

#include <string>
#include <vector>

#include "flatgrid/geometry.hpp"

namespace flatgrid {

/// Structured curve equation y^e = prod (u - root)^mult with roots of the
/// form 2 cos(q pi / m), plus the 1-form y du / prod (u - root).
struct AlgebraicModel {
  enum class Case { m_odd, m_even_n_odd, both_even };
  Case which = Case::m_odd;
  int m = 0, n = 0;
  int y_exponent = 0;

  struct Factor {
    int angle_num = 0;  // root = 2 cos(angle_num * pi / angle_den)
    int angle_den = 1;
    double root = 0.0;
    int multiplicity = 1;
  };
  std::vector<Factor> curve_factors;  // sorted by root, descending
  std::vector<Factor> form_factors;   // denominator of the 1-form, all mult 1

  std::string curve_string() const;        // numeric roots
  std::string curve_string_exact() const;  // 2cos(q pi/m) form
  std::string form_string() const;
  bool verified = false;  // only the both-even case carries the length check
};

AlgebraicModel algebraic_model(int m, int n);

struct QuadratureResult {
  int j = 0;
  double value = 0.0;
  double error = 0.0;
};

/// l_j = | integral of cos(w) |cos(m w)|^{1/n - 1} dw | over
/// [(2j-1)pi/2m, (2j+1)pi/2m]; both endpoints carry integrable power
/// singularities, removed by the substitution w = endpoint -+ t^n.
QuadratureResult sc_edge_length(int m, int n, int j, double tol);

/// Size of the odd (sine) component of the same integrand over the symmetric
/// interval around j pi/m; vanishes by symmetry.
double sc_sine_component(int m, int n, int j, double tol);

struct ScRatioReport {
  bool pass = false;
  double max_relative_deviation = 0.0;
  std::vector<double> lengths;            // l_j for j = 0..m/2-1
  std::vector<double> measured;           // centroid/midpoint distances from the built quotient
  double geometric_deviation = 0.0;
  std::string detail;
};

/// Checks that l_j / cos(j pi/m) is constant over j = 0..m/2-1 and that the
/// l_j match the corresponding center distances measured on the built
/// semiregular quotient, both within tol (relative).
ScRatioReport sc_ratio_check(int m, int n, double tol);

}  // namespace flatgrid
