#include "flatgrid/algebraic.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "flatgrid/semiregular.hpp"

namespace flatgrid {

namespace {

std::string factor_string(const AlgebraicModel::Factor& f, bool exact) {
  std::string root;
  if (exact) {
    if (f.angle_num == 0)
      root = "2";
    else
      root = "2cos(" + std::to_string(f.angle_num) + "pi/" + std::to_string(f.angle_den) + ")";
    std::string s = "(u-" + root + ")";
    if (f.multiplicity != 1) s += "^" + std::to_string(f.multiplicity);
    return s;
  }
  std::string s;
  if (near(f.root, 2.0, 1e-15))
    s = "(u-2)";
  else if (f.root >= 0)
    s = "(u-" + format_double(f.root) + ")";
  else
    s = "(u+" + format_double(-f.root) + ")";
  if (f.multiplicity != 1) s += "^" + std::to_string(f.multiplicity);
  return s;
}

std::string product_string(const std::vector<AlgebraicModel::Factor>& fs, bool exact) {
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += " * ";
    s += factor_string(fs[i], exact);
  }
  return s;
}

}  // namespace

std::string AlgebraicModel::curve_string() const {
  return "y^" + std::to_string(y_exponent) + " = " + product_string(curve_factors, false);
}

std::string AlgebraicModel::curve_string_exact() const {
  return "y^" + std::to_string(y_exponent) + " = " + product_string(curve_factors, true);
}

std::string AlgebraicModel::form_string() const {
  return "y du / (" + product_string(form_factors, false) + ")";
}

AlgebraicModel algebraic_model(int m, int n) {
  if (m < 2 || n < 2 || m * n < 6)
    throw std::invalid_argument("algebraic_model: need m, n >= 2, mn >= 6");
  AlgebraicModel mod;
  mod.m = m;
  mod.n = n;
  auto root_factor = [&](int q, int mult) {
    AlgebraicModel::Factor f;
    f.angle_num = q;
    f.angle_den = m;
    f.root = q == 0 ? 2.0 : 2.0 * std::cos(q * kPi / m);
    f.multiplicity = mult;
    return f;
  };
  if (m % 2 == 1) {
    mod.which = AlgebraicModel::Case::m_odd;
    mod.y_exponent = 2 * n;
    mod.curve_factors.push_back(root_factor(0, 1));
    for (int j = 1; j <= (m - 1) / 2; ++j)
      mod.curve_factors.push_back(root_factor(2 * j, 2));
  } else if (n % 2 == 1) {
    mod.which = AlgebraicModel::Case::m_even_n_odd;
    mod.y_exponent = 2 * n;
    mod.curve_factors.push_back(root_factor(0, n));
    for (int j = 1; j <= m / 2; ++j)
      mod.curve_factors.push_back(root_factor(2 * j - 1, 2));
  } else {
    mod.which = AlgebraicModel::Case::both_even;
    mod.y_exponent = n;
    mod.curve_factors.push_back(root_factor(0, n / 2));
    for (int j = 1; j <= m / 2; ++j)
      mod.curve_factors.push_back(root_factor(2 * j - 1, 1));
  }
  for (const auto& f : mod.curve_factors) {
    AlgebraicModel::Factor g = f;
    g.multiplicity = 1;
    mod.form_factors.push_back(g);
  }
  mod.verified = mod.which == AlgebraicModel::Case::both_even;
  return mod;
}

namespace {

struct Adaptive {
  std::function<double(double)> f;
  double tol;
  int evals = 0;
  double error = 0.0;

  double simpson(double a, double b, double fa, double fm, double fb) const {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double run(double a, double b, double fa, double fm, double fb, double whole,
             double eps, int depth) {
    double m1 = 0.5 * (a + b);
    double lm = 0.5 * (a + m1), rm = 0.5 * (m1 + b);
    double flm = f(lm), frm = f(rm);
    evals += 2;
    double left = simpson(a, m1, fa, flm, fm);
    double right = simpson(m1, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth > 48) throw std::runtime_error("quadrature: subdivision cap reached");
    if (std::fabs(delta) <= 15 * eps || (b - a) < 1e-15) {
      error += std::fabs(delta) / 15;
      return left + right + delta / 15;
    }
    return run(a, m1, fa, flm, fm, left, eps / 2, depth + 1) +
           run(m1, b, fm, frm, fb, right, eps / 2, depth + 1);
  }

  double integrate(double a, double b) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    evals += 3;
    double whole = simpson(a, b, fa, fm, fb);
    return run(a, b, fa, fm, fb, whole, tol, 0);
  }
};

// Integral of g(w) |cos(m w)|^{1/n - 1} dw over [a, b], where cos(m a) = 0 or
// cos(m b) = 0 (or both) give integrable endpoint singularities.  The
// substitution w = endpoint -+ t^n makes the integrand smooth: the Jacobian
// n t^{n-1} cancels the blow-up, leaving the finite limit
// n m^{1/n-1} g(endpoint) at t = 0.  With cos(m * endpoint) = 0 the factor
// equals |sin(m t^n)| exactly, which avoids the cancellation in evaluating
// cos near its zero.
double singular_integral(int m, int n, const std::function<double(double)>& g,
                         double a, double b, bool singular_left, bool singular_right,
                         double tol, double& err_out) {
  double expo = 1.0 / n - 1.0;
  auto plain = [&](double w) { return g(w) * std::pow(std::fabs(std::cos(m * w)), expo); };
  double mid = 0.5 * (a + b);
  double total = 0.0;
  err_out = 0.0;
  // Signed integral from `from` to `to`; with transform set, `from` must be a
  // zero of cos(m w).
  auto one_side = [&](double from, double to, bool transform) {
    Adaptive ad;
    ad.tol = tol / 2;
    if (!transform) {
      ad.f = plain;
      double v = ad.integrate(from, to);
      err_out += ad.error;
      return v;
    }
    double s = to > from ? 1.0 : -1.0;
    double tmax = std::pow(std::fabs(to - from), 1.0 / n);
    ad.f = [&, s](double t) {
      if (t <= 0) return n * std::pow(static_cast<double>(m), expo) * g(from);
      double u = std::pow(t, n);
      return g(from + s * u) * std::pow(std::fabs(std::sin(m * u)), expo) * n *
             std::pow(t, n - 1);
    };
    double v = s * ad.integrate(0.0, tmax);
    err_out += ad.error;
    return v;
  };
  total += singular_left ? one_side(a, mid, true) : one_side(a, mid, false);
  total += singular_right ? -one_side(b, mid, true) : one_side(mid, b, false);
  return total;
}

}  // namespace

QuadratureResult sc_edge_length(int m, int n, int j, double tol) {
  if (m % 2 != 0 || n % 2 != 0)
    throw std::invalid_argument("sc_edge_length: m and n must be even");
  if (j < 0 || j > m / 2 - 1) throw std::invalid_argument("sc_edge_length: j out of range");
  if (!(tol > 0)) throw std::invalid_argument("sc_edge_length: tol must be positive");
  double a = (2.0 * j - 1.0) * kPi / (2 * m);
  double b = (2.0 * j + 1.0) * kPi / (2 * m);
  QuadratureResult res;
  res.j = j;
  double err = 0.0;
  auto g = [](double w) { return std::cos(w); };
  res.value = std::fabs(singular_integral(m, n, g, a, b, true, true, tol, err));
  res.error = err;
  return res;
}

double sc_sine_component(int m, int n, int j, double tol) {
  double c = j * kPi / m;
  double h = kPi / (2 * m);
  auto g = [&](double w) { return std::sin(w - c); };
  double err = 0.0;
  return singular_integral(m, n, g, c - h, c + h, true, true, tol, err);
}

ScRatioReport sc_ratio_check(int m, int n, double tol) {
  if (m % 2 != 0 || n % 2 != 0)
    throw std::invalid_argument("sc_ratio_check: m and n must be even");
  ScRatioReport rep;
  int count = m / 2;
  std::vector<double> ratio(count);
  for (int j = 0; j < count; ++j) {
    QuadratureResult q = sc_edge_length(m, n, j, tol * 1e-3);
    rep.lengths.push_back(q.value);
    ratio[j] = q.value / std::cos(j * kPi / m);
  }
  for (int j = 0; j < count; ++j)
    rep.max_relative_deviation =
        std::max(rep.max_relative_deviation, std::fabs(ratio[j] / ratio[0] - 1.0));

  // Geometric cross-check on the built quotient: the edge path visits the
  // midpoint of a self-identified side of P(m/2-1), then the polygon centers.
  SemiregularQuotientBuild q = semiregular_quotient_build(m, n);
  const TranslationSurface& s = q.surface;
  int mid_poly = q.poly_of_k.at(m / 2 - 1);
  Vec2 midpoint;
  bool found = false;
  for (int e = 0; e < s.edge_count(mid_poly) && !found; ++e) {
    EdgeRef p = s.pairing[mid_poly][e];
    if (p.poly == mid_poly) {
      Vec2 v0 = s.polygons[mid_poly][e];
      Vec2 v1 = s.polygons[mid_poly][(e + 1) % s.edge_count(mid_poly)];
      midpoint = 0.5 * (v0 + v1);
      found = true;
    }
  }
  if (!found) {
    rep.detail = "no self-identified side on the middle polygon";
    return rep;
  }
  std::vector<Vec2> centers(count);
  for (int k = 0; k < count; ++k)
    centers[k] = polygon_centroid(s.polygons[q.poly_of_k.at(k)]);
  rep.measured.resize(count);
  rep.measured[0] = (centers[count - 1] - midpoint).norm();
  for (int j = 1; j < count; ++j)
    rep.measured[j] = (centers[count - j] - centers[count - j - 1]).norm();
  // The j = 0 window is symmetric about w = 0 and covers its image edge
  // twice, so the midpoint distance corresponds to half of l_0.
  std::vector<double> expected(rep.lengths);
  expected[0] *= 0.5;
  double scale = rep.measured[1] / expected[1];
  for (int j = 0; j < count; ++j)
    rep.geometric_deviation = std::max(
        rep.geometric_deviation,
        std::fabs(rep.measured[j] - scale * expected[j]) / rep.measured[1]);
  rep.pass = rep.max_relative_deviation <= tol && rep.geometric_deviation <= tol;
  if (!rep.pass)
    rep.detail = "constancy deviation " + format_double(rep.max_relative_deviation) +
                 ", geometric deviation " + format_double(rep.geometric_deviation);
  return rep;
}

}  // namespace flatgrid
