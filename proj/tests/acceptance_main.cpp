// Acceptance suite: ten deterministic criteria, one pass/fail line each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "flatgrid/affine_equiv.hpp"
#include "flatgrid/algebraic.hpp"
#include "flatgrid/obstruction.hpp"
#include "flatgrid/semiregular.hpp"
#include "flatgrid/sweep.hpp"
#include "flatgrid/thurston.hpp"
#include "flatgrid/veech.hpp"
#include "oracles.hpp"

using namespace flatgrid;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

TranslationSurface grid_surface(int m, int n) {
  return rectangle_surface(grid_graph(m, n).graph, eigen_width(m, n));
}

bool fail(std::string& msg, const std::string& what) {
  if (msg.empty()) msg = what;
  return false;
}

// 1. grid strata, 2 <= m, n <= 10, exact integers, under 10 s
bool criterion_grid_strata(std::string& msg) {
  auto t0 = std::chrono::steady_clock::now();
  for (int m = 2; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n) {
      if (m * n < 6) continue;
      StratumInfo st = stratum(grid_surface(m, n));
      ClosedFormStratum f = grid_stratum_formula(m, n);
      auto zs = st.zeros();
      bool ok = st.genus == f.genus && static_cast<int>(zs.size()) == f.zeros;
      for (int z : zs) ok = ok && z == f.zero_order;
      if (!ok)
        return fail(msg, "stratum mismatch at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10.0) return fail(msg, "took " + std::to_string(secs) + " s");
  msg = std::to_string(secs) + " s";
  return true;
}

// 2. quotient strata, even 4 <= m, n <= 12
bool criterion_quotient_strata(std::string& msg) {
  for (int m = 4; m <= 12; m += 2)
    for (int n = 4; n <= 12; n += 2) {
      StratumInfo st = stratum(semiregular_quotient(m, n));
      ClosedFormStratum f = quotient_stratum_formula(m, n);
      auto zs = st.zeros();
      bool ok = st.genus == f.genus && static_cast<int>(zs.size()) == f.zeros;
      for (int z : zs) ok = ok && z == f.zero_order;
      if (m <= 4 && n <= 4) ok = ok && st.genus == 1;
      if (!ok)
        return fail(msg, "quotient stratum mismatch at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
    }
  return true;
}

// 3. semiregular decomposition, 2 <= m, n <= 8
bool criterion_decomposition(std::string& msg) {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      if (m * n < 6) continue;
      VerifyReport a = verify_mu(m, n);
      VerifyReport b = verify_nu(m, n);
      if (!a.pass || a.max_deviation >= 1e-9)
        return fail(msg, "verify_mu failed at (" + std::to_string(m) + "," +
                             std::to_string(n) + "): " + a.detail);
      if (!b.pass || b.max_deviation >= 1e-9)
        return fail(msg, "verify_nu failed at (" + std::to_string(m) + "," +
                             std::to_string(n) + "): " + b.detail);
      double want = 1.0 / std::sin(kPi / n);
      if (std::fabs(std::fabs(mu_derivative(n).det()) - want) > 1e-9)
        return fail(msg, "determinant scaling failed");
      double got = semiregular_surface(m, n).area() / grid_surface(m, n).area();
      if (std::fabs(got - want) > 1e-9)
        return fail(msg, "area scaling failed at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
    }
  return true;
}

// 4. eigen structure across the sweep of criterion 1
bool criterion_eigen(std::string& msg) {
  for (int m = 2; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n) {
      if (m * n < 6) continue;
      GridGraph g = grid_graph(m, n);
      WidthFunction w = eigen_width(m, n);
      double lambda_closed = 2 * std::cos(kPi / m) + 2 * std::cos(kPi / n);
      EigenReport er = check_eigen(g.graph, w);
      if (!er.ok || std::fabs(er.lambda - lambda_closed) > 1e-10)
        return fail(msg, "check_eigen disagrees at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
      PowerIterationResult pi = power_iteration(g.graph);
      if (std::fabs(pi.lambda - lambda_closed) > 1e-10)
        return fail(msg, "power iteration eigenvalue at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
      double mx = w.max_value();
      for (int v = 0; v < g.graph.node_count(); ++v)
        if (std::fabs(pi.w.values[v] - w.values[v] / mx) > 1e-10)
          return fail(msg, "power iteration eigenvector at (" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
      for (auto dir : {Cylinder::Direction::horizontal, Cylinder::Direction::vertical})
        for (const Cylinder& c : cylinders(g.graph, w, dir))
          if (std::fabs(c.modulus() - 1.0 / lambda_closed) > 1e-9)
            return fail(msg, "cylinder modulus at (" + std::to_string(m) + "," +
                                 std::to_string(n) + ")");
    }
  return true;
}

// 5. Veech generators, 2 <= m, n <= 6, plus relations through 12 at 1e-12
bool criterion_generators(std::string& msg) {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n) {
      if (m * n < 6) continue;
      VerifyGeneratorsReport r = verify_generators(m, n);
      if (!r.pass)
        return fail(msg, "generator certification failed at (" + std::to_string(m) +
                             "," + std::to_string(n) + "): " + r.detail);
      bool both_even = m % 2 == 0 && n % 2 == 0;
      if (both_even && !r.surface_is_torus) {
        bool yn_rejected = true;
        for (const auto& oc : r.orthogonal)
          if (oc.name == "Yn") yn_rejected = !oc.is_automorphism;
        if (!yn_rejected)
          return fail(msg, "Y_n unexpectedly certified at (" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
      }
    }
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      RelationReport rel = relation_check(m, n, 1e-12);
      if (!rel.pass)
        return fail(msg, "relation failure at (" + std::to_string(m) + "," +
                             std::to_string(n) + "): " + rel.failures.front());
    }
  return true;
}

// 6. standard parabolics certified for 2 <= m, n <= 5
bool criterion_parabolics(std::string& msg) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n) {
      if (m * n < 6) continue;
      GridGraph g = grid_graph(m, n);
      WidthFunction w = eigen_width(m, n);
      TranslationSurface s = rectangle_surface(g.graph, w);
      double lambda = check_eigen(g.graph, w).lambda;
      auto [p0, q0] = standard_parabolics(lambda);
      if (!is_affine_automorphism(s, p0) || !is_affine_automorphism(s, q0))
        return fail(msg, "parabolic not certified at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
    }
  return true;
}

// 7. arithmeticity table
bool criterion_arithmetic(std::string& msg) {
  auto expected = [](int m, int n) {
    if (m > n) std::swap(m, n);
    return (m == 2 && (n == 3 || n == 4 || n == 6)) || (m == n && (m == 3 || m == 4 || m == 6));
  };
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n)
      if (is_arithmetic(m, n) != expected(m, n))
        return fail(msg, "arithmeticity disagrees at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
  return true;
}

// 8. obstruction oracle agreement, even 4 <= m, n <= 40, under 5 s
bool criterion_obstruction(std::string& msg) {
  auto t0 = std::chrono::steady_clock::now();
  for (int m = 4; m <= 40; m += 2)
    for (int n = 4; n <= 40; n += 2) {
      bool excluded = excluded_triangle_group(m, n);
      auto witness = galois_witness(m, n);
      bool fields = trace_fields_equal(std::min(m, n), std::max(m, n));
      if (excluded != witness.has_value() || excluded == fields)
        return fail(msg, "oracle disagreement at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
      if (witness) {
        double k = static_cast<double>(*witness);
        if (std::fabs(std::cos(k * kPi / m) + std::cos(kPi / m)) > 1e-12 ||
            std::fabs(std::cos(k * kPi / n) + std::cos(kPi / n)) > 1e-12)
          return fail(msg, "witness trigonometry at (" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
      }
    }
  for (int n = 3; n <= 40; ++n) {
    bool via_phi = euler_phi(2LL * n) / euler_phi(n) == 1;
    if (trace_fields_equal(2, n) != (n % 2 == 1) || via_phi != (n % 2 == 1))
      return fail(msg, "m = 2 phi ratio at n = " + std::to_string(n));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 5.0) return fail(msg, "took " + std::to_string(secs) + " s");
  msg = std::to_string(secs) + " s";
  return true;
}

// 9. Schwarz-Christoffel ratios at 1e-6
bool criterion_schwarz_christoffel(std::string& msg) {
  for (auto [m, n] : {std::pair{4, 4}, {6, 4}, {8, 4}, {6, 6}, {6, 8}}) {
    ScRatioReport r = sc_ratio_check(m, n, 1e-6);
    if (!r.pass)
      return fail(msg, "sc_ratio_check failed at (" + std::to_string(m) + "," +
                           std::to_string(n) + "): " + r.detail);
  }
  double ratio = sc_edge_length(6, 4, 2, 1e-9).value / sc_edge_length(6, 4, 1, 1e-9).value;
  if (std::fabs(ratio - 1.0 / std::sqrt(3.0)) > 1e-6)
    return fail(msg, "l2/l1 ratio for (6,4)");
  return true;
}

// 10. global property suites
bool criterion_global(std::string& msg) {
  // Gauss-Bonnet on every constructed surface
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      if (m * n < 6) continue;
      std::vector<TranslationSurface> all = {grid_surface(m, n), semiregular_surface(m, n)};
      if (m % 2 == 0 && n % 2 == 0) all.push_back(semiregular_quotient(m, n));
      for (const TranslationSurface& s : all) {
        StratumInfo st = stratum(s);
        int sum = 0;
        for (int o : st.orders) sum += o;
        if (sum != 2 * st.genus - 2 * st.components)
          return fail(msg, "Gauss-Bonnet failed at (" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
      }
    }
  // TSURF round trips bit-exactly
  for (auto [m, n] : {std::pair{5, 4}, {6, 4}, {2, 3}}) {
    TranslationSurface s = semiregular_surface(m, n);
    std::string text = write_tsurf(s);
    TranslationSurface back = read_tsurf(text);
    if (write_tsurf(back) != text) return fail(msg, "TSURF round trip not bit-exact");
    for (int p = 0; p < s.polygon_count(); ++p)
      for (int v = 0; v < s.edge_count(p); ++v)
        if (back.polygons[p][v].x != s.polygons[p][v].x ||
            back.polygons[p][v].y != s.polygons[p][v].y)
          return fail(msg, "TSURF coordinates changed");
    if (!is_translation_equivalent(back, s)) return fail(msg, "TSURF equivalence lost");
  }
  // equivalence reflexivity and inverse consistency on 100 unimodular matrices
  TranslationSurface y = semiregular_surface(5, 4);
  if (!is_translation_equivalent(y, y)) return fail(msg, "reflexivity failed");
  oracles::UnimodularSampler sampler;
  for (int i = 0; i < 100; ++i) {
    auto [mat, inv] = sampler.next();
    if (!is_translation_equivalent(apply_matrix(apply_matrix(y, mat), inv), y, 1e-7))
      return fail(msg, "inverse consistency failed at sample " + std::to_string(i));
  }
  // quotient halves polygons, edges, area
  for (auto [m, n] : {std::pair{6, 4}, {4, 4}, {6, 10}}) {
    TranslationSurface full = semiregular_surface(m, n);
    TranslationSurface half = semiregular_quotient(m, n);
    if (half.polygon_count() * 2 != full.polygon_count() ||
        half.total_edges() * 2 != full.total_edges() ||
        std::fabs(half.area() * 2 - full.area()) > 1e-9)
      return fail(msg, "quotient halving failed at (" + std::to_string(m) + "," +
                           std::to_string(n) + ")");
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 grid strata (2..10) match the closed forms", criterion_grid_strata},
      {"2 quotient strata (even 4..12) match the closed forms", criterion_quotient_strata},
      {"3 semiregular decomposition verified (2..8)", criterion_decomposition},
      {"4 eigen structure and cylinder moduli (2..10)", criterion_eigen},
      {"5 Veech generator certification (2..6) and relations (..12)", criterion_generators},
      {"6 standard parabolics certified (2..5)", criterion_parabolics},
      {"7 arithmeticity table (2..12)", criterion_arithmetic},
      {"8 obstruction oracle agreement (even 4..40)", criterion_obstruction},
      {"9 Schwarz-Christoffel side ratios at 1e-6", criterion_schwarz_christoffel},
      {"10 global property suites", criterion_global},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string msg;
    bool ok = false;
    try {
      ok = c.run(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %s%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                msg.empty() ? "" : " -- ", msg.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
