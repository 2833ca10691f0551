#include <cmath>

#include "doctest.h"
#include "flatgrid/semiregular.hpp"
#include "flatgrid/sweep.hpp"
#include "flatgrid/thurston.hpp"

using namespace flatgrid;

TEST_CASE("semiregular polygon edge vectors and closure") {
  SemiregularPolygon p = semiregular_polygon(5, 1, 2);
  REQUIRE(p.loop.size() == 10);
  auto ev = edge_vectors(p.loop);
  for (int i = 0; i < 10; ++i) {
    double len = (i % 2 == 0) ? 1.0 : 2.0;
    CHECK(ev[i].approx(len * Vec2{std::cos(i * kPi / 5), std::sin(i * kPi / 5)}, 1e-12));
  }
  CHECK_THROWS_AS(semiregular_polygon(4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(semiregular_polygon(1, 1, 1), std::invalid_argument);
}

TEST_CASE("degenerate semiregular polygons collapse to regular n-gons") {
  SemiregularPolygon tri = semiregular_polygon(3, 1, 0);
  auto ev = edge_vectors(tri.loop);
  int nonzero = 0;
  for (const Vec2& v : ev)
    if (v.norm() > 1e-12) {
      ++nonzero;
      CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK(nonzero == 3);

  SemiregularPolygon oct = semiregular_polygon(4, 1, 1);
  for (const Vec2& v : edge_vectors(oct.loop))
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("surface polygon case table") {
  // (6,4,0): regular square of side sin(pi/6) = 1/2
  SemiregularPolygon p0 = surface_polygon(6, 4, 0);
  CHECK(p0.a == doctest::Approx(0.0));
  CHECK(p0.b == doctest::Approx(0.5).epsilon(1e-12));

  SemiregularPolygon p2 = surface_polygon(5, 4, 2);
  CHECK(p2.a == doctest::Approx(std::sin(2 * kPi / 5)).epsilon(1e-12));
  CHECK(p2.b == doctest::Approx(std::sin(3 * kPi / 5)).epsilon(1e-12));

  CHECK_THROWS_AS(surface_polygon(5, 4, 5), std::invalid_argument);

  // for m, n even, P(k) and P(m-1-k) are translates (identical edge lists)
  for (auto [m, n] : {std::pair{6, 4}, {4, 6}, {8, 8}})
    for (int k = 0; k < m; ++k) {
      auto a = edge_vectors(surface_polygon(m, n, k).loop);
      auto b = edge_vectors(surface_polygon(m, n, m - 1 - k).loop);
      for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].approx(b[i], 1e-12));
    }
}

TEST_CASE("Y(2,3) is a pair of unit triangles") {
  TranslationSurface s = semiregular_surface(2, 3);
  CHECK(s.polygon_count() == 2);
  CHECK(s.area() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  for (int p = 0; p < 2; ++p) CHECK(s.edge_count(p) == 3);
  CHECK(stratum(s).genus == 1);
}

TEST_CASE("all vertices are singular when the surface is not a torus") {
  for (auto [m, n] : {std::pair{5, 4}, {6, 4}, {3, 4}}) {
    auto classes = vertex_cycles(semiregular_surface(m, n));
    for (const auto& c : classes) CHECK(c.multiple > 1);
  }
}

TEST_CASE("semiregular strata match the closed forms through (10,10)") {
  for (int m = 2; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n) {
      if (m * n < 6) continue;
      StratumInfo st = stratum(semiregular_surface(m, n));
      ClosedFormStratum f = grid_stratum_formula(m, n);
      CHECK(st.genus == f.genus);
      auto zs = st.zeros();
      CHECK(static_cast<int>(zs.size()) == f.zeros);
      for (int z : zs) CHECK(z == f.zero_order);
      CHECK(st.components == 1);
    }
}

TEST_CASE("total cone angle of Y(m,n) is 2pi (mn - m - n)") {
  for (auto [m, n] : {std::pair{5, 4}, {6, 4}, {7, 3}, {2, 5}}) {
    double total = 0;
    for (const auto& c : vertex_cycles(semiregular_surface(m, n))) total += c.angle;
    CHECK(total == doctest::Approx(2 * kPi * (m * n - m - n)).epsilon(1e-9));
  }
}

TEST_CASE("quotient strata and the torus cases") {
  CHECK(stratum(semiregular_quotient(4, 4)).genus == 1);
  CHECK(stratum(semiregular_quotient(2, 4)).genus == 1);

  StratumInfo q84 = stratum(semiregular_quotient(8, 4));
  CHECK(q84.genus == 5);
  CHECK(q84.zeros() == std::vector<int>{4, 4});

  StratumInfo q610 = stratum(semiregular_quotient(6, 10));
  CHECK(q610.genus == 11);
  CHECK(q610.zeros() == std::vector<int>{10, 10});

  CHECK_THROWS_AS(semiregular_quotient(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(semiregular_quotient(4, 5), std::invalid_argument);
}

TEST_CASE("radius formulas agree with measured distances") {
  CHECK(even_radius(4, 1, 1) == doctest::Approx(1.2071067812).epsilon(1e-9));

  for (auto [n, a, b] : {std::tuple{4, 1.0, 1.0}, {5, 1.0, 2.0}, {3, 0.7, 1.3}}) {
    SemiregularPolygon p = semiregular_polygon(n, a, b);
    Vec2 c = polygon_centroid(p.loop);
    for (int i = 0; i < 2 * n; ++i) {
      Vec2 mid = 0.5 * (p.loop[i] + p.loop[(i + 1) % (2 * n)]);
      double r = (mid - c).norm();
      double expected = (i % 2 == 0) ? even_radius(n, a, b) : odd_radius(n, a, b);
      CHECK(r == doctest::Approx(expected).epsilon(1e-9));
    }
  }

  // degenerate case: r_n(0,b) measured against the collapsed polygon
  SemiregularPolygon tri = semiregular_polygon(3, 0.0, 1.0);
  Vec2 c = polygon_centroid(tri.loop);
  for (int i = 0; i < 6; i += 2) {
    Vec2 mid = 0.5 * (tri.loop[i] + tri.loop[(i + 1) % 6]);
    CHECK((mid - c).norm() == doctest::Approx(even_radius(3, 0.0, 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("center distances match the built layout") {
  SemiregularBuild y = semiregular_surface_build(6, 4);
  for (int k = 1; k <= 5; ++k) {
    Vec2 c0 = polygon_centroid(y.surface.polygons[y.poly_of_k[k - 1]]);
    Vec2 c1 = polygon_centroid(y.surface.polygons[y.poly_of_k[k]]);
    CHECK((c1 - c0).norm() == doctest::Approx(center_distance(6, 4, k)).epsilon(1e-9));
  }
  // symmetry in k
  for (int k = 1; k <= 5; ++k)
    CHECK(center_distance(6, 4, k) == doctest::Approx(center_distance(6, 4, 6 - k)));
  CHECK_THROWS_AS(center_distance(6, 4, 0), std::invalid_argument);
}

TEST_CASE("kappa value for (6,4)") {
  double kappa = (std::cos(kPi / 6) + std::cos(kPi / 4)) / std::sin(kPi / 4);
  CHECK(center_distance(6, 4, 1) == doctest::Approx(kappa * std::sin(kPi / 6)).epsilon(1e-12));
}

TEST_CASE("slit polygons are eliminated for n = 2") {
  TranslationSurface s = semiregular_surface(3, 2);
  CHECK(s.polygon_count() == 1);  // only P(1) survives
  CHECK(validate(s).ok);
  CHECK(stratum(s).genus == 1);
  // area matches csc(pi/2) * area of the rectangle surface
  TranslationSurface x = rectangle_surface(grid_graph(3, 2).graph, eigen_width(3, 2));
  CHECK(s.area() == doctest::Approx(x.area()).epsilon(1e-12));

  TranslationSurface s42 = semiregular_surface(4, 2);
  CHECK(validate(s42).ok);
  CHECK(stratum(s42).genus == grid_stratum_formula(4, 2).genus);
}
