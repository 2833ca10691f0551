#include <cmath>

#include "doctest.h"
#include "flatgrid/semiregular.hpp"
#include "flatgrid/thurston.hpp"
#include "oracles.hpp"

using namespace flatgrid;

namespace {

TranslationSurface unit_torus() {
  TranslationSurface s;
  s.polygons = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  s.pairing = {{{0, 2}, {0, 3}, {0, 0}, {0, 1}}};
  return s;
}

TranslationSurface grid_surface(int m, int n) {
  return rectangle_surface(grid_graph(m, n).graph, eigen_width(m, n));
}

}  // namespace

TEST_CASE("unit torus validates; a skewed pairing does not") {
  TranslationSurface t = unit_torus();
  CHECK(validate(t).ok);

  // pair the bottom with the right side: vectors do not match
  TranslationSurface bad = t;
  bad.pairing[0] = {{0, 1}, {0, 0}, {0, 3}, {0, 2}};
  ValidationReport r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("edge vector mismatch") != std::string::npos);
}

TEST_CASE("validation failure modes carry indices") {
  TranslationSurface s = unit_torus();
  s.pairing[0][0] = {0, 0};
  CHECK_FALSE(validate(s).ok);

  TranslationSurface open_loop;
  open_loop.polygons = {{{0, 0}, {1, 0}, {2, 2}, {0, 1}, {-1, 5}}};
  open_loop.pairing = {{{0, 2}, {0, 3}, {0, 0}, {0, 1}, {0, 4}}};
  CHECK_FALSE(validate(open_loop).ok);
}

TEST_CASE("vertex cycles of the torus and grid surfaces") {
  auto classes = vertex_cycles(unit_torus());
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].angle == doctest::Approx(2 * kPi).epsilon(1e-12));

  // Y(5,4): one singular class of angle 2pi * 11
  auto y54 = semiregular_surface(5, 4);
  auto cls54 = vertex_cycles(y54);
  REQUIRE(cls54.size() == 1);
  CHECK(cls54[0].angle == doctest::Approx(2 * kPi * 11).epsilon(1e-9));

  // Y(6,4): two classes, each of angle 2pi * 7
  auto cls64 = vertex_cycles(semiregular_surface(6, 4));
  REQUIRE(cls64.size() == 2);
  for (const auto& c : cls64) CHECK(c.angle == doctest::Approx(2 * kPi * 7).epsilon(1e-9));
}

TEST_CASE("stratum values") {
  StratumInfo s54 = stratum(grid_surface(5, 4));
  CHECK(s54.genus == 6);
  CHECK(s54.zeros() == std::vector<int>{10});
  CHECK(s54.components == 1);

  StratumInfo s64 = stratum(grid_surface(6, 4));
  CHECK(s64.genus == 7);
  CHECK(s64.zeros() == std::vector<int>{6, 6});

  StratumInfo q84 = stratum(semiregular_quotient(8, 4));
  CHECK(q84.genus == 5);
  CHECK(q84.zeros() == std::vector<int>{4, 4});
}

TEST_CASE("gauss-bonnet holds on every constructed surface") {
  for (auto [m, n] : {std::pair{5, 4}, {6, 4}, {2, 3}, {3, 3}, {7, 2}}) {
    for (const TranslationSurface& s :
         {grid_surface(m, n), semiregular_surface(m, n)}) {
      StratumInfo st = stratum(s);
      int sum = 0;
      for (int o : st.orders) sum += o;
      CHECK(sum == 2 * st.genus - 2 * st.components);
    }
  }
}

TEST_CASE("apply_matrix identity, involution, area scaling") {
  TranslationSurface s = grid_surface(5, 4);
  CHECK(is_translation_equivalent(apply_matrix(s, Mat2::identity()), s));

  Mat2 c{0, -1, -1, 0};
  CHECK(is_translation_equivalent(apply_matrix(apply_matrix(s, c), c), s));

  Mat2 dmu4{std::sqrt(2.0), 1, 0, -1};  // |det| = csc(pi/4)
  double scaled = apply_matrix(s, dmu4).area();
  CHECK(scaled == doctest::Approx(s.area() * std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(apply_matrix(s, Mat2{1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("translation equivalence: reflexive, translation invariant, model separating") {
  TranslationSurface s = grid_surface(5, 4);
  auto self_match = is_translation_equivalent(s, s);
  REQUIRE(self_match);

  TranslationSurface moved = s;
  for (auto& loop : moved.polygons)
    for (auto& v : loop) v = v + Vec2{7, -3};
  CHECK(is_translation_equivalent(s, moved));

  TranslationSurface s45 = grid_surface(4, 5);
  CHECK_FALSE(is_translation_equivalent(s, s45));
  CHECK(is_translation_equivalent(apply_matrix(s, Mat2{-1, 0, 0, 1}), s45));

  // transitivity spot check across two independent translations
  TranslationSurface a = moved;
  TranslationSurface b = moved;
  for (auto& loop : b.polygons)
    for (auto& v : loop) v = v + Vec2{-2, 11};
  REQUIRE(is_translation_equivalent(s, a));
  REQUIRE(is_translation_equivalent(a, b));
  CHECK(is_translation_equivalent(s, b));
}

TEST_CASE("inverse matrix consistency on random unimodular matrices") {
  TranslationSurface s = semiregular_surface(5, 4);
  oracles::UnimodularSampler sampler;
  for (int i = 0; i < 100; ++i) {
    auto [m, inv] = sampler.next();
    CHECK(is_translation_equivalent(apply_matrix(apply_matrix(s, m), inv), s, 1e-7));
  }
}

TEST_CASE("affine automorphism basics") {
  TranslationSurface y54 = semiregular_surface(5, 4);
  CHECK(is_affine_automorphism(y54, Mat2::identity()));
  CHECK(is_affine_automorphism(y54, -Mat2::identity()));
  // E is an isometry of the semiregular model but not of the rectangle model
  Mat2 e{-1, 0, 0, 1};
  CHECK(is_affine_automorphism(y54, e));
  CHECK_FALSE(is_affine_automorphism(grid_surface(5, 4), e));
  // E on the square grid surface
  CHECK(is_affine_automorphism(grid_surface(4, 4), e));
  CHECK(is_affine_automorphism(grid_surface(3, 3), e));
  CHECK_THROWS_AS(is_affine_automorphism(y54, Mat2{2, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("minus identity on semiregular surfaces") {
  for (auto [m, n] : {std::pair{5, 4}, {4, 4}, {2, 3}, {3, 4}})
    CHECK(is_affine_automorphism(semiregular_surface(m, n), -Mat2::identity()));
}

TEST_CASE("quotient halves polygons, edges, and area") {
  SemiregularBuild y = semiregular_surface_build(6, 4);
  std::vector<int> sigma(y.surface.polygon_count());
  for (int k = 0; k < 6; ++k) sigma[y.poly_of_k[k]] = y.poly_of_k[5 - k];
  QuotientResult q = quotient_by_involution(y.surface, sigma);
  CHECK(q.surface.polygon_count() * 2 == y.surface.polygon_count());
  CHECK(q.surface.total_edges() * 2 == y.surface.total_edges());
  CHECK(q.surface.area() == doctest::Approx(y.surface.area() / 2).epsilon(1e-12));
}

TEST_CASE("quotient rejects non-automorphisms") {
  TranslationSurface s = semiregular_surface(6, 4);
  std::vector<int> fixed_point(s.polygon_count());
  for (int i = 0; i < s.polygon_count(); ++i) fixed_point[i] = i;
  CHECK_THROWS_AS(quotient_by_involution(s, fixed_point), std::invalid_argument);

  // swapping non-translate polygons must fail
  std::vector<int> bad = {1, 0, 3, 2, 5, 4};
  CHECK_THROWS_AS(quotient_by_involution(s, bad), std::invalid_argument);
}

TEST_CASE("grid-side central quotient matches the semiregular quotient") {
  for (auto [m, n] : {std::pair{4, 4}, {6, 4}}) {
    GridGraph g = grid_graph(m, n);
    TranslationSurface x = grid_surface(m, n);
    std::vector<int> sigma(x.polygon_count());
    for (int e = 0; e < g.graph.edge_count(); ++e) {
      GraphNode u = g.graph.nodes[g.graph.edges[e].u];
      GraphNode v = g.graph.nodes[g.graph.edges[e].v];
      sigma[e] = g.edge_index({m - u.i, n - u.j}, {m - v.i, n - v.j});
    }
    StratumInfo xe = stratum(quotient_by_involution(x, sigma).surface);
    StratumInfo ye = stratum(semiregular_quotient(m, n));
    CHECK(xe.genus == ye.genus);
    CHECK(xe.zeros() == ye.zeros());
  }
  // Y(4,4)/iota' is a torus
  CHECK(stratum(semiregular_quotient(4, 4)).genus == 1);
}

TEST_CASE("connected components") {
  CHECK(connected_components(unit_torus()) == 1);
  CHECK(connected_components(grid_surface(6, 4)) == 1);
  CHECK(connected_components(semiregular_surface(6, 4)) == 1);
  CHECK(connected_components(semiregular_surface(4, 5)) == 1);

  TranslationSurface two = unit_torus();
  TranslationSurface other = unit_torus();
  two.polygons.push_back(other.polygons[0]);
  two.pairing.push_back({{1, 2}, {1, 3}, {1, 0}, {1, 1}});
  CHECK(connected_components(two) == 2);
  CHECK(stratum(two).components == 2);
}

TEST_CASE("tsurf round trip is bit exact") {
  for (const TranslationSurface& s : {grid_surface(5, 4), semiregular_surface(6, 4)}) {
    std::string text = write_tsurf(s);
    TranslationSurface back = read_tsurf(text);
    REQUIRE(back.polygon_count() == s.polygon_count());
    for (int p = 0; p < s.polygon_count(); ++p)
      for (int v = 0; v < s.edge_count(p); ++v) {
        CHECK(back.polygons[p][v].x == s.polygons[p][v].x);
        CHECK(back.polygons[p][v].y == s.polygons[p][v].y);
      }
    CHECK(write_tsurf(back) == text);
    CHECK(is_translation_equivalent(back, s));
  }
}

TEST_CASE("tsurf parse errors carry line numbers") {
  CHECK_THROWS_AS(read_tsurf(""), TsurfParseError);
  CHECK_THROWS_AS(read_tsurf("TSURF 2\npolygons 0\n"), TsurfParseError);
  try {
    read_tsurf("TSURF 1\npolygons 1\npoly 0 4 0 0 1 0 1 1 0 banana\n");
    CHECK(false);
  } catch (const TsurfParseError& e) {
    CHECK(e.line == 3);
  }
  // unglued edge
  CHECK_THROWS_AS(read_tsurf("TSURF 1\npolygons 1\npoly 0 3 0 0 1 0 0 1\n"),
                  TsurfParseError);
}

TEST_CASE("svg output is well formed and draws every face") {
  TranslationSurface t = unit_torus();
  std::string svg = render_svg(t);
  CHECK(svg.find("<?xml") == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

  std::string y64 = render_svg(semiregular_surface(6, 4));
  size_t count = 0, pos = 0;
  while ((pos = y64.find("<polygon", pos)) != std::string::npos) {
    ++count;
    pos += 8;
  }
  CHECK(count == 6);
}

TEST_CASE("rectangle cylinders and the twist criterion") {
  TranslationSurface s = grid_surface(5, 4);
  auto h = rectangle_cylinders(s, true);
  auto v = rectangle_cylinders(s, false);
  REQUIRE(h);
  REQUIRE(v);
  CHECK(h->size() == 6);
  CHECK(v->size() == 6);
  // non-rectangular presentations are declined
  CHECK_FALSE(rectangle_cylinders(semiregular_surface(5, 4), true));
}
