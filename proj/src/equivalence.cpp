#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "flatgrid/surface.hpp"

namespace flatgrid {

namespace {

struct MatchState {
  const TranslationSurface& s1;
  const TranslationSurface& s2;
  double tol;
  std::vector<std::vector<Vec2>> ev1, ev2;
  std::vector<PolygonMatch> match;  // per s1 polygon
  std::vector<int> used;            // s2 polygon -> s1 polygon or -1

  MatchState(const TranslationSurface& a, const TranslationSurface& b, double t)
      : s1(a), s2(b), tol(t) {
    for (const auto& p : a.polygons) ev1.push_back(edge_vectors(p));
    for (const auto& p : b.polygons) ev2.push_back(edge_vectors(p));
    match.assign(a.polygon_count(), PolygonMatch{});
    used.assign(b.polygon_count(), -1);
  }

  // Assign p -> (q, off) and propagate through gluings.  Records assignments
  // in `trail` for rollback.
  bool propagate(int p0, int q0, int off0, std::vector<int>& trail) {
    std::deque<int> queue;
    auto assign = [&](int p, int q, int off) {
      if (match[p].target >= 0)
        return match[p].target == q && match[p].offset == off;
      if (used[q] >= 0) return false;
      if (cyclic_offset_ok(p, q, off) == false) return false;
      match[p] = {q, off};
      used[q] = p;
      trail.push_back(p);
      queue.push_back(p);
      return true;
    };
    if (!assign(p0, q0, off0)) return false;
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      int q = match[p].target, off = match[p].offset;
      int k = s1.edge_count(p);
      for (int e = 0; e < k; ++e) {
        EdgeRef a = s1.pairing[p][e];
        EdgeRef b = s2.pairing[q][(e + off) % k];
        int kb = s2.edge_count(b.poly);
        int ka = s1.edge_count(a.poly);
        if (ka != kb) return false;
        int off2 = ((b.edge - a.edge) % ka + ka) % ka;
        if (!assign(a.poly, b.poly, off2)) return false;
      }
    }
    return true;
  }

  bool cyclic_offset_ok(int p, int q, int off) const {
    const auto& a = ev1[p];
    const auto& b = ev2[q];
    if (a.size() != b.size()) return false;
    int k = static_cast<int>(a.size());
    for (int i = 0; i < k; ++i)
      if (!b[(i + off) % k].approx(a[i], tol)) return false;
    return true;
  }

  void rollback(std::vector<int>& trail, size_t from) {
    while (trail.size() > from) {
      int p = trail.back();
      trail.pop_back();
      used[match[p].target] = -1;
      match[p] = PolygonMatch{};
    }
  }

  // Matches remaining components recursively; seeds by maximal perimeter.
  bool solve(std::vector<int>& trail) {
    int seed = -1;
    double best = -1.0;
    for (int p = 0; p < s1.polygon_count(); ++p) {
      if (match[p].target >= 0) continue;
      double per = polygon_perimeter(s1.polygons[p]);
      if (per > best) {
        best = per;
        seed = p;
      }
    }
    if (seed < 0) return true;
    for (int q = 0; q < s2.polygon_count(); ++q) {
      if (used[q] >= 0) continue;
      for (int off : cyclic_match_offsets(ev1[seed], ev2[q], tol)) {
        size_t mark = trail.size();
        if (propagate(seed, q, off, trail) && solve(trail)) return true;
        rollback(trail, mark);
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<PolygonMatch>> is_translation_equivalent(
    const TranslationSurface& s1, const TranslationSurface& s2, double tol) {
  if (s1.polygon_count() != s2.polygon_count()) return std::nullopt;
  if (s1.total_edges() != s2.total_edges()) return std::nullopt;
  MatchState st(s1, s2, tol);
  std::vector<int> trail;
  if (!st.solve(trail)) return std::nullopt;
  return st.match;
}

std::optional<std::vector<RectCylinder>> rectangle_cylinders(
    const TranslationSurface& s, bool horizontal, double tol) {
  int np = s.polygon_count();
  // bottom[p] = edge index whose vector is (+w, 0); polygons must be
  // axis-aligned rectangles.
  std::vector<int> bottom(np, -1);
  std::vector<double> width(np), height(np);
  for (int p = 0; p < np; ++p) {
    if (s.edge_count(p) != 4) return std::nullopt;
    for (int e = 0; e < 4; ++e) {
      Vec2 v = s.edge_vector(p, e);
      if (v.x > tol && std::fabs(v.y) <= tol) bottom[p] = e;
    }
    if (bottom[p] < 0) return std::nullopt;
    Vec2 b = s.edge_vector(p, bottom[p]);
    Vec2 r = s.edge_vector(p, (bottom[p] + 1) % 4);
    Vec2 t = s.edge_vector(p, (bottom[p] + 2) % 4);
    Vec2 l = s.edge_vector(p, (bottom[p] + 3) % 4);
    if (std::fabs(r.x) > tol || r.y <= tol) return std::nullopt;
    if (!t.approx(-b, tol) || !l.approx(-r, tol)) return std::nullopt;
    width[p] = b.x;
    height[p] = r.y;
  }
  std::vector<RectCylinder> cylinders;
  std::vector<bool> seen(np, false);
  for (int p0 = 0; p0 < np; ++p0) {
    if (seen[p0]) continue;
    RectCylinder cyl;
    int p = p0;
    do {
      seen[p] = true;
      cyl.polys.push_back(p);
      // step across the side shared in the flow direction
      int exit_edge = horizontal ? (bottom[p] + 1) % 4 : (bottom[p] + 2) % 4;
      EdgeRef q = s.pairing[p][exit_edge];
      cyl.circumference += horizontal ? width[p] : height[p];
      p = q.poly;
    } while (p != p0 && !seen[p]);
    if (p != p0) return std::nullopt;  // chain merged into an earlier cylinder
    cyl.height = horizontal ? height[p0] : width[p0];
    cylinders.push_back(std::move(cyl));
  }
  return cylinders;
}

namespace {

// Thurston--Veech twist criterion: a horizontal shear by t is realized by
// simultaneous cylinder twists when t * height/circumference is an integer
// for every horizontal cylinder (similarly for vertical shears).
bool shear_certified(const TranslationSurface& s, double t, bool horizontal,
                     double tol) {
  auto cyls = rectangle_cylinders(s, horizontal, tol);
  if (!cyls) return false;
  for (const auto& c : *cyls) {
    double twist = std::fabs(t) * c.height / c.circumference;
    if (std::fabs(twist - std::lround(twist)) > tol * std::max(1.0, twist))
      return false;
  }
  return true;
}

bool is_pure_shear(const Mat2& M, double tol, double& t, bool& horizontal) {
  if (near(M.a, 1, tol) && near(M.d, 1, tol) && near(M.c, 0, tol) &&
      std::fabs(M.b) > tol) {
    t = M.b;
    horizontal = true;
    return true;
  }
  if (near(M.a, 1, tol) && near(M.d, 1, tol) && near(M.b, 0, tol) &&
      std::fabs(M.c) > tol) {
    t = M.c;
    horizontal = false;
    return true;
  }
  return false;
}

}  // namespace

bool is_affine_automorphism(const TranslationSurface& s, const Mat2& M, double tol) {
  if (!near(std::fabs(M.det()), 1.0, 1e-6))
    throw std::invalid_argument("is_affine_automorphism: |det| must be 1");
  if (is_translation_equivalent(apply_matrix(s, M), s, tol)) return true;
  double t;
  bool horizontal;
  if (is_pure_shear(M, tol, t, horizontal))
    return shear_certified(s, t, horizontal, tol);
  if (is_pure_shear(-M, tol, t, horizontal))
    return shear_certified(s, t, horizontal, tol) &&
           is_affine_automorphism(s, -Mat2::identity(), tol);
  return false;
}

}  // namespace flatgrid
