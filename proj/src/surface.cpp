#include "flatgrid/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace flatgrid {

int TranslationSurface::total_edges() const {
  int t = 0;
  for (const auto& p : polygons) t += static_cast<int>(p.size());
  return t;
}

Vec2 TranslationSurface::edge_vector(int p, int e) const {
  const auto& loop = polygons[p];
  int k = static_cast<int>(loop.size());
  return loop[(e + 1) % k] - loop[e];
}

double TranslationSurface::area() const {
  double s = 0.0;
  for (const auto& p : polygons) s += polygon_area(p);
  return s;
}

int SurfaceBuilder::add_polygon(std::vector<Vec2> loop) {
  polys_.push_back(std::move(loop));
  pairing_.emplace_back(polys_.back().size());
  return static_cast<int>(polys_.size()) - 1;
}

void SurfaceBuilder::glue(int p1, int e1, int p2, int e2) {
  pairing_.at(p1).at(e1) = {p2, e2};
  pairing_.at(p2).at(e2) = {p1, e1};
}

void SurfaceBuilder::translate_polygon(int p, Vec2 t) {
  for (Vec2& v : polys_.at(p)) v = v + t;
}

SurfaceBuilder::Result SurfaceBuilder::finish(double tol) {
  int np = static_cast<int>(polys_.size());
  // Strip zero-length edges.  A removed edge must be unpaired or paired with
  // another zero-length edge.
  std::vector<std::vector<Vec2>> loops(np);
  std::vector<std::vector<EdgeRef>> pair(np);
  std::vector<std::vector<int>> edge_map(np);  // old edge -> new edge or -1
  for (int p = 0; p < np; ++p) {
    const auto& loop = polys_[p];
    int k = static_cast<int>(loop.size());
    edge_map[p].assign(k, -1);
    int next = 0;
    for (int e = 0; e < k; ++e) {
      Vec2 v = loop[(e + 1) % k] - loop[e];
      if (v.norm() <= tol) {
        EdgeRef q = pairing_[p][e];
        if (q.valid()) {
          Vec2 qv = polys_[q.poly][(q.edge + 1) % polys_[q.poly].size()] -
                    polys_[q.poly][q.edge];
          if (qv.norm() > tol)
            throw std::runtime_error("zero-length edge glued to a non-degenerate edge");
        }
        continue;
      }
      edge_map[p][e] = next++;
    }
    loops[p].reserve(next);
    for (int e = 0; e < k; ++e)
      if (edge_map[p][e] >= 0) loops[p].push_back(loop[e]);
    // Vertices merge across removed edges: the kept edges keep their original
    // start points, which is exactly the merged loop.
    pair[p].assign(next, EdgeRef{});
  }
  for (int p = 0; p < np; ++p) {
    int k = static_cast<int>(polys_[p].size());
    for (int e = 0; e < k; ++e) {
      if (edge_map[p][e] < 0) continue;
      EdgeRef q = pairing_[p][e];
      if (!q.valid()) throw std::runtime_error("unpaired non-degenerate edge");
      pair[p][edge_map[p][e]] = {q.poly, edge_map[q.poly][q.edge]};
    }
  }

  // Eliminate degenerate polygons: empty ones vanish, 2-gon slits compose the
  // pairing through their two sides.
  std::vector<bool> dropped(np, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < np; ++p) {
      if (dropped[p]) continue;
      int k = static_cast<int>(loops[p].size());
      if (k == 0) {
        dropped[p] = true;
        changed = true;
      } else if (k == 2) {
        EdgeRef a = pair[p][0], b = pair[p][1];
        if (a.poly == p || b.poly == p)
          throw std::runtime_error("degenerate slit glued to itself");
        pair[a.poly][a.edge] = b;
        pair[b.poly][b.edge] = a;
        dropped[p] = true;
        changed = true;
      } else if (k == 1) {
        throw std::runtime_error("polygon reduced to a single edge");
      }
    }
  }

  Result out;
  out.poly_index.assign(np, -1);
  int idx = 0;
  for (int p = 0; p < np; ++p)
    if (!dropped[p]) out.poly_index[p] = idx++;
  out.surface.polygons.resize(idx);
  out.surface.pairing.resize(idx);
  for (int p = 0; p < np; ++p) {
    if (dropped[p]) continue;
    int q = out.poly_index[p];
    out.surface.polygons[q] = loops[p];
    out.surface.pairing[q].resize(pair[p].size());
    for (size_t e = 0; e < pair[p].size(); ++e) {
      EdgeRef r = pair[p][e];
      if (!r.valid() || dropped[r.poly])
        throw std::runtime_error("pairing routed through a dropped polygon");
      out.surface.pairing[q][e] = {out.poly_index[r.poly], r.edge};
    }
  }
  ValidationReport rep = validate(out.surface, tol);
  if (!rep.ok) throw std::runtime_error("built surface invalid: " + rep.message);
  return out;
}

namespace {

bool segments_properly_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  auto orient = [](Vec2 p, Vec2 q, Vec2 r) {
    double v = cross(q - p, r - p);
    if (v > 1e-12) return 1;
    if (v < -1e-12) return -1;
    return 0;
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

ValidationReport validate(const TranslationSurface& s, double tol) {
  auto fail = [](std::string msg, int p, int e) {
    return ValidationReport{false, std::move(msg), p, e};
  };
  int np = s.polygon_count();
  for (int p = 0; p < np; ++p) {
    const auto& loop = s.polygons[p];
    int k = static_cast<int>(loop.size());
    if (k < 3) return fail("polygon has fewer than 3 edges", p, -1);
    if (static_cast<int>(s.pairing[p].size()) != k)
      return fail("pairing shape mismatch", p, -1);
    if (polygon_area(loop) <= tol) return fail("non-positive polygon area", p, -1);
    for (int e = 0; e < k; ++e)
      if (s.edge_vector(p, e).norm() <= tol)
        return fail("zero-length edge", p, e);
    for (int e = 0; e < k; ++e)
      for (int f = e + 1; f < k; ++f) {
        if (f == e + 1 || (e == 0 && f == k - 1)) continue;
        if (segments_properly_intersect(loop[e], loop[(e + 1) % k], loop[f],
                                        loop[(f + 1) % k]))
          return fail("self-intersecting polygon", p, e);
      }
  }
  for (int p = 0; p < np; ++p) {
    int k = s.edge_count(p);
    for (int e = 0; e < k; ++e) {
      EdgeRef q = s.pairing[p][e];
      if (!q.valid() || q.poly >= np || q.edge >= s.edge_count(q.poly))
        return fail("edge pairing out of range", p, e);
      if (q.poly == p && q.edge == e)
        return fail("edge paired with itself", p, e);
      EdgeRef back = s.pairing[q.poly][q.edge];
      if (!(back == EdgeRef{p, e}))
        return fail("pairing is not an involution", p, e);
      Vec2 v = s.edge_vector(p, e);
      Vec2 w = s.edge_vector(q.poly, q.edge);
      if (!(v + w).approx({0, 0}, tol))
        return fail("edge vector mismatch across gluing", p, e);
    }
  }
  return {};
}

namespace {

double interior_angle(Vec2 incoming, Vec2 outgoing) {
  // Angle swept inside the polygon at the vertex between edge `incoming`
  // (pointing at the vertex) and edge `outgoing` (pointing away).
  double a = std::atan2(-incoming.y, -incoming.x) - std::atan2(outgoing.y, outgoing.x);
  while (a <= 0) a += 2 * kPi;
  while (a > 2 * kPi) a -= 2 * kPi;
  return a;
}

}  // namespace

std::vector<VertexClass> vertex_cycles(const TranslationSurface& s, double tol) {
  int np = s.polygon_count();
  std::vector<std::vector<bool>> seen(np);
  for (int p = 0; p < np; ++p) seen[p].assign(s.edge_count(p), false);

  std::vector<VertexClass> classes;
  for (int p0 = 0; p0 < np; ++p0) {
    int k0 = s.edge_count(p0);
    for (int v0 = 0; v0 < k0; ++v0) {
      if (seen[p0][v0]) continue;
      VertexClass cls;
      int p = p0, v = v0;
      do {
        seen[p][v] = true;
        cls.corners.push_back({p, v});
        int k = s.edge_count(p);
        Vec2 in = s.edge_vector(p, (v + k - 1) % k);
        Vec2 out = s.edge_vector(p, v);
        cls.angle += interior_angle(in, out);
        EdgeRef q = s.pairing[p][(v + k - 1) % k];
        p = q.poly;
        v = q.edge;
      } while (!(p == p0 && v == v0));
      double turns = cls.angle / (2 * kPi);
      cls.multiple = static_cast<int>(std::lround(turns));
      double allowed = tol * static_cast<double>(cls.corners.size());
      if (cls.multiple < 1 || std::fabs(cls.angle - 2 * kPi * cls.multiple) > allowed)
        throw std::runtime_error("cone angle is not a positive multiple of 2*pi");
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::vector<int> StratumInfo::zeros() const {
  std::vector<int> z;
  for (int o : orders)
    if (o > 0) z.push_back(o);
  std::sort(z.begin(), z.end());
  return z;
}

int StratumInfo::marked_points() const {
  int c = 0;
  for (int o : orders)
    if (o == 0) ++c;
  return c;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int connected_components(const TranslationSurface& s) {
  int np = s.polygon_count();
  if (np == 0) return 0;
  Dsu dsu(np);
  for (int p = 0; p < np; ++p)
    for (int e = 0; e < s.edge_count(p); ++e) dsu.unite(p, s.pairing[p][e].poly);
  int c = 0;
  for (int p = 0; p < np; ++p)
    if (dsu.find(p) == p) ++c;
  return c;
}

StratumInfo stratum(const TranslationSurface& s, double tol) {
  auto classes = vertex_cycles(s, tol);
  StratumInfo info;
  info.components = connected_components(s);
  int vertices = static_cast<int>(classes.size());
  int edges = s.total_edges() / 2;
  int faces = s.polygon_count();
  int chi = vertices - edges + faces;
  // chi = sum over components of (2 - 2 g_i)
  int genus2 = 2 * info.components - chi;
  if (genus2 % 2 != 0) throw std::runtime_error("odd Euler characteristic defect");
  info.genus = genus2 / 2;
  for (const auto& c : classes) {
    info.cone_angles.push_back(c.angle);
    info.orders.push_back(c.multiple - 1);
  }
  std::sort(info.orders.begin(), info.orders.end());
  std::sort(info.cone_angles.begin(), info.cone_angles.end());
  return info;
}

TranslationSurface apply_matrix(const TranslationSurface& s, const Mat2& M) {
  double dt = M.det();
  if (std::fabs(dt) < 1e-14) throw std::invalid_argument("apply_matrix: singular matrix");
  TranslationSurface out;
  int np = s.polygon_count();
  out.polygons.resize(np);
  out.pairing.resize(np);
  for (int p = 0; p < np; ++p) {
    const auto& loop = s.polygons[p];
    int k = static_cast<int>(loop.size());
    out.polygons[p].resize(k);
    out.pairing[p].resize(k);
    if (dt > 0) {
      for (int v = 0; v < k; ++v) out.polygons[p][v] = M.apply(loop[v]);
      out.pairing[p] = s.pairing[p];
    } else {
      // Reverse the loop to restore CCW orientation; old edge e becomes
      // new edge k-1-e, reversed.
      for (int v = 0; v < k; ++v) out.polygons[p][v] = M.apply(loop[(k - v) % k]);
      for (int e = 0; e < k; ++e) {
        EdgeRef q = s.pairing[p][e];
        int kq = s.edge_count(q.poly);
        out.pairing[p][k - 1 - e] = {q.poly, kq - 1 - q.edge};
      }
    }
  }
  return out;
}

QuotientResult quotient_by_involution(const TranslationSurface& s,
                                      const std::vector<int>& sigma, double tol) {
  int np = s.polygon_count();
  if (static_cast<int>(sigma.size()) != np)
    throw std::invalid_argument("quotient: sigma size mismatch");
  for (int p = 0; p < np; ++p) {
    if (sigma[p] < 0 || sigma[p] >= np || sigma[p] == p)
      throw std::invalid_argument("quotient: sigma must be a fixed-point-free involution");
    if (sigma[sigma[p]] != p)
      throw std::invalid_argument("quotient: sigma is not an involution");
  }

  // Offsets: edge e of p corresponds to edge (e + off[p]) mod k of sigma(p),
  // with the two loops differing by pure translation.  Candidate offsets are
  // filtered by pairing equivariance.
  std::vector<std::vector<int>> candidates(np);
  for (int p = 0; p < np; ++p) {
    auto ev_p = edge_vectors(s.polygons[p]);
    auto ev_q = edge_vectors(s.polygons[sigma[p]]);
    candidates[p] = cyclic_match_offsets(ev_p, ev_q, tol);
    if (candidates[p].empty())
      throw std::invalid_argument("quotient: sigma image is not a translate");
  }
  std::vector<int> off(np, -1);
  auto equivariant_all = [&]() {
    for (int p = 0; p < np; ++p) {
      int k = s.edge_count(p);
      int q = sigma[p];
      for (int e = 0; e < k; ++e) {
        EdgeRef a = s.pairing[p][e];
        EdgeRef b = s.pairing[q][(e + off[p]) % k];
        if (sigma[a.poly] != b.poly) return false;
        int ka = s.edge_count(a.poly);
        if ((a.edge + off[a.poly]) % ka != b.edge) return false;
      }
    }
    return true;
  };
  // One offset choice per sigma-orbit (the partner's offset is forced by the
  // involution); backtrack over the few symmetric alternatives.
  std::vector<int> reps;
  for (int p = 0; p < np; ++p)
    if (p <= sigma[p]) reps.push_back(p);
  auto search = [&](auto&& self, size_t i) -> bool {
    if (i == reps.size()) return equivariant_all();
    int p = reps[i];
    int q = sigma[p];
    int k = s.edge_count(p);
    for (int o : candidates[p]) {
      off[p] = o;
      off[q] = (k - o % k) % k;
      if (self(self, i + 1)) return true;
    }
    off[p] = off[q] = -1;
    return false;
  };
  if (!search(search, 0))
    throw std::invalid_argument("quotient: sigma does not respect the pairing");

  QuotientResult out;
  out.kept.assign(np, -1);
  int idx = 0;
  for (int p = 0; p < np; ++p)
    if (p < sigma[p]) out.kept[p] = idx++;
  out.surface.polygons.resize(idx);
  out.surface.pairing.resize(idx);
  for (int p = 0; p < np; ++p) {
    if (out.kept[p] < 0) continue;
    int q = out.kept[p];
    out.surface.polygons[q] = s.polygons[p];
    int k = s.edge_count(p);
    out.surface.pairing[q].resize(k);
    for (int e = 0; e < k; ++e) {
      EdgeRef a = s.pairing[p][e];
      if (out.kept[a.poly] >= 0) {
        out.surface.pairing[q][e] = {out.kept[a.poly], a.edge};
      } else {
        int rp = sigma[a.poly];
        int ka = s.edge_count(a.poly);
        out.surface.pairing[q][e] = {out.kept[rp], (a.edge + off[a.poly]) % ka};
      }
    }
  }
  ValidationReport rep = validate(out.surface, tol);
  if (!rep.ok) throw std::runtime_error("quotient surface invalid: " + rep.message);
  return out;
}

}  // namespace flatgrid
