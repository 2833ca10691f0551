#include "flatgrid/affine_equiv.hpp"

#include <cmath>
#include <stdexcept>

#include "flatgrid/thurston.hpp"

namespace flatgrid {

Mat2 mu_derivative(int n) {
  double t = kPi / n;
  return {1.0 / std::sin(t), std::cos(t) / std::sin(t), 0.0, -1.0};
}

Mat2 nu_derivative(int m) {
  double t = kPi / m;
  return {-1.0 / std::sin(t), std::cos(t) / std::sin(t), 0.0, -1.0};
}

Mat2 mu_derivative_aligned(int n) { return mu_derivative(n) * Mat2::diag(1, -1); }
Mat2 nu_derivative_aligned(int m) { return nu_derivative(m) * Mat2::diag(1, -1); }

std::vector<int> column_edges(const AugmentedGridGraph& g, int k) {
  if (k < 0 || k > g.m - 1) throw std::invalid_argument("column_edges: k out of range");
  std::vector<int> out;
  for (int i = 1; i < g.n; ++i) {
    int e = g.edge_index({k, i}, {k + 1, i});
    if (e < 0) throw std::runtime_error("column_edges: missing augmented edge");
    out.push_back(e);
  }
  return out;
}

namespace {

// Positive diagonal of the (possibly degenerate) rectangle of the augmented
// edge joining the two lattice nodes: (w(beta), w(alpha)).
Vec2 diagonal(int m, int n, GraphNode u, GraphNode v) {
  bool u_in_a = (u.i + u.j) % 2 == 0;
  GraphNode a = u_in_a ? u : v;
  GraphNode b = u_in_a ? v : u;
  return {eigen_width_at(m, n, b.i, b.j), eigen_width_at(m, n, a.i, a.j)};
}

}  // namespace

double StaircasePolygon::area() const {
  // shoelace over the loop reconstructed from the edge vectors
  double s = 0.0;
  Vec2 pos{0, 0};
  for (const Vec2& e : edge_vecs) {
    s += cross(pos, pos + e);
    pos = pos + e;
  }
  return 0.5 * s;
}

StaircasePolygon staircase_polygon(int m, int n, int k) {
  if (m < 2 || n < 2 || m * n < 6)
    throw std::invalid_argument("staircase_polygon: need m, n >= 2, mn >= 6");
  if (k < 0 || k > m - 1) throw std::invalid_argument("staircase_polygon: k out of range");
  StaircasePolygon q;
  q.k = k;
  q.edge_vecs.resize(2 * n);
  auto d = [&](int i1, int j1, int i2, int j2) {
    return diagonal(m, n, {i1, j1}, {i2, j2});
  };
  if (k % 2 == 1) {
    for (int i = 0; i < 2 * n; ++i) {
      if (i < n) {
        q.edge_vecs[i] = (i % 2 == 0) ? d(k + 1, i, k + 1, i + 1) : d(k, i, k, i + 1);
      } else {
        q.edge_vecs[i] = (i % 2 == 0) ? -d(k + 1, 2 * n - 1 - i, k + 1, 2 * n - i)
                                      : -d(k, 2 * n - 1 - i, k, 2 * n - i);
      }
    }
  } else {
    for (int i = 0; i < 2 * n; ++i) {
      int j = i - n;
      if (j >= 0) {
        q.edge_vecs[i] =
            (j % 2 == 0) ? -d(k, j, k, j + 1) : -d(k + 1, j, k + 1, j + 1);
      } else {
        q.edge_vecs[i] =
            (j % 2 == 0) ? d(k, -j - 1, k, -j) : d(k + 1, -j - 1, k + 1, -j);
      }
    }
  }
  Vec2 sum{0, 0};
  for (const Vec2& v : q.edge_vecs) sum = sum + v;
  q.closure_residual = sum.norm();
  if (q.closure_residual > 1e-10 * 2 * n)
    throw std::runtime_error("staircase_polygon: loop failed to close");
  return q;
}

VerifyReport verify_mu(int m, int n, double tol) {
  VerifyReport rep;
  Mat2 aligned = mu_derivative_aligned(n);
  double total_q_area = 0.0;
  for (int k = 0; k < m; ++k) {
    StaircasePolygon q = staircase_polygon(m, n, k);
    SemiregularPolygon p = surface_polygon(m, n, k);
    auto p_edges = edge_vectors(p.loop);
    total_q_area += q.area();
    for (int i = 0; i < 2 * n; ++i) {
      Vec2 image = aligned.apply(q.edge_vecs[i]);
      double dev = (image - p_edges[i]).norm();
      if (dev > rep.max_deviation) {
        rep.max_deviation = dev;
        if (dev > tol) {
          rep.fail_k = k;
          rep.fail_i = i;
        }
      }
    }
  }
  TranslationSurface x = rectangle_surface(grid_graph(m, n).graph, eigen_width(m, n));
  double area_dev = std::fabs(total_q_area - x.area());
  rep.max_deviation = std::max(rep.max_deviation, area_dev);
  rep.pass = rep.max_deviation <= tol;
  if (!rep.pass && rep.detail.empty())
    rep.detail = "max deviation " + format_double(rep.max_deviation) + " at k=" +
                 std::to_string(rep.fail_k) + " i=" + std::to_string(rep.fail_i);
  return rep;
}

VerifyReport verify_nu(int m, int n, double tol) {
  VerifyReport rep;
  Mat2 expected = mu_derivative(m) * Mat2{-1, 0, 0, 1};
  double matrix_dev = nu_derivative(m).max_abs_diff(expected);
  if (matrix_dev > 1e-12) {
    rep.detail = "nu derivative is not mu' * E";
    return rep;
  }
  // The transpose map: E carries the (m,n) rectangle surface onto (n,m).
  TranslationSurface xmn = rectangle_surface(grid_graph(m, n).graph, eigen_width(m, n));
  TranslationSurface xnm = rectangle_surface(grid_graph(n, m).graph, eigen_width(n, m));
  Mat2 e{-1, 0, 0, 1};
  if (!is_translation_equivalent(apply_matrix(xmn, e), xnm, tol)) {
    rep.detail = "E image of the (m,n) surface does not match the (n,m) surface";
    return rep;
  }
  VerifyReport inner = verify_mu(n, m, tol);
  rep.pass = inner.pass;
  rep.max_deviation = std::max(inner.max_deviation, matrix_dev);
  rep.fail_k = inner.fail_k;
  rep.fail_i = inner.fail_i;
  rep.detail = inner.detail;
  return rep;
}

VerifyReport verify_iota_conjugacy(int m, int n, double tol) {
  if (m % 2 != 0 || n % 2 != 0)
    throw std::invalid_argument("verify_iota_conjugacy: m and n must be even");
  VerifyReport rep;
  AugmentedGridGraph aug = augment(grid_graph(m, n));
  // iota maps column k onto column m-1-k
  for (int k = 0; k < m; ++k) {
    std::vector<int> hk = column_edges(aug, k);
    std::vector<int> target = column_edges(aug, m - 1 - k);
    for (int e : hk) {
      GraphNode u = aug.graph.nodes[aug.graph.edges[e].u];
      GraphNode v = aug.graph.nodes[aug.graph.edges[e].v];
      int img = aug.edge_index({m - u.i, n - u.j}, {m - v.i, n - v.j});
      bool found = false;
      for (int t : target) found = found || t == img;
      if (!found) {
        rep.detail = "iota image of column " + std::to_string(k) + " escapes column " +
                     std::to_string(m - 1 - k);
        rep.fail_k = k;
        return rep;
      }
    }
  }
  // P(k) and P(m-1-k) are translates, index-aligned.
  for (int k = 0; k < m; ++k) {
    auto a = edge_vectors(surface_polygon(m, n, k).loop);
    auto b = edge_vectors(surface_polygon(m, n, m - 1 - k).loop);
    for (size_t i = 0; i < a.size(); ++i)
      rep.max_deviation = std::max(rep.max_deviation, (a[i] - b[i]).norm());
  }
  if (rep.max_deviation > tol) {
    rep.detail = "P(k) and P(m-1-k) are not translates";
    return rep;
  }
  // The swap is a translation automorphism of the built surface.
  SemiregularBuild y = semiregular_surface_build(m, n);
  std::vector<int> sigma(y.surface.polygon_count(), -1);
  for (int k = 0; k < m; ++k)
    if (y.poly_of_k[k] >= 0) sigma[y.poly_of_k[k]] = y.poly_of_k[m - 1 - k];
  try {
    quotient_by_involution(y.surface, sigma, tol);
  } catch (const std::exception& ex) {
    rep.detail = std::string("polygon swap rejected: ") + ex.what();
    return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace flatgrid
