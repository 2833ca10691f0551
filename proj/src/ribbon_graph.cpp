#include "flatgrid/ribbon_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flatgrid {

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

std::vector<std::vector<int>> BipartiteRibbonGraph::node_stars() const {
  std::vector<std::vector<int>> stars(nodes.size());
  for (int e = 0; e < edge_count(); ++e) {
    stars[edges[e].u].push_back(e);
    stars[edges[e].v].push_back(e);
  }
  return stars;
}

void BipartiteRibbonGraph::check() const {
  if (edges.empty()) throw std::invalid_argument("ribbon graph: empty edge set");
  for (const GraphEdge& e : edges)
    if (node_in_a[e.u] == node_in_a[e.v])
      throw std::invalid_argument("ribbon graph: edge inside one class");
  if (east.size() != edges.size() || north.size() != edges.size())
    throw std::invalid_argument("ribbon graph: permutation size mismatch");
  auto check_perm = [&](const std::vector<int>& perm, bool around_a) {
    std::vector<char> hit(edges.size(), 0);
    for (int e = 0; e < edge_count(); ++e) {
      int f = perm[e];
      if (f < 0 || f >= edge_count() || hit[f])
        throw std::invalid_argument("ribbon graph: not a permutation");
      hit[f] = 1;
      int ve = around_a ? alpha(e) : beta(e);
      int vf = around_a ? alpha(f) : beta(f);
      if (ve != vf)
        throw std::invalid_argument("ribbon graph: permutation leaves a node star");
    }
    // each star must be a single cycle
    std::vector<int> cycle_of(edge_count(), -1);
    int cycles = 0;
    for (int e = 0; e < edge_count(); ++e) {
      if (cycle_of[e] >= 0) continue;
      int f = e;
      do {
        cycle_of[f] = cycles;
        f = perm[f];
      } while (f != e);
      ++cycles;
    }
    std::set<int> star_nodes;
    for (int e = 0; e < edge_count(); ++e)
      star_nodes.insert(around_a ? alpha(e) : beta(e));
    if (cycles != static_cast<int>(star_nodes.size()))
      throw std::invalid_argument("ribbon graph: node star splits into several cycles");
  };
  check_perm(east, true);
  check_perm(north, false);
  // connectivity
  std::vector<char> seen(nodes.size(), 0);
  std::deque<int> queue{edges[0].u};
  seen[edges[0].u] = 1;
  int reached = 1;
  auto stars = node_stars();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : stars[v]) {
      int w = other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < node_count(); ++v)
    if (!seen[v] && !stars[v].empty()) throw std::invalid_argument("ribbon graph: disconnected");
}

double WidthFunction::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

namespace {

// Cyclic direction order around a lattice node: counterclockwise from +x for
// odd columns, clockwise for even columns.
const GraphNode kCcwDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const GraphNode kCwDirs[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};

template <typename NodeIndexFn, typename EdgeIndexFn>
void build_permutations(const std::vector<GraphNode>& nodes,
                        const std::vector<char>& in_a, NodeIndexFn node_index,
                        EdgeIndexFn edge_index, std::vector<int>& east,
                        std::vector<int>& north, int edge_count) {
  east.assign(edge_count, -1);
  north.assign(edge_count, -1);
  for (size_t v = 0; v < nodes.size(); ++v) {
    const GraphNode& a = nodes[v];
    const GraphNode* dirs = (a.i % 2 == 0) ? kCwDirs : kCcwDirs;
    std::vector<int> star;
    for (int d = 0; d < 4; ++d) {
      GraphNode b{a.i + dirs[d].i, a.j + dirs[d].j};
      if (node_index(b.i, b.j) >= 0) {
        int e = edge_index(a, b);
        if (e >= 0) star.push_back(e);
      }
    }
    if (star.empty()) continue;
    std::vector<int>& perm = in_a[v] ? east : north;
    for (size_t r = 0; r < star.size(); ++r)
      perm[star[r]] = star[(r + 1) % star.size()];
  }
}

}  // namespace

int GridGraph::node_index(int i, int j) const {
  auto it = node_lookup_.find({i, j});
  return it == node_lookup_.end() ? -1 : it->second;
}

int GridGraph::edge_index(GraphNode a, GraphNode b) const {
  if (b < a) std::swap(a, b);
  auto it = edge_lookup_.find({{a.i, a.j}, {b.i, b.j}});
  return it == edge_lookup_.end() ? -1 : it->second;
}

GridGraph grid_graph(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("grid_graph: need m, n >= 2");
  if (m * n < 6) throw std::invalid_argument("grid_graph: need mn >= 6 (empty edge set)");
  GridGraph g;
  g.m = m;
  g.n = n;
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < n; ++j) {
      g.node_lookup_[{i, j}] = g.graph.node_count();
      g.graph.nodes.push_back({i, j});
      g.graph.node_in_a.push_back((i + j) % 2 == 0);
    }
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < n; ++j) {
      GraphNode a{i, j};
      for (GraphNode b : {GraphNode{i + 1, j}, GraphNode{i, j + 1}}) {
        if (g.node_index(b.i, b.j) < 0) continue;
        g.edge_lookup_[{{a.i, a.j}, {b.i, b.j}}] = g.graph.edge_count();
        g.graph.edges.push_back({g.node_index(a.i, a.j), g.node_index(b.i, b.j)});
      }
    }
  build_permutations(
      g.graph.nodes, g.graph.node_in_a,
      [&](int i, int j) { return g.node_index(i, j); },
      [&](GraphNode a, GraphNode b) { return g.edge_index(a, b); }, g.graph.east,
      g.graph.north, g.graph.edge_count());
  g.graph.check();
  return g;
}

int AugmentedGridGraph::node_index(int i, int j) const {
  auto it = node_lookup_.find({i, j});
  return it == node_lookup_.end() ? -1 : it->second;
}

int AugmentedGridGraph::edge_index(GraphNode a, GraphNode b) const {
  if (b < a) std::swap(a, b);
  auto it = edge_lookup_.find({{a.i, a.j}, {b.i, b.j}});
  return it == edge_lookup_.end() ? -1 : it->second;
}

AugmentedGridGraph augment(const GridGraph& grid) {
  AugmentedGridGraph g;
  g.m = grid.m;
  g.n = grid.n;
  for (int i = 0; i <= g.m; ++i)
    for (int j = 0; j <= g.n; ++j) {
      g.node_lookup_[{i, j}] = g.graph.node_count();
      g.graph.nodes.push_back({i, j});
      g.graph.node_in_a.push_back((i + j) % 2 == 0);
    }
  auto degenerate = [&](GraphNode v) {
    return v.i == 0 || v.i == g.m || v.j == 0 || v.j == g.n;
  };
  for (int i = 0; i <= g.m; ++i)
    for (int j = 0; j <= g.n; ++j) {
      GraphNode a{i, j};
      for (GraphNode b : {GraphNode{i + 1, j}, GraphNode{i, j + 1}}) {
        if (g.node_index(b.i, b.j) < 0) continue;
        g.edge_lookup_[{{a.i, a.j}, {b.i, b.j}}] = g.graph.edge_count();
        g.graph.edges.push_back({g.node_index(a.i, a.j), g.node_index(b.i, b.j)});
        bool da = degenerate(a) || degenerate(b);
        GraphNode deg_a_node = g.graph.node_in_a[g.node_index(a.i, a.j)] ? a : b;
        GraphNode deg_b_node = g.graph.node_in_a[g.node_index(a.i, a.j)] ? b : a;
        AugmentedGridGraph::EdgeKind kind = AugmentedGridGraph::EdgeKind::interior;
        if (da) {
          bool adeg = degenerate(deg_a_node);
          bool bdeg = degenerate(deg_b_node);
          if (adeg && bdeg)
            kind = AugmentedGridGraph::EdgeKind::completely_degenerate;
          else if (adeg)
            kind = AugmentedGridGraph::EdgeKind::a_degenerate;
          else
            kind = AugmentedGridGraph::EdgeKind::b_degenerate;
        }
        g.edge_kind.push_back(kind);
        g.base_edge.push_back(grid.edge_index(a, b));
      }
    }
  build_permutations(
      g.graph.nodes, g.graph.node_in_a,
      [&](int i, int j) { return g.node_index(i, j); },
      [&](GraphNode a, GraphNode b) { return g.edge_index(a, b); }, g.graph.east,
      g.graph.north, g.graph.edge_count());
  return g;
}

double eigen_width_at(int m, int n, int i, int j) {
  return std::sin(i * kPi / m) * std::sin(j * kPi / n);
}

WidthFunction eigen_width(int m, int n) {
  GridGraph g = grid_graph(m, n);
  WidthFunction w;
  w.values.resize(g.graph.node_count());
  for (int v = 0; v < g.graph.node_count(); ++v)
    w.values[v] = eigen_width_at(m, n, g.graph.nodes[v].i, g.graph.nodes[v].j);
  return w;
}

EigenReport check_eigen(const BipartiteRibbonGraph& g, const WidthFunction& w,
                        double tol) {
  if (w.values.size() != g.nodes.size())
    throw std::invalid_argument("check_eigen: width size mismatch");
  double mx = w.max_value();
  if (mx <= 0) throw std::invalid_argument("check_eigen: width must be positive");
  std::vector<double> wn(w.values);
  for (double& v : wn) v /= mx;
  std::vector<double> neighbor_sum(g.nodes.size(), 0.0);
  for (const GraphEdge& e : g.edges) {
    neighbor_sum[e.u] += wn[e.v];
    neighbor_sum[e.v] += wn[e.u];
  }
  double num = 0.0, den = 0.0;
  for (size_t v = 0; v < wn.size(); ++v) {
    num += neighbor_sum[v] * wn[v];
    den += wn[v] * wn[v];
  }
  EigenReport rep;
  rep.lambda = num / den;
  for (size_t v = 0; v < wn.size(); ++v)
    rep.max_residual =
        std::max(rep.max_residual, std::fabs(neighbor_sum[v] - rep.lambda * wn[v]));
  rep.ok = rep.max_residual <= tol;
  return rep;
}

PowerIterationResult power_iteration(const BipartiteRibbonGraph& g, double tol,
                                     int max_iterations) {
  int nv = g.node_count();
  std::vector<double> v(nv, 1.0), next(nv);
  PowerIterationResult out;
  for (int it = 1; it <= max_iterations; ++it) {
    // next = (A + I) v ; the shift separates the Perron eigenvalue from its
    // bipartite mirror -lambda.
    std::fill(next.begin(), next.end(), 0.0);
    for (const GraphEdge& e : g.edges) {
      next[e.u] += v[e.v];
      next[e.v] += v[e.u];
    }
    for (int i = 0; i < nv; ++i) next[i] += v[i];
    double mx = *std::max_element(next.begin(), next.end());
    for (int i = 0; i < nv; ++i) next[i] /= mx;
    v.swap(next);

    std::vector<double> av(nv, 0.0);
    for (const GraphEdge& e : g.edges) {
      av[e.u] += v[e.v];
      av[e.v] += v[e.u];
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < nv; ++i) {
      num += av[i] * v[i];
      den += v[i] * v[i];
    }
    double lambda = num / den;
    double res = 0.0;
    for (int i = 0; i < nv; ++i) res = std::max(res, std::fabs(av[i] - lambda * v[i]));
    if (res <= tol) {
      out.lambda = lambda;
      out.w.values = v;
      out.iterations = it;
      return out;
    }
  }
  throw std::runtime_error("power_iteration: no convergence within iteration cap");
}

BipartiteRibbonGraph act_C(const BipartiteRibbonGraph& g) {
  BipartiteRibbonGraph out = g;
  for (auto& c : out.node_in_a) c = !c;
  out.east = inverse_permutation(g.north);
  out.north = inverse_permutation(g.east);
  return out;
}

BipartiteRibbonGraph act_E(const BipartiteRibbonGraph& g) {
  BipartiteRibbonGraph out = g;
  out.east = inverse_permutation(g.east);
  return out;
}

TransposeReport transpose_isomorphism(int m, int n) {
  GridGraph a = grid_graph(m, n);
  GridGraph b = grid_graph(n, m);
  TransposeReport rep;
  rep.node_map.resize(a.graph.node_count());
  rep.class_ok = rep.east_ok = rep.north_ok = rep.weight_ok = true;
  for (int v = 0; v < a.graph.node_count(); ++v) {
    GraphNode nd = a.graph.nodes[v];
    int img = b.node_index(nd.j, nd.i);
    rep.node_map[v] = img;
    if (a.graph.node_in_a[v] != b.graph.node_in_a[img]) rep.class_ok = false;
    double wa = eigen_width_at(m, n, nd.i, nd.j);
    double wb = eigen_width_at(n, m, nd.j, nd.i);
    if (!near(wa, wb, 1e-12)) rep.weight_ok = false;
  }
  auto edge_image = [&](int e) {
    GraphNode u = a.graph.nodes[a.graph.edges[e].u];
    GraphNode v = a.graph.nodes[a.graph.edges[e].v];
    return b.edge_index({u.j, u.i}, {v.j, v.i});
  };
  std::vector<int> east_inv_b = inverse_permutation(b.graph.east);
  for (int e = 0; e < a.graph.edge_count(); ++e) {
    if (edge_image(a.graph.east[e]) != east_inv_b[edge_image(e)]) rep.east_ok = false;
    if (edge_image(a.graph.north[e]) != b.graph.north[edge_image(e)]) rep.north_ok = false;
  }
  return rep;
}

std::vector<int> central_symmetry_node_map(const GridGraph& g) {
  std::vector<int> map(g.graph.node_count());
  for (int v = 0; v < g.graph.node_count(); ++v) {
    GraphNode nd = g.graph.nodes[v];
    map[v] = g.node_index(g.m - nd.i, g.n - nd.j);
  }
  return map;
}

CentralSymmetryReport central_symmetry(int m, int n) {
  GridGraph g = grid_graph(m, n);
  std::vector<int> node_map = central_symmetry_node_map(g);
  CentralSymmetryReport rep;
  rep.class_ok = rep.east_ok = rep.north_ok = rep.weight_ok = true;
  for (int v = 0; v < g.graph.node_count(); ++v) {
    if (g.graph.node_in_a[v] != g.graph.node_in_a[node_map[v]]) rep.class_ok = false;
    GraphNode nd = g.graph.nodes[v];
    double w1 = eigen_width_at(m, n, nd.i, nd.j);
    double w2 = eigen_width_at(m, n, m - nd.i, n - nd.j);
    if (!near(w1, w2, 1e-12)) rep.weight_ok = false;
  }
  auto edge_image = [&](int e) {
    GraphNode u = g.graph.nodes[g.graph.edges[e].u];
    GraphNode v = g.graph.nodes[g.graph.edges[e].v];
    return g.edge_index({g.m - u.i, g.n - u.j}, {g.m - v.i, g.n - v.j});
  };
  for (int e = 0; e < g.graph.edge_count(); ++e) {
    if (edge_image(g.graph.east[e]) != g.graph.east[edge_image(e)]) rep.east_ok = false;
    if (edge_image(g.graph.north[e]) != g.graph.north[edge_image(e)]) rep.north_ok = false;
  }
  return rep;
}

}  // namespace flatgrid
