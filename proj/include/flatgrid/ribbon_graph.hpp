#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatgrid/geometry.hpp"

namespace flatgrid {

struct GraphNode {
  int i = 0;
  int j = 0;
  bool operator==(const GraphNode& o) const { return i == o.i && j == o.j; }
  bool operator<(const GraphNode& o) const { return i != o.i ? i < o.i : j < o.j; }
};

struct GraphEdge {
  int u = -1;  // node indices, endpoints of the edge
  int v = -1;
};

/// Bipartite ribbon graph: nodes split into classes A and B, one edge
/// permutation (east) whose cycles are the edge stars of A nodes, and one
/// (north) whose cycles are the edge stars of B nodes.
struct BipartiteRibbonGraph {
  std::vector<GraphNode> nodes;
  std::vector<char> node_in_a;
  std::vector<GraphEdge> edges;
  std::vector<int> east;
  std::vector<int> north;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int alpha(int e) const { return node_in_a[edges[e].u] ? edges[e].u : edges[e].v; }
  int beta(int e) const { return node_in_a[edges[e].u] ? edges[e].v : edges[e].u; }
  int other(int e, int node) const { return edges[e].u == node ? edges[e].v : edges[e].u; }
  std::vector<std::vector<int>> node_stars() const;

  /// Checks bipartiteness, the orbit conditions and connectivity; throws on
  /// violation.
  void check() const;
};

struct WidthFunction {
  std::vector<double> values;  // indexed by node
  double max_value() const;
};

struct GridGraph {
  int m = 0;
  int n = 0;
  BipartiteRibbonGraph graph;

  int node_index(int i, int j) const;          // -1 when absent
  int edge_index(GraphNode a, GraphNode b) const;  // -1 when absent

 private:
  friend GridGraph grid_graph(int, int);
  std::map<std::pair<int, int>, int> node_lookup_;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> edge_lookup_;
};

/// The (m,n) grid graph: nodes v_{i,j} for 1 <= i < m, 1 <= j < n, edges
/// between lattice points at distance one, classes by parity of i+j, and
/// cyclic edge order around v_{i,j} clockwise for even i, counterclockwise
/// for odd i.  Requires m, n >= 2 and mn >= 6.
GridGraph grid_graph(int m, int n);

struct AugmentedGridGraph {
  enum class EdgeKind { interior, a_degenerate, b_degenerate, completely_degenerate };

  int m = 0;
  int n = 0;
  BipartiteRibbonGraph graph;          // on the full (m+1) x (n+1) lattice
  std::vector<EdgeKind> edge_kind;
  std::vector<int> base_edge;          // index into the grid graph, or -1

  int node_index(int i, int j) const;
  int edge_index(GraphNode a, GraphNode b) const;

 private:
  friend AugmentedGridGraph augment(const GridGraph&);
  std::map<std::pair<int, int>, int> node_lookup_;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> edge_lookup_;
};

/// Adds the boundary nodes (i in {0,m} or j in {0,n}) and all remaining
/// distance-one edges; degeneracy flags follow the class of the degenerate
/// endpoint(s).
AugmentedGridGraph augment(const GridGraph& g);

/// w(v_{i,j}) = sin(i pi / m) sin(j pi / n); vanishes exactly on the boundary.
double eigen_width_at(int m, int n, int i, int j);
WidthFunction eigen_width(int m, int n);

struct EigenReport {
  double lambda = 0.0;
  double max_residual = 0.0;
  bool ok = false;
};

/// Rayleigh-quotient eigenvalue of w for the adjacency operator, with the
/// worst residual of sum_{y ~ x} w(y) = lambda w(x) measured after
/// normalizing w to maximum 1.
EigenReport check_eigen(const BipartiteRibbonGraph& g, const WidthFunction& w,
                        double tol = kDefaultTol);

struct PowerIterationResult {
  double lambda = 0.0;
  WidthFunction w;  // normalized to max 1
  int iterations = 0;
};

/// Positive eigenpair of the adjacency operator.  Bipartite graphs carry the
/// mirror eigenvalue -lambda, so the iteration runs on A + I.
PowerIterationResult power_iteration(const BipartiteRibbonGraph& g,
                                     double tol = 1e-12, int max_iterations = 500000);

/// Surface symmetry data actions: C swaps the node classes and replaces
/// (east, north) by (north^-1, east^-1); E replaces east by east^-1.
BipartiteRibbonGraph act_C(const BipartiteRibbonGraph& g);
BipartiteRibbonGraph act_E(const BipartiteRibbonGraph& g);

struct TransposeReport {
  std::vector<int> node_map;  // node of G_{m,n} -> node of G_{n,m}
  bool class_ok = false;
  bool east_ok = false;   // eta . east . eta^-1 == east^-1 of the target
  bool north_ok = false;  // eta . north . eta^-1 == north of the target
  bool weight_ok = false;
  bool ok() const { return class_ok && east_ok && north_ok && weight_ok; }
};

/// The transpose map v_{i,j} -> v_{j,i} from G_{m,n} to G_{n,m}, with the
/// conjugation identities checked exhaustively over all edges.
TransposeReport transpose_isomorphism(int m, int n);

struct CentralSymmetryReport {
  bool class_ok = false;
  bool east_ok = false;
  bool north_ok = false;
  bool weight_ok = false;
  bool ok() const { return class_ok && east_ok && north_ok && weight_ok; }
};

/// Checks the conditions under which v_{i,j} -> v_{m-i,n-j} induces a surface
/// automorphism: class preservation, commutation with both permutations, and
/// weight invariance.  All hold exactly when m and n are both even.
CentralSymmetryReport central_symmetry(int m, int n);

/// The node map of the central symmetry itself.
std::vector<int> central_symmetry_node_map(const GridGraph& g);

std::vector<int> inverse_permutation(const std::vector<int>& p);

}  // namespace flatgrid
