#pragma once

#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgepat/geometry.hpp"

namespace edgepat {

using BigInt = boost::multiprecision::cpp_int;

// Undirected arc between two vertex indices, stored with u < v.
struct Arc {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// The (n/2) x (n/2) square grid graph on the odd-odd diamond centers.
// Vertices are listed in lexicographic (x, y) order; arcs are listed in
// lexicographic (u, v) order.
class GridGraph {
 public:
  static GridGraph build(const BoardSpec& spec);

  const BoardSpec& spec() const { return spec_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::optional<int> vertex_index(LatticePoint p) const;
  // The interior mixed-parity point halfway between the arc's endpoints.
  LatticePoint junction(int arc) const;
  std::optional<int> arc_at_junction(LatticePoint p) const;
  bool is_vertical(int arc) const;

 private:
  explicit GridGraph(const BoardSpec& spec) : spec_(spec) {}
  BoardSpec spec_;
  std::vector<LatticePoint> vertices_;
  std::vector<Arc> arcs_;
  std::vector<int> junction_arc_;  // indexed by lattice point, -1 if none
};

// A subset of graph arcs, as sorted arc indices.
struct SpanningTree {
  std::vector<int> arcs;
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

bool is_spanning_tree(int vertex_count, std::span<const Arc> arcs, const SpanningTree& tree);
bool is_spanning_tree(const GridGraph& g, const SpanningTree& tree);

// Number of tree vertices of degree 1.
int leaf_count(const GridGraph& g, const SpanningTree& tree);

// Exact spanning-tree count by the matrix-tree theorem: fraction-free
// (Bareiss) elimination of the Laplacian with the first vertex deleted.
// A disconnected graph yields 0.
BigInt kirchhoff_count(int vertex_count, std::span<const Arc> arcs);
BigInt kirchhoff_count(const GridGraph& g);

// Asymptotic estimate exp(4C/pi)^nu = 1.3385^(n^2), C the Catalan constant.
double tree_count_estimate(const BoardSpec& spec);

// Number of (nu - 1)-arc subsets of the grid graph, C(e, nu - 1).
BigInt naive_arc_subset_count(const BoardSpec& spec);

BigInt binomial(int n, int k);

struct ScaleRatio {
  int tree_length = 0;        // 2 (nu - 1)
  int path_length_sqrt2 = 0;  // path length is this times sqrt(2)
  double path_length = 0.0;
  double ratio = 0.0;         // (n^2 - sqrt(2)(nu - 1)) / n^2
};

ScaleRatio scale_ratio(const BoardSpec& spec);

// Large-n limit of the scale ratio, 1 - sqrt(2)/4.
double asymptotic_scale_ratio();

}  // namespace edgepat
