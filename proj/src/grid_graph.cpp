#include "edgepat/grid_graph.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace edgepat {

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

GridGraph GridGraph::build(const BoardSpec& spec) {
  GridGraph g(spec);
  const int h = spec.half();
  const int n = spec.n();
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) {
      g.vertices_.push_back({2 * a + 1, 2 * b + 1});
    }
  }
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) {
      const int u = a * h + b;
      if (b + 1 < h) g.arcs_.push_back({u, u + 1});
      if (a + 1 < h) g.arcs_.push_back({u, u + h});
    }
  }
  g.junction_arc_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), -1);
  for (int k = 0; k < g.arc_count(); ++k) {
    const LatticePoint j = g.junction(k);
    g.junction_arc_[static_cast<std::size_t>(j.x * (n + 1) + j.y)] = k;
  }
  return g;
}

std::optional<int> GridGraph::vertex_index(LatticePoint p) const {
  const int h = spec_.half();
  if (p.x % 2 == 0 || p.y % 2 == 0 || p.x < 1 || p.y < 1) return std::nullopt;
  const int a = (p.x - 1) / 2;
  const int b = (p.y - 1) / 2;
  if (a >= h || b >= h) return std::nullopt;
  return a * h + b;
}

LatticePoint GridGraph::junction(int arc) const {
  const LatticePoint& p = vertices_.at(static_cast<std::size_t>(arcs_.at(static_cast<std::size_t>(arc)).u));
  const LatticePoint& q = vertices_.at(static_cast<std::size_t>(arcs_.at(static_cast<std::size_t>(arc)).v));
  return {(p.x + q.x) / 2, (p.y + q.y) / 2};
}

std::optional<int> GridGraph::arc_at_junction(LatticePoint p) const {
  const int n = spec_.n();
  if (p.x < 0 || p.y < 0 || p.x > n || p.y > n) return std::nullopt;
  const int k = junction_arc_[static_cast<std::size_t>(p.x * (n + 1) + p.y)];
  if (k < 0) return std::nullopt;
  return k;
}

bool GridGraph::is_vertical(int arc) const {
  const Arc& a = arcs_.at(static_cast<std::size_t>(arc));
  return vertices_[static_cast<std::size_t>(a.u)].x == vertices_[static_cast<std::size_t>(a.v)].x;
}

bool is_spanning_tree(int vertex_count, std::span<const Arc> arcs, const SpanningTree& tree) {
  if (static_cast<int>(tree.arcs.size()) != vertex_count - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  for (int k : tree.arcs) {
    if (k < 0 || k >= static_cast<int>(arcs.size())) return false;
    const int ru = find_root(parent, arcs[static_cast<std::size_t>(k)].u);
    const int rv = find_root(parent, arcs[static_cast<std::size_t>(k)].v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  // nu - 1 arcs without a cycle connect all nu vertices.
  return true;
}

bool is_spanning_tree(const GridGraph& g, const SpanningTree& tree) {
  return is_spanning_tree(g.vertex_count(), g.arcs(), tree);
}

int leaf_count(const GridGraph& g, const SpanningTree& tree) {
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int k : tree.arcs) {
    ++degree[static_cast<std::size_t>(g.arcs()[static_cast<std::size_t>(k)].u)];
    ++degree[static_cast<std::size_t>(g.arcs()[static_cast<std::size_t>(k)].v)];
  }
  int leaves = 0;
  for (int d : degree) leaves += d == 1 ? 1 : 0;
  return leaves;
}

BigInt kirchhoff_count(int vertex_count, std::span<const Arc> arcs) {
  if (vertex_count <= 0) throw std::invalid_argument("graph has no vertices");
  const int m = vertex_count - 1;
  if (m == 0) return 1;

  // Laplacian minor with vertex 0 removed; row/column r maps to vertex r + 1.
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m),
                                     std::vector<BigInt>(static_cast<std::size_t>(m), 0));
  for (const Arc& arc : arcs) {
    if (arc.u == arc.v) continue;
    const int u = arc.u - 1;
    const int v = arc.v - 1;
    if (u >= 0) a[u][u] += 1;
    if (v >= 0) a[v][v] += 1;
    if (u >= 0 && v >= 0) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }

  // Bareiss: every intermediate entry is itself a minor, so divisions are exact.
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < m; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  BigInt det = a[m - 1][m - 1];
  if (sign < 0) det = -det;
  return det;
}

BigInt kirchhoff_count(const GridGraph& g) { return kirchhoff_count(g.vertex_count(), g.arcs()); }

double tree_count_estimate(const BoardSpec& spec) {
  return std::exp(4.0 * kCatalan / std::numbers::pi * spec.nu());
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

BigInt naive_arc_subset_count(const BoardSpec& spec) {
  return binomial(spec.arc_count(), spec.nu() - 1);
}

ScaleRatio scale_ratio(const BoardSpec& spec) {
  ScaleRatio r;
  const int n2 = spec.n() * spec.n();
  r.tree_length = 2 * (spec.nu() - 1);
  r.path_length_sqrt2 = n2;
  r.path_length = std::numbers::sqrt2 * n2;
  r.ratio = (n2 - std::numbers::sqrt2 * (spec.nu() - 1)) / n2;
  return r;
}

double asymptotic_scale_ratio() { return 1.0 - std::numbers::sqrt2 / 4.0; }

}  // namespace edgepat
