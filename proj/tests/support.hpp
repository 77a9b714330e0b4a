#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library code they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "edgepat/edge_path.hpp"
#include "edgepat/enumeration.hpp"

namespace oracle {

using edgepat::Arc;
using edgepat::EdgePath;
using edgepat::LatticePoint;

// Spanning trees by testing every (v - 1)-subset of the arcs.
inline std::uint64_t subset_tree_count(int v, const std::vector<Arc>& arcs) {
  if (v == 1) return 1;
  const int need = v - 1;
  const int m = static_cast<int>(arcs.size());
  if (need > m) return 0;
  std::vector<int> pick(static_cast<std::size_t>(need));
  std::iota(pick.begin(), pick.end(), 0);
  std::uint64_t count = 0;
  std::vector<int> parent(static_cast<std::size_t>(v));
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    bool acyclic = true;
    for (int k : pick) {
      const int a = find(arcs[k].u), b = find(arcs[k].v);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) ++count;
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

// Direct geometric check of a generalized edge pattern.
inline bool is_edge_pattern(const EdgePath& p) {
  const int n = p.n;
  const std::size_t len = p.steps.size();
  if (static_cast<int>(len) != n * n) return false;
  std::set<std::pair<int, int>> squares;
  std::map<LatticePoint, std::vector<std::pair<int, int>>> passages;  // (in code, out code)
  for (std::size_t k = 0; k < len; ++k) {
    const auto& s = p.steps[k];
    const auto& t = p.steps[(k + 1) % len];
    const int x0 = s.square.i + (s.dir.dx > 0 ? 0 : 1);
    const int y0 = s.square.j + (s.dir.dy > 0 ? 0 : 1);
    const int x1 = x0 + s.dir.dx, y1 = y0 + s.dir.dy;
    if (s.square.i < 0 || s.square.j < 0 || s.square.i >= n || s.square.j >= n) return false;
    if (!squares.insert({s.square.i, s.square.j}).second) return false;
    // Fixed diagonal: its endpoints have mixed coordinate parity.
    if ((x0 + y0) % 2 == 0 || (x1 + y1) % 2 == 0) return false;
    const int tx = t.square.i + (t.dir.dx > 0 ? 0 : 1);
    const int ty = t.square.j + (t.dir.dy > 0 ? 0 : 1);
    if (tx != x1 || ty != y1) return false;
    if (s.dir.dx * t.dir.dx + s.dir.dy * t.dir.dy != 0) return false;
    // Record the passage as the two directions leaving the point.
    passages[{x1, y1}].push_back({-s.dir.dx * 2 - s.dir.dy, t.dir.dx * 2 + t.dir.dy});
  }
  auto angle = [](int code) {
    // Codes 2dx + dy: 3 NE, 1 SE, -1 NW, -3 SW; order counterclockwise from east.
    switch (code) {
      case 3: return 0;
      case -1: return 1;
      case -3: return 2;
      default: return 3;
    }
  };
  for (const auto& [pt, list] : passages) {
    if (list.size() > 2) return false;
    if (list.size() == 2) {
      int a = angle(list[0].first), b = angle(list[0].second);
      if (a > b) std::swap(a, b);
      const int c = angle(list[1].first);
      const int d = angle(list[1].second);
      const bool c_in = c > a && c < b;
      const bool d_in = d > a && d < b;
      if (c_in != d_in) return false;  // interleaved passages cross
    }
  }
  return true;
}

// Twice the signed area enclosed by the path vertices.
inline long long doubled_area(const EdgePath& p) {
  long long area = 0;
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const auto& s = p.steps[k];
    const long long x0 = s.square.i + (s.dir.dx > 0 ? 0 : 1);
    const long long y0 = s.square.j + (s.dir.dy > 0 ? 0 : 1);
    area += x0 * (y0 + s.dir.dy) - (x0 + s.dir.dx) * y0;
  }
  return area;
}

// Point maps of the dihedral group written out directly.
inline std::vector<std::function<std::pair<int, int>(int, int)>> group(int n) {
  return {
      [](int x, int y) { return std::pair{x, y}; },
      [n](int x, int y) { return std::pair{n - y, x}; },
      [n](int x, int y) { return std::pair{n - x, n - y}; },
      [n](int x, int y) { return std::pair{y, n - x}; },
      [n](int x, int y) { return std::pair{x, n - y}; },
      [n](int x, int y) { return std::pair{n - x, y}; },
      [](int x, int y) { return std::pair{y, x}; },
      [n](int x, int y) { return std::pair{n - y, n - x}; },
  };
}

// Orbit label: the smallest vertex sequence over all images, traversal
// directions and starting vertices.
inline std::vector<std::pair<int, int>> orbit_label(const EdgePath& p) {
  const int n = p.n;
  std::vector<std::pair<int, int>> verts;
  for (const auto& s : p.steps) {
    verts.push_back({s.square.i + (s.dir.dx > 0 ? 0 : 1), s.square.j + (s.dir.dy > 0 ? 0 : 1)});
  }
  std::vector<std::pair<int, int>> best;
  for (const auto& g : group(n)) {
    std::vector<std::pair<int, int>> img;
    for (auto [x, y] : verts) img.push_back(g(x, y));
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < img.size(); ++r) {
        std::vector<std::pair<int, int>> cand(img.begin() + static_cast<std::ptrdiff_t>(r), img.end());
        cand.insert(cand.end(), img.begin(), img.begin() + static_cast<std::ptrdiff_t>(r));
        if (best.empty() || cand < best) best = cand;
      }
      std::reverse(img.begin(), img.end());
    }
  }
  return best;
}

}  // namespace oracle

namespace fixture {

struct Corpus {
  std::vector<edgepat::SpanningTree> trees;
  std::vector<edgepat::EdgePath> paths;
};

// Every spanning tree of the board's grid graph with its path.
inline const Corpus& corpus(int n) {
  static std::map<int, Corpus> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const edgepat::SegmentLattice lattice(edgepat::BoardSpec::make(n));
  Corpus c;
  edgepat::SpanningTreeEnumerator e(lattice.graph());
  while (const edgepat::SpanningTree* t = e.next()) {
    c.trees.push_back(*t);
    c.paths.push_back(lattice.tree_to_path(*t));
  }
  return cache.emplace(n, std::move(c)).first->second;
}

}  // namespace fixture
