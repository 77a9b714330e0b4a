#include <doctest.h>

#include <random>
#include <set>

#include "edgepat/edge_path.hpp"
#include "support.hpp"

using namespace edgepat;

namespace {

EdgePath from_vertices(int n, const std::vector<LatticePoint>& v) {
  EdgePath p;
  p.n = n;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const LatticePoint a = v[k];
    const LatticePoint b = v[(k + 1) % v.size()];
    const Direction d{b.x - a.x, b.y - a.y};
    p.steps.push_back({SquareId{std::min(a.x, b.x), std::min(a.y, b.y)}, d});
  }
  return p;
}

int components(const GridGraph& g, const std::vector<int>& arcs) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int c = g.vertex_count();
  for (int k : arcs) {
    const int a = find(g.arcs()[k].u), b = find(g.arcs()[k].v);
    if (a != b) {
      parent[a] = b;
      --c;
    }
  }
  return c;
}

}  // namespace

TEST_SUITE("edge_path") {
  TEST_CASE("steps and fixed segments") {
    const Step s{SquareId{2, 3}, Direction{-1, 1}};
    CHECK(step_start(s) == LatticePoint{3, 3});
    CHECK(step_end(s) == LatticePoint{2, 4});
    for (int n : {2, 4, 6}) {
      const BoardSpec spec = BoardSpec::make(n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto [a, b] = square_segment(SquareId{i, j}, spec);
          CHECK(a < b);
          CHECK(classify_point(a, spec) == Parity::mixed);
          CHECK(classify_point(b, spec) == Parity::mixed);
          const bool main_diagonal = a == LatticePoint{i, j};
          CHECK(main_diagonal == ((i + j) % 2 == 1));
        }
      }
    }
  }

  TEST_CASE("the n = 2 loop is the diamond around the center") {
    const SegmentLattice lattice(BoardSpec::make(2));
    const EdgePath p = lattice.tree_to_path(SpanningTree{});
    REQUIRE(p.size() == 4);
    std::set<LatticePoint> verts;
    for (const LatticePoint& v : p.vertices()) verts.insert(v);
    CHECK(verts == std::set<LatticePoint>{{0, 1}, {1, 0}, {2, 1}, {1, 2}});
    CHECK(orientation(p) == 1);
    CHECK(path_validate(p, BoardSpec::make(2)).ok());
    CHECK(oracle::is_edge_pattern(p));
  }

  TEST_CASE("every tree of small boards yields an edge pattern") {
    for (int n : {4, 6}) {
      const auto& c = fixture::corpus(n);
      for (const EdgePath& p : c.paths) {
        CHECK(oracle::is_edge_pattern(p));
        CHECK(path_validate(p, BoardSpec::make(n)).ok());
        CHECK(oracle::doubled_area(p) > 0);
      }
    }
  }

  TEST_CASE("tree and path round-trip on the n = 6 corpus") {
    const SegmentLattice lattice(BoardSpec::make(6));
    const auto& c = fixture::corpus(6);
    REQUIRE(c.trees.size() == 192);
    std::set<std::vector<Step>> distinct;
    for (std::size_t k = 0; k < c.trees.size(); ++k) {
      CHECK(lattice.path_to_tree(c.paths[k]) == c.trees[k]);
      CHECK(lattice.tree_to_path(lattice.path_to_tree(c.paths[k])) == c.paths[k]);
      CHECK(path_to_tree(reversed(c.paths[k]), BoardSpec::make(6)) == c.trees[k]);
      distinct.insert(c.paths[k].steps);
    }
    CHECK(distinct.size() == 192);
  }

  TEST_CASE("non-tree arc sets thread several loops") {
    const BoardSpec spec = BoardSpec::make(6);
    const SegmentLattice lattice(spec);
    const GridGraph& g = lattice.graph();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      SpanningTree arcs;
      for (int k = 0; k < g.arc_count(); ++k) {
        if (rng() % 2) arcs.arcs.push_back(k);
      }
      const int c = components(g, arcs.arcs);
      const int cycles = static_cast<int>(arcs.arcs.size()) - (g.vertex_count() - c);
      std::vector<JunctionState> states(static_cast<std::size_t>(g.arc_count()), JunctionState::cut);
      for (int k : arcs.arcs) states[static_cast<std::size_t>(k)] = JunctionState::link;
      // Each component contributes its outer boundary, each independent cycle a hole.
      CHECK(lattice.loop_count(states) == c + cycles);
      const bool tree = c == 1 && cycles == 0;
      CHECK(lattice.single_loop(states).has_value() == tree);
      if (!tree) {
        CHECK_THROWS_AS(lattice.tree_to_path(arcs), MultiLoopError);
        const ValidationReport r = path_validate(lattice.arcs_to_threading(arcs), spec);
        CHECK(r.loop_count == c + cycles);
        CHECK(r.has(ViolationKind::multiple_loops));
        CHECK_FALSE(r.has(ViolationKind::coverage));
      }
    }
  }

  TEST_CASE("multi-loop error reports the loop count") {
    const SegmentLattice lattice(BoardSpec::make(4));
    try {
      lattice.tree_to_path(SpanningTree{});
      FAIL("expected MultiLoopError");
    } catch (const MultiLoopError& e) {
      CHECK(e.loop_count() == 4);
    }
  }

  TEST_CASE("validation reports each defect") {
    const BoardSpec spec = BoardSpec::make(4);
    const EdgePath good = fixture::corpus(4).paths.front();

    EdgePath shorter = good;
    shorter.steps.pop_back();
    const ValidationReport r1 = path_validate(shorter, spec);
    CHECK(r1.has(ViolationKind::wrong_size));
    CHECK(r1.has(ViolationKind::not_closed));
    CHECK_FALSE(r1.closed);

    EdgePath repeated = good;
    repeated.steps[3] = repeated.steps[2];
    CHECK(path_validate(repeated, spec).has(ViolationKind::coverage));

    EdgePath foreign = good;
    foreign.steps[0].dir = Direction{foreign.steps[0].dir.dx, -foreign.steps[0].dir.dy};
    const ValidationReport r3 = path_validate(foreign, spec);
    CHECK(r3.has(ViolationKind::foreign_segment));
    CHECK_FALSE(r3.fixed_segments);

    EdgePath outside = good;
    outside.steps[0].square = SquareId{4, 0};
    CHECK(path_validate(outside, spec).has(ViolationKind::coverage));

    CHECK(path_validate(EdgePath{4, {}}, spec).has(ViolationKind::not_closed));
  }

  TEST_CASE("aligned steps and crossings are detected") {
    // A tilted rectangle that runs straight through two points.
    const EdgePath straight = from_vertices(4, {{0, 1}, {1, 2}, {2, 3}, {3, 2}, {2, 1}, {1, 0}});
    const ValidationReport r1 = path_validate(straight, BoardSpec::make(4));
    CHECK(r1.aligned_pairs == 2);
    CHECK(r1.has(ViolationKind::aligned_steps));
    CHECK_FALSE(oracle::is_edge_pattern(straight));

    // A figure eight through (2, 3).
    const EdgePath eight =
        from_vertices(6, {{2, 3}, {3, 4}, {4, 3}, {3, 2}, {2, 3}, {1, 4}, {0, 3}, {1, 2}});
    const ValidationReport r2 = path_validate(eight, BoardSpec::make(6));
    CHECK(r2.crossings == 1);
    CHECK(r2.has(ViolationKind::crossing));
    CHECK_FALSE(r2.has(ViolationKind::foreign_segment));
  }

  TEST_CASE("malformed paths are rejected by path_to_tree") {
    const SegmentLattice lattice(BoardSpec::make(4));
    EdgePath bad = fixture::corpus(4).paths.front();
    std::swap(bad.steps[0], bad.steps[5]);
    CHECK_THROWS_AS(lattice.path_to_tree(bad), MalformedPathError);
  }

  TEST_CASE("orientation, reversal and normalization") {
    for (const EdgePath& p : fixture::corpus(6).paths) {
      CHECK(orientation(p) == 1);
      CHECK(orientation(reversed(p)) == -1);
      CHECK(normalized(p) == p);
      CHECK(normalized(reversed(p)) == p);
      EdgePath rotated = p;
      std::rotate(rotated.steps.begin(), rotated.steps.begin() + 7, rotated.steps.end());
      CHECK(normalized(rotated) == p);
      for (Symmetry g : all_symmetries) {
        const EdgePath t = transformed(p, g);
        CHECK(orientation(t) == (is_reflection(g) ? -1 : 1));
        CHECK(oracle::is_edge_pattern(normalized(t)));
      }
    }
  }

  TEST_CASE("canonical key is an orbit invariant") {
    for (const EdgePath& p : fixture::corpus(6).paths) {
      const CanonicalKey key = canonical_key(p);
      CHECK(key.bytes.size() == 2 * 36);
      CHECK(CanonicalKey::from_hex(key.hex()) == key);
      CHECK(canonical_key(reversed(p)) == key);
      for (Symmetry g : all_symmetries) CHECK(canonical_key(transformed(p, g)) == key);
      const EdgePath rep = canonical_representative(p);
      CHECK(encode_steps(rep) == key.bytes);
      CHECK(normalized(rep) == rep);
    }
  }

  TEST_CASE("canonical keys separate exactly the orbits of the oracle") {
    for (int n : {4, 6}) {
      std::map<std::vector<std::pair<int, int>>, std::set<CanonicalKey>> by_label;
      std::set<CanonicalKey> keys;
      for (const EdgePath& p : fixture::corpus(n).paths) {
        by_label[oracle::orbit_label(p)].insert(canonical_key(p));
        keys.insert(canonical_key(p));
      }
      for (const auto& [label, ks] : by_label) CHECK(ks.size() == 1);
      CHECK(keys.size() == by_label.size());
    }
  }

  TEST_CASE("orbit-stabilizer relation") {
    for (int n : {2, 4, 6}) {
      std::set<CanonicalKey> keys;
      int total = 0;
      for (const EdgePath& p : fixture::corpus(n).paths) {
        const int stab = stabilizer(p);
        CHECK((stab & symmetry_bit(Symmetry::identity)) != 0);
        total += __builtin_popcount(static_cast<unsigned>(stab));
        keys.insert(canonical_key(p));
      }
      CHECK(total == 8 * static_cast<int>(keys.size()));
    }
    CHECK(stabilizer(fixture::corpus(2).paths.front()) == 0xff);
  }

  TEST_CASE("hex keys reject malformed input") {
    CHECK_THROWS(CanonicalKey::from_hex("abc"));
    CHECK_THROWS(CanonicalKey::from_hex("zz"));
    CHECK(CanonicalKey::from_hex("00ff").bytes == std::vector<std::uint8_t>{0x00, 0xff});
  }

  TEST_CASE("turn words of counterclockwise loops") {
    for (const EdgePath& p : fixture::corpus(6).paths) {
      const std::string w = turn_word(p);
      REQUIRE(w.size() == 36);
      const auto left = std::count(w.begin(), w.end(), 'L');
      const auto right = std::count(w.begin(), w.end(), 'R');
      CHECK(left + right == 36);
      // Total turning of a simple counterclockwise loop is one full turn.
      CHECK(left - right == 4);
    }
  }

  TEST_CASE("step encoding layout") {
    const EdgePath p = fixture::corpus(4).paths.front();
    const auto bytes = encode_steps(p);
    REQUIRE(bytes.size() == 32);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const int code = square_index(p[k].square, 4) * 4 + direction_code(p[k].dir);
      CHECK(bytes[2 * k] == (code >> 8));
      CHECK(bytes[2 * k + 1] == (code & 0xff));
    }
  }
}
