#include <doctest.h>

#include <map>
#include <set>

#include "edgepat/corners.hpp"
#include "support.hpp"

using namespace edgepat;

namespace {

EdgePath locus(std::vector<Direction> dirs) {
  EdgePath p;
  p.n = 8;
  LatticePoint at{2, 3};
  for (const Direction& d : dirs) {
    p.steps.push_back({SquareId{std::min(at.x, at.x + d.dx), std::min(at.y, at.y + d.dy)}, d});
    at = at + d;
  }
  return p;
}

// Contraction verdict computed by walking the sheet boundary explicitly.
struct OracleVerdict {
  bool pass = true;
  long long comparisons = 0;
};

OracleVerdict oracle_contraction(const EdgePath& p, int offset) {
  const int n = p.n;
  const int total = 2 * n * n;
  const int side = n * n / 2;
  // Unfolded positions by unit moves around the square, starting at the
  // corner that the first corner step's apex occupies.
  std::vector<std::pair<long long, long long>> unfolded(static_cast<std::size_t>(total));
  long long x = 0, y = 0;
  const int moves[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int u = 0; u < total; ++u) {
    const int t = (2 * offset + 1 + u) % total;
    unfolded[static_cast<std::size_t>(t)] = {x, y};
    const int* m = moves[u / side];
    x += m[0];
    y += m[1];
  }
  std::vector<std::vector<std::pair<long long, long long>>> folded(static_cast<std::size_t>(total));
  const auto verts = p.vertices();
  for (int k = 0; k < n * n; ++k) {
    const LatticePoint a = verts[static_cast<std::size_t>(k)];
    const LatticePoint b = verts[static_cast<std::size_t>((k + 1) % (n * n))];
    folded[static_cast<std::size_t>(2 * k)] = {{a.x, a.y}};
    folded[static_cast<std::size_t>(2 * k + 1)] = {{b.x, a.y}, {a.x, b.y}};
  }
  OracleVerdict v;
  auto d2 = [](auto a, auto b) {
    return (a.first - b.first) * (a.first - b.first) + (a.second - b.second) * (a.second - b.second);
  };
  for (int i = 0; i < total; ++i) {
    for (int j = i + 1; j < total; ++j) {
      const long long limit = d2(unfolded[static_cast<std::size_t>(i)], unfolded[static_cast<std::size_t>(j)]);
      for (const auto& a : folded[static_cast<std::size_t>(i)]) {
        for (const auto& b : folded[static_cast<std::size_t>(j)]) {
          ++v.comparisons;
          if (d2(a, b) > limit) v.pass = false;
        }
      }
    }
  }
  return v;
}

std::vector<EdgePath> orbit_representatives(int n) {
  std::map<CanonicalKey, EdgePath> reps;
  for (const EdgePath& p : fixture::corpus(n).paths) reps.try_emplace(canonical_key(p), p);
  std::vector<EdgePath> out;
  for (auto& [k, p] : reps) out.push_back(p);
  return out;
}

}  // namespace

TEST_SUITE("corners") {
  TEST_CASE("switchback and staircase loci") {
    CHECK(corner_feasible_at(locus({{1, 1}, {1, -1}, {-1, -1}}), 1));
    CHECK_FALSE(corner_feasible_at(locus({{1, 1}, {1, -1}, {1, 1}}), 1));
    const EdgePath diamond = fixture::corpus(2).paths.front();
    for (int i = 0; i < 4; ++i) CHECK(corner_feasible_at(diamond, i));
    CHECK(enumerate_corner_placements(diamond).size() == 1);
  }

  TEST_CASE("placements are spaced a quarter of the path apart") {
    const CornerPlacement c = make_placement(8, 5);
    CHECK(c.corner_steps == std::array<int, 4>{5, 21, 37, 53});
    CHECK_THROWS_AS(make_placement(8, 16), std::out_of_range);
    CHECK_THROWS_AS(make_placement(8, -1), std::out_of_range);
  }

  TEST_CASE("switchbacks are flanked by equal turns") {
    for (const EdgePath& p : fixture::corpus(6).paths) {
      const std::string w = turn_word(p);
      for (int i = 0; i < 36; ++i) {
        const char before = w[static_cast<std::size_t>((i + 35) % 36)];
        const char after = w[static_cast<std::size_t>(i)];
        CHECK(corner_feasible_at(p, i) == (before == after));
      }
    }
  }

  TEST_CASE("the n = 4 path admits no corner placement") {
    for (const EdgePath& p : fixture::corpus(4).paths) CHECK(enumerate_corner_placements(p).empty());
  }

  TEST_CASE("placements are equivariant under the group") {
    for (const EdgePath& p : fixture::corpus(6).paths) {
      std::set<std::vector<SquareId>> expected;
      for (const CornerPlacement& c : enumerate_corner_placements(p)) {
        std::vector<SquareId> sq;
        for (int i : c.corner_steps) sq.push_back(p[static_cast<std::size_t>(i)].square);
        std::sort(sq.begin(), sq.end());
        expected.insert(sq);
      }
      for (Symmetry g : all_symmetries) {
        const EdgePath t = normalized(transformed(p, g));
        std::set<std::vector<SquareId>> got;
        for (const CornerPlacement& c : enumerate_corner_placements(t)) {
          std::vector<SquareId> sq;
          for (int i : c.corner_steps) sq.push_back(apply_symmetry(inverse(g), t[static_cast<std::size_t>(i)].square, 6));
          std::sort(sq.begin(), sq.end());
          got.insert(sq);
        }
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("n = 6 filters") {
    const auto reps = orbit_representatives(6);
    REQUIRE(reps.size() == 28);
    std::vector<EdgePath> feasible;
    std::vector<SpanningTree> trees;
    const SegmentLattice lattice(BoardSpec::make(6));
    for (const EdgePath& p : reps) {
      if (!enumerate_corner_placements(p).empty()) {
        feasible.push_back(p);
        trees.push_back(lattice.path_to_tree(p));
      }
    }
    CHECK(feasible.size() == 11);
    CHECK(filter_line_trees(lattice.graph(), trees, feasible).size() == 1);
    const auto ss = filter_self_symmetric(feasible);
    for (std::size_t k : ss.survivors) {
      const SelfSymmetry s = classify_self_symmetry(feasible[k]);
      CHECK((s == SelfSymmetry::horizontal || s == SelfSymmetry::vertical));
    }
    CHECK_THROWS(filter_line_trees(lattice.graph(), trees, std::span<const EdgePath>(feasible).first(1)));
  }

  TEST_CASE("self-symmetry classification") {
    CHECK(classify_self_symmetry(fixture::corpus(2).paths.front()) == SelfSymmetry::horizontal);
    for (SelfSymmetry s : {SelfSymmetry::none, SelfSymmetry::horizontal, SelfSymmetry::vertical, SelfSymmetry::other}) {
      CHECK(self_symmetry_from_string(to_string(s)) == s);
    }
    CHECK_THROWS(self_symmetry_from_string("diagonal"));
    const EdgePath diamond = fixture::corpus(2).paths.front();
    const auto r = filter_self_symmetric(std::span<const EdgePath>(&diamond, 1));
    CHECK(r.survivors.size() == 1);
    CHECK(r.with_other_symmetry.size() == 1);
  }

  TEST_CASE("layout geometry") {
    for (const EdgePath& p : fixture::corpus(6).paths) {
      for (const CornerPlacement& c : enumerate_corner_placements(p)) {
        const FoldedBoundaryLayout L = folded_layout(p, c);
        REQUIRE(L.points.size() == 72);
        CHECK(L.side == 18);
        const auto verts = p.vertices();
        for (int t = 0; t < 72; ++t) {
          const TrackedPoint& tp = L.points[static_cast<std::size_t>(t)];
          if (t % 2 == 0) {
            CHECK(tp.states == 1);
            CHECK(tp.folded[0] == verts[static_cast<std::size_t>(t / 2)]);
            continue;
          }
          CHECK(tp.states == 2);
          const LatticePoint prev = L.points[static_cast<std::size_t>(t - 1)].folded[0];
          const LatticePoint next = L.points[static_cast<std::size_t>((t + 1) % 72)].folded[0];
          for (const LatticePoint& apex : tp.folded) {
            auto d2 = [](LatticePoint a, LatticePoint b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); };
            CHECK(d2(apex, prev) == 1);
            CHECK(d2(apex, next) == 1);
          }
        }
        // Sheet corners sit at the apexes of the corner steps.
        const std::set<LatticePoint> corners{{0, 0}, {18, 0}, {18, 18}, {0, 18}};
        for (int s : c.corner_steps) CHECK(corners.count(L.points[static_cast<std::size_t>(2 * s + 1)].unfolded) == 1);
      }
    }
  }

  TEST_CASE("n = 2 layout") {
    const EdgePath diamond = fixture::corpus(2).paths.front();
    const FoldedBoundaryLayout L = folded_layout(diamond, make_placement(2, 0));
    CHECK(L.points.size() == 8);
    int apexes = 0;
    for (const TrackedPoint& tp : L.points) apexes += tp.states == 2 ? 1 : 0;
    CHECK(apexes == 4);
  }

  TEST_CASE("infeasible placements are rejected") {
    const EdgePath p = fixture::corpus(4).paths.front();
    CHECK_THROWS_AS(folded_layout(p, make_placement(4, 0)), std::invalid_argument);
    CHECK_NOTHROW(folded_layout_unchecked(p, make_placement(4, 0)));
  }

  TEST_CASE("contraction agrees with the boundary-walk oracle") {
    const BoardSpec spec = BoardSpec::make(6);
    int checked = 0;
    for (const EdgePath& p : fixture::corpus(6).paths) {
      for (int o = 0; o < 9; ++o) {
        const CornerPlacement c = make_placement(6, o);
        const ContractionReport r = contraction_check(folded_layout_unchecked(p, c), spec);
        const OracleVerdict v = oracle_contraction(p, o);
        CHECK(r.pass == v.pass);
        CHECK(static_cast<long long>(r.comparisons_performed) == v.comparisons);
        CHECK(r.pass == r.violations.empty());
        ++checked;
      }
    }
    CHECK(checked == 192 * 9);
  }

  TEST_CASE("feasible placements on n = 6 are contractive; staircases never are") {
    const BoardSpec spec = BoardSpec::make(6);
    for (const EdgePath& p : fixture::corpus(6).paths) {
      for (int o = 0; o < 9; ++o) {
        const CornerPlacement c = make_placement(6, o);
        int staircases = 0;
        for (int s : c.corner_steps) staircases += corner_feasible_at(p, s) ? 0 : 1;
        const ContractionReport r = contraction_check(folded_layout_unchecked(p, c), spec);
        CHECK(r.pass == (staircases == 0));
        if (staircases == 1) {
          CHECK(r.worst_pair.unfolded_sq == 8);
          CHECK(r.worst_pair.folded_sq == 10);
        }
      }
    }
  }

  TEST_CASE("comparison counts") {
    CHECK(comparison_count_formula(BoardSpec::make(2)) == 120);
    CHECK(comparison_count_formula(BoardSpec::make(6)) == 12040);
    CHECK(comparison_count_formula(BoardSpec::make(8)) == 38430);
    CHECK(tracked_comparison_count(BoardSpec::make(2)) == 62);
    const EdgePath diamond = fixture::corpus(2).paths.front();
    const ContractionReport r = contraction_check(folded_layout(diamond, make_placement(2, 0)), BoardSpec::make(2));
    CHECK(r.comparisons_performed == 62);
    CHECK_THROWS(contraction_check(folded_layout(diamond, make_placement(2, 0)), BoardSpec::make(4)));
  }
}
