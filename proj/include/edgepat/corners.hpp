#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "edgepat/edge_path.hpp"

namespace edgepat {

// True when the steps before and after step i point in opposite directions
// (a switchback). The identically oriented staircase cannot host a corner.
bool corner_feasible_at(const EdgePath& p, std::ptrdiff_t i);

// Four path steps spaced n^2/4 apart that receive the sheet's corners.
struct CornerPlacement {
  int offset = 0;
  std::array<int, 4> corner_steps{};
  friend bool operator==(const CornerPlacement&, const CornerPlacement&) = default;
};

CornerPlacement make_placement(int n, int offset);
bool placement_feasible(const EdgePath& p, const CornerPlacement& c);

// Empty when the path admits no corner placement. n = 2 is not special-cased
// here; the corpus pipeline drops it as degenerate.
std::vector<CornerPlacement> enumerate_corner_placements(const EdgePath& p);

// The image of the placement's corner squares under s, as a placement on the
// same path. Requires s to map the loop onto itself.
bool placement_fixed_by(const EdgePath& p, const CornerPlacement& c, Symmetry s);
bool placements_swapped_by(const EdgePath& p, const CornerPlacement& a, const CornerPlacement& b, Symmetry s);

enum class SelfSymmetry : std::uint8_t { none, horizontal, vertical, other };

std::string_view to_string(SelfSymmetry s);
SelfSymmetry self_symmetry_from_string(std::string_view s);

// Horizontal or vertical when the stabilizer holds that reflection; other for
// any remaining nontrivial stabilizer.
SelfSymmetry classify_self_symmetry(const EdgePath& p);

struct SelfSymmetricFilterResult {
  std::vector<std::size_t> survivors;  // indices into the input
  // Survivors whose stabilizer holds elements beyond identity and the axis reflection.
  std::vector<std::size_t> with_other_symmetry;
  // Inputs whose only self-symmetries are non-axis ones.
  std::vector<std::size_t> other_only;
};

SelfSymmetricFilterResult filter_self_symmetric(std::span<const EdgePath> reps);

bool is_line_tree(const GridGraph& g, const SpanningTree& tree);

// Indices of representatives whose tree has exactly two leaves and whose path
// has at least one corner placement.
std::vector<std::size_t> filter_line_trees(const GridGraph& g, std::span<const SpanningTree> trees,
                                           std::span<const EdgePath> paths);

// One tracked boundary point of the unfolded sheet.
struct TrackedPoint {
  LatticePoint unfolded;                  // on the square of side n^2/2
  std::array<LatticePoint, 2> folded{};  // flap states; a vertex has one
  int states = 1;
};

// 2 n^2 tracked points at integer arclength t. Even t is path vertex t/2;
// odd t is the flap apex of step (t-1)/2, one of the two off-diagonal corners
// of its square. The sheet's corners sit at the apexes of the corner steps.
struct FoldedBoundaryLayout {
  int n = 0;
  int side = 0;
  CornerPlacement placement;
  std::vector<TrackedPoint> points;
};

// Throws std::invalid_argument for an infeasible placement.
FoldedBoundaryLayout folded_layout(const EdgePath& p, const CornerPlacement& c);
// No feasibility check; used to exhibit failing corner configurations.
FoldedBoundaryLayout folded_layout_unchecked(const EdgePath& p, const CornerPlacement& c);

struct PairDistance {
  int t_i = 0;
  int t_j = 0;
  std::int64_t unfolded_sq = 0;
  std::int64_t folded_sq = 0;  // maximum over flap states
  double unfolded() const;
  double folded() const;
  friend bool operator==(const PairDistance&, const PairDistance&) = default;
};

struct ContractionReport {
  bool pass = true;
  std::uint64_t comparisons_performed = 0;
  // Pair with the largest folded^2 / unfolded^2; ties go to the larger distance.
  PairDistance worst_pair;
  std::vector<PairDistance> violations;
};

// Every pair of tracked points under every combination of their flap states
// must satisfy folded <= unfolded. Squared distances are exact integers.
ContractionReport contraction_check(const FoldedBoundaryLayout& layout, const BoardSpec& spec);

// Comparisons performed by contraction_check: (9 n^4 - 5 n^2) / 2.
std::int64_t tracked_comparison_count(const BoardSpec& spec);

// (19 n^4 - 15 n^2) / 2 - 2.
std::int64_t comparison_count_formula(const BoardSpec& spec);

}  // namespace edgepat
