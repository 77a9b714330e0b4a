#include "edgepat/corners.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace edgepat {

bool corner_feasible_at(const EdgePath& p, std::ptrdiff_t i) {
  return p.at_cyclic(i + 1).dir == -p.at_cyclic(i - 1).dir;
}

CornerPlacement make_placement(int n, int offset) {
  const int quarter = n * n / 4;
  if (offset < 0 || offset >= quarter) throw std::out_of_range("corner offset outside [0, n^2/4)");
  CornerPlacement c;
  c.offset = offset;
  for (int k = 0; k < 4; ++k) c.corner_steps[static_cast<std::size_t>(k)] = offset + k * quarter;
  return c;
}

bool placement_feasible(const EdgePath& p, const CornerPlacement& c) {
  return std::all_of(c.corner_steps.begin(), c.corner_steps.end(),
                     [&](int i) { return corner_feasible_at(p, i); });
}

std::vector<CornerPlacement> enumerate_corner_placements(const EdgePath& p) {
  if (p.n % 2 != 0) throw std::invalid_argument("corner placements need even n");
  std::vector<CornerPlacement> out;
  for (int o = 0; o < p.n * p.n / 4; ++o) {
    CornerPlacement c = make_placement(p.n, o);
    if (placement_feasible(p, c)) out.push_back(c);
  }
  return out;
}

namespace {

std::vector<SquareId> corner_squares(const EdgePath& p, const CornerPlacement& c, Symmetry s) {
  std::vector<SquareId> out;
  for (int i : c.corner_steps) out.push_back(apply_symmetry(s, p.at_cyclic(i).square, p.n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool placement_fixed_by(const EdgePath& p, const CornerPlacement& c, Symmetry s) {
  return corner_squares(p, c, s) == corner_squares(p, c, Symmetry::identity);
}

bool placements_swapped_by(const EdgePath& p, const CornerPlacement& a, const CornerPlacement& b, Symmetry s) {
  return corner_squares(p, a, s) == corner_squares(p, b, Symmetry::identity);
}

std::string_view to_string(SelfSymmetry s) {
  switch (s) {
    case SelfSymmetry::none: return "none";
    case SelfSymmetry::horizontal: return "horizontal";
    case SelfSymmetry::vertical: return "vertical";
    case SelfSymmetry::other: return "other";
  }
  return "none";
}

SelfSymmetry self_symmetry_from_string(std::string_view s) {
  for (SelfSymmetry k : {SelfSymmetry::none, SelfSymmetry::horizontal, SelfSymmetry::vertical, SelfSymmetry::other}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown self_symmetry value '" + std::string(s) + "'");
}

SelfSymmetry classify_self_symmetry(const EdgePath& p) {
  const int stab = stabilizer(p);
  if (stab & symmetry_bit(Symmetry::mirror_horizontal)) return SelfSymmetry::horizontal;
  if (stab & symmetry_bit(Symmetry::mirror_vertical)) return SelfSymmetry::vertical;
  if (stab != symmetry_bit(Symmetry::identity)) return SelfSymmetry::other;
  return SelfSymmetry::none;
}

SelfSymmetricFilterResult filter_self_symmetric(std::span<const EdgePath> reps) {
  constexpr int axis = symmetry_bit(Symmetry::mirror_horizontal) | symmetry_bit(Symmetry::mirror_vertical);
  constexpr int trivial = symmetry_bit(Symmetry::identity);
  SelfSymmetricFilterResult r;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const int stab = stabilizer(reps[k]);
    if (stab & axis) {
      r.survivors.push_back(k);
      const int rest = stab & ~trivial;
      if (rest != symmetry_bit(Symmetry::mirror_horizontal) && rest != symmetry_bit(Symmetry::mirror_vertical)) {
        r.with_other_symmetry.push_back(k);
      }
    } else if (stab != trivial) {
      r.other_only.push_back(k);
    }
  }
  return r;
}

bool is_line_tree(const GridGraph& g, const SpanningTree& tree) { return leaf_count(g, tree) == 2; }

std::vector<std::size_t> filter_line_trees(const GridGraph& g, std::span<const SpanningTree> trees,
                                           std::span<const EdgePath> paths) {
  if (trees.size() != paths.size()) throw std::invalid_argument("trees and paths differ in length");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < trees.size(); ++k) {
    if (is_line_tree(g, trees[k]) && !enumerate_corner_placements(paths[k]).empty()) out.push_back(k);
  }
  return out;
}

FoldedBoundaryLayout folded_layout_unchecked(const EdgePath& p, const CornerPlacement& c) {
  const int n = p.n;
  const int n2 = n * n;
  if (static_cast<int>(p.size()) != n2) throw std::invalid_argument("layout needs a path of n^2 steps");
  FoldedBoundaryLayout layout;
  layout.n = n;
  layout.side = n2 / 2;
  layout.placement = c;
  layout.points.resize(static_cast<std::size_t>(2 * n2));
  const int side = layout.side;
  for (int t = 0; t < 2 * n2; ++t) {
    TrackedPoint& tp = layout.points[static_cast<std::size_t>(t)];
    const int u = ((t - (2 * c.offset + 1)) % (2 * n2) + 2 * n2) % (2 * n2);
    const int r = u % side;
    switch (u / side) {
      case 0: tp.unfolded = {r, 0}; break;
      case 1: tp.unfolded = {side, r}; break;
      case 2: tp.unfolded = {side - r, side}; break;
      default: tp.unfolded = {0, side - r}; break;
    }
    const Step& s = p[static_cast<std::size_t>(t / 2)];
    const LatticePoint start = step_start(s);
    if (t % 2 == 0) {
      tp.folded = {start, start};
      tp.states = 1;
    } else {
      tp.folded = {LatticePoint{start.x + s.dir.dx, start.y}, LatticePoint{start.x, start.y + s.dir.dy}};
      tp.states = 2;
    }
  }
  return layout;
}

FoldedBoundaryLayout folded_layout(const EdgePath& p, const CornerPlacement& c) {
  if (!placement_feasible(p, c)) {
    throw std::invalid_argument("corner placement at offset " + std::to_string(c.offset) + " is infeasible");
  }
  return folded_layout_unchecked(p, c);
}

double PairDistance::unfolded() const { return std::sqrt(static_cast<double>(unfolded_sq)); }
double PairDistance::folded() const { return std::sqrt(static_cast<double>(folded_sq)); }

namespace {

std::int64_t squared(LatticePoint a, LatticePoint b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Is folded_a / unfolded_a worse than folded_b / unfolded_b?
bool worse(const PairDistance& a, const PairDistance& b) {
  const std::int64_t lhs = a.folded_sq * b.unfolded_sq;
  const std::int64_t rhs = b.folded_sq * a.unfolded_sq;
  if (lhs != rhs) return lhs > rhs;
  return a.unfolded_sq > b.unfolded_sq;
}

}  // namespace

ContractionReport contraction_check(const FoldedBoundaryLayout& layout, const BoardSpec& spec) {
  if (layout.n != spec.n()) throw std::invalid_argument("layout and board sizes differ");
  ContractionReport report;
  const auto& pts = layout.points;
  bool have_worst = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      PairDistance d;
      d.t_i = static_cast<int>(i);
      d.t_j = static_cast<int>(j);
      d.unfolded_sq = squared(pts[i].unfolded, pts[j].unfolded);
      bool violated = false;
      for (int a = 0; a < pts[i].states; ++a) {
        for (int b = 0; b < pts[j].states; ++b) {
          const std::int64_t f = squared(pts[i].folded[static_cast<std::size_t>(a)],
                                         pts[j].folded[static_cast<std::size_t>(b)]);
          ++report.comparisons_performed;
          d.folded_sq = std::max(d.folded_sq, f);
          if (f > d.unfolded_sq) violated = true;
        }
      }
      if (violated) report.violations.push_back(d);
      if (!have_worst || worse(d, report.worst_pair)) {
        report.worst_pair = d;
        have_worst = true;
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::int64_t tracked_comparison_count(const BoardSpec& spec) {
  const std::int64_t n2 = static_cast<std::int64_t>(spec.n()) * spec.n();
  return (9 * n2 * n2 - 5 * n2) / 2;
}

std::int64_t comparison_count_formula(const BoardSpec& spec) {
  const std::int64_t n2 = static_cast<std::int64_t>(spec.n()) * spec.n();
  return (19 * n2 * n2 - 15 * n2) / 2 - 2;
}

}  // namespace edgepat
