#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgepat/geometry.hpp"
#include "edgepat/grid_graph.hpp"

namespace edgepat {

// One traversal of a board square's diagonal.
struct Step {
  SquareId square;
  Direction dir;
  friend auto operator<=>(const Step&, const Step&) = default;
};

LatticePoint step_start(const Step& s);
LatticePoint step_end(const Step& s);

// Cyclic sequence of diagonal steps. A valid generalized edge pattern has
// n^2 steps forming one closed, non-crossing loop. Several closed loops may
// be concatenated when describing an invalid threading.
struct EdgePath {
  int n = 0;
  std::vector<Step> steps;

  std::size_t size() const { return steps.size(); }
  const Step& operator[](std::size_t i) const { return steps[i]; }
  // Cyclic accessor.
  const Step& at_cyclic(std::ptrdiff_t i) const;
  std::vector<LatticePoint> vertices() const;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

// The square's only admissible diagonal: the one joining its two
// mixed-parity corners, returned in lexicographic order.
std::pair<LatticePoint, LatticePoint> square_segment(SquareId sq, const BoardSpec& spec);

// Threading state at a junction (interior mixed-parity point), one per arc of
// the grid graph. Link keeps the corridor between the two diamond cells open.
enum class JunctionState : std::uint8_t { cut, link };

class MultiLoopError : public std::runtime_error {
 public:
  explicit MultiLoopError(int loop_count)
      : std::runtime_error("threading produced " + std::to_string(loop_count) + " loops"),
        loop_count_(loop_count) {}
  int loop_count() const { return loop_count_; }

 private:
  int loop_count_;
};

class MalformedPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The fixed segment set of a board together with the threading rules at
// every lattice point. Construct once per board size and reuse.
class SegmentLattice {
 public:
  explicit SegmentLattice(const BoardSpec& spec);

  const BoardSpec& spec() const { return graph_.spec(); }
  const GridGraph& graph() const { return graph_; }

  // Step through square index s with the interior (odd-odd corner) on the left.
  const Step& oriented_step(int s) const { return steps_[static_cast<std::size_t>(s)]; }

  // Threads the fixed segments; returns each loop as square indices starting
  // at its lowest square index, loops ordered by that index.
  std::vector<std::vector<int>> thread_loops(std::span<const JunctionState> states) const;
  int loop_count(std::span<const JunctionState> states) const;
  // The loop through square 0 when it covers every square, else nullopt.
  std::optional<EdgePath> single_loop(std::span<const JunctionState> states) const;

  // Throws MultiLoopError when the arc set is not a spanning tree.
  EdgePath tree_to_path(const SpanningTree& tree) const;
  // Concatenation of all loops of an arbitrary arc set; feeds path_validate.
  EdgePath arcs_to_threading(const SpanningTree& arcs) const;
  // Throws MalformedPathError.
  SpanningTree path_to_tree(const EdgePath& path) const;

  std::vector<JunctionState> states_of(const SpanningTree& tree) const;

 private:
  EdgePath from_squares(const std::vector<std::vector<int>>& loops) const;

  GridGraph graph_;
  std::vector<Step> steps_;
  std::vector<int> forced_next_;  // -1 at junctions
  std::vector<int> junction_arc_; // arc at the step's end point, -1 on the boundary
  std::vector<int> next_link_;
  std::vector<int> next_cut_;
};

EdgePath tree_to_path(const SpanningTree& tree, const BoardSpec& spec);
SpanningTree path_to_tree(const EdgePath& path, const BoardSpec& spec);

enum class ViolationKind : std::uint8_t {
  wrong_size,
  not_closed,
  coverage,
  foreign_segment,
  multiple_loops,
  crossing,
  aligned_steps,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t step = 0;
  std::string detail;
};

struct ValidationReport {
  bool closed = true;
  bool covers_all_squares = true;
  bool fixed_segments = true;
  int loop_count = 1;
  int crossings = 0;
  int aligned_pairs = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const;
};

ValidationReport path_validate(const EdgePath& path, const BoardSpec& spec);

// Sign of the signed area traced by the steps: +1 counterclockwise, -1 clockwise.
int orientation(const EdgePath& path);

EdgePath reversed(const EdgePath& path);
EdgePath transformed(const EdgePath& path, Symmetry s);

// Counterclockwise traversal starting at square (0, 0).
EdgePath normalized(const EdgePath& path);

// Fixed integer layout: each step is (square_index * 4 + direction_code),
// written as two big-endian bytes.
std::vector<std::uint8_t> encode_steps(const EdgePath& path);

struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  std::string hex() const;
  static CanonicalKey from_hex(const std::string& hex);
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// Lexicographic minimum of the step encoding over the 8 symmetries, both
// traversal directions and every cyclic start.
CanonicalKey canonical_key(const EdgePath& path);

// The normalized orbit member whose symmetry image attains the canonical key.
EdgePath canonical_representative(const EdgePath& path);

// Bitmask (symmetry_bit) of the group elements mapping the loop onto itself.
int stabilizer(const EdgePath& path);

// Cyclic turn letters; letter i is the turn from step i to step i + 1.
std::string turn_word(const EdgePath& path);

}  // namespace edgepat
