#pragma once

#include <bitset>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgepat/edge_path.hpp"
#include "edgepat/grid_graph.hpp"

namespace edgepat {

struct EnumerationBudget {
  std::uint64_t max_candidates = std::uint64_t{1} << 25;
  double max_seconds = 60.0;
};

struct TierResult {
  int tier = 0;
  int n = 0;
  // Tier 1: diagonal assignments. Tier 2: junction configurations, counting
  // each configuration inside a pruned branch as examined. Tier 3: search nodes.
  std::uint64_t candidates_examined = 0;
  // Tier 1: assignments passing the parity pre-filter. Tier 2: configurations
  // actually threaded. Tier 3: trees.
  std::uint64_t tested = 0;
  std::uint64_t solutions = 0;
  double seconds = 0.0;
  bool aborted = false;
  std::string abort_reason;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Tier 1: every assignment of one diagonal per square, 2^(n^2) candidates.
// An assignment passes a degree-parity pre-filter before its threadings are
// searched; each single-loop threading is emitted once, normalized.
// Supports n <= 16; anything beyond n = 4 is expected to abort on budget.
class BruteForceEnumerator {
 public:
  static constexpr int kMaxPoints = 17 * 17;

  explicit BruteForceEnumerator(const BoardSpec& spec, EnumerationBudget budget = {});

  // Pull the next solution; nullopt at exhaustion or abort (see result()).
  std::optional<EdgePath> next();
  const TierResult& result() const { return result_; }

 private:
  using PointSet = std::bitset<kMaxPoints>;

  bool advance_assignment();
  void search_threadings();

  BoardSpec spec_;
  EnumerationBudget budget_;
  detail::Stopwatch clock_;
  TierResult result_;
  std::vector<std::uint8_t> diagonal_;  // 1: main diagonal (i,j)-(i+1,j+1)
  std::vector<PointSet> flip_;          // parity change when a square switches diagonal
  PointSet odd_points_;
  bool started_ = false;
  bool done_ = false;
  std::vector<EdgePath> pending_;
};

// Tier 2: depth-first growth over the n^2/2 - n junction states. A branch is
// pruned as soon as its Link arcs close a cycle (that cycle would seal off a
// second loop); every complete configuration is threaded and tested.
class PathGrowingEnumerator {
 public:
  explicit PathGrowingEnumerator(const BoardSpec& spec, EnumerationBudget budget = {});

  std::optional<EdgePath> next();
  const TierResult& result() const { return result_; }
  const SegmentLattice& lattice() const { return lattice_; }

 private:
  bool next_leaf();
  bool try_link(int arc);
  void undo(int arc);

  SegmentLattice lattice_;
  EnumerationBudget budget_;
  detail::Stopwatch clock_;
  TierResult result_;
  std::vector<JunctionState> states_;
  std::vector<std::int8_t> choice_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> undo_root_;  // per arc: root attached by its link, -1 if none
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Tier 3: spanning trees of a graph by binary partition on the arcs
// (include arc k, or exclude it). Each move adds or removes one arc from the
// current partial tree; no branch is dead, so the work is output-sensitive.
class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(int vertex_count, std::vector<Arc> arcs, EnumerationBudget budget = {});
  explicit SpanningTreeEnumerator(const GridGraph& g, EnumerationBudget budget = {});

  // The returned tree stays valid until the next call.
  const SpanningTree* next();
  // Count-only mode: exhausts the enumeration without materializing trees.
  std::uint64_t count_all();
  const TierResult& result() const { return result_; }

 private:
  bool next_leaf();
  bool try_include(int arc);
  bool try_exclude(int arc);
  void undo(int arc);
  bool connected_without(int arc);

  int vertex_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;  // (neighbor, arc)
  EnumerationBudget budget_;
  detail::Stopwatch clock_;
  TierResult result_;

  std::vector<std::int8_t> choice_;  // 1 include, 0 exclude, -1 undecided
  std::vector<std::uint8_t> removed_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> undo_root_;
  std::vector<int> mark_;
  std::vector<int> queue_;
  int mark_epoch_ = 0;
  int included_ = 0;
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  SpanningTree current_;
};

struct CrossCheckReport {
  int n = 0;
  std::vector<TierResult> tiers;
  BigInt kirchhoff;
  std::uint64_t orbits = 0;
  bool counts_agree = false;
  bool paths_agree = false;
  bool duplicate_free = false;
  std::string diagnostic;
  bool ok() const { return counts_agree && paths_agree && duplicate_free; }
};

// Runs every tier that is feasible for n (tier 1 up to n = 4, tier 2 up to
// n = 8, tier 3 always) and compares counts and emitted path sets.
CrossCheckReport cross_check(const BoardSpec& spec, EnumerationBudget budget = {});

// Runs each requested tier to completion or budget abort. Tier 3 includes the
// tree-to-path conversion so every tier counts valid paths.
std::vector<TierResult> benchmark(const BoardSpec& spec, const std::vector<int>& tiers,
                                  EnumerationBudget budget = {});

std::string benchmark_csv_header();
std::string benchmark_csv_row(const TierResult& r);

}  // namespace edgepat
