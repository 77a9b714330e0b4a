#include "edgepat/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgepat {

namespace {

constexpr std::uint64_t kTimeCheckMask = (1u << 12) - 1;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturating_pow2(int k) {
  return k >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << k;
}

int uf_find(const std::vector<int>& parent, int i) {
  while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
  return i;
}

std::string candidate_abort(std::uint64_t limit) {
  return "candidate budget of " + std::to_string(limit) + " exhausted";
}

std::string time_abort(double limit) {
  std::ostringstream s;
  s << "wall-time budget of " << limit << " s exhausted";
  return s.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Tier 1

BruteForceEnumerator::BruteForceEnumerator(const BoardSpec& spec, EnumerationBudget budget)
    : spec_(spec), budget_(budget) {
  const int n = spec.n();
  if ((n + 1) * (n + 1) > kMaxPoints) throw std::invalid_argument("brute force supports n <= 16");
  result_.tier = 1;
  result_.n = n;
  diagonal_.assign(static_cast<std::size_t>(n * n), 0);
  flip_.resize(static_cast<std::size_t>(n * n));
  auto bit = [n](int x, int y) { return static_cast<std::size_t>(x * (n + 1) + y); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PointSet& f = flip_[static_cast<std::size_t>(i * n + j)];
      f.set(bit(i, j)).set(bit(i + 1, j + 1)).set(bit(i + 1, j)).set(bit(i, j + 1));
      // Start from every square on its anti-diagonal.
      odd_points_.flip(bit(i + 1, j));
      odd_points_.flip(bit(i, j + 1));
    }
  }
}

bool BruteForceEnumerator::advance_assignment() {
  // Binary increment; bit k is square k.
  for (std::size_t k = 0; k < diagonal_.size(); ++k) {
    odd_points_ ^= flip_[k];
    diagonal_[k] ^= 1;
    if (diagonal_[k]) return true;
  }
  return false;
}

void BruteForceEnumerator::search_threadings() {
  const int n = spec_.n();
  const int side = n + 1;
  // Outgoing square per lattice point and direction code, -1 if absent.
  std::vector<std::array<int, 4>> out(static_cast<std::size_t>(side * side), {-1, -1, -1, -1});
  auto at = [side](LatticePoint p) { return static_cast<std::size_t>(p.x * side + p.y); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int s = i * n + j;
      if (diagonal_[static_cast<std::size_t>(s)]) {
        out[at({i, j})][direction_code({1, 1})] = s;
        out[at({i + 1, j + 1})][direction_code({-1, -1})] = s;
      } else {
        out[at({i + 1, j})][direction_code({-1, 1})] = s;
        out[at({i, j + 1})][direction_code({1, -1})] = s;
      }
    }
  }
  std::vector<std::size_t> crossings;
  std::vector<int> crossing_slot(out.size(), -1);
  for (std::size_t p = 0; p < out.size(); ++p) {
    const auto degree = std::count_if(out[p].begin(), out[p].end(), [](int s) { return s >= 0; });
    if (degree == 4) {
      crossing_slot[p] = static_cast<int>(crossings.size());
      crossings.push_back(p);
    }
  }
  if (crossings.size() >= 32) return;

  const std::uint32_t combos = std::uint32_t{1} << crossings.size();
  const std::size_t total = static_cast<std::size_t>(n * n);
  for (std::uint32_t choice = 0; choice < combos; ++choice) {
    EdgePath path;
    path.n = n;
    path.steps.reserve(total);
    // Enter square 0 from its lower-x endpoint.
    const int first = 0;
    LatticePoint at_point = diagonal_[0] ? LatticePoint{0, 0} : LatticePoint{0, 1};
    Direction d = diagonal_[0] ? Direction{1, 1} : Direction{1, -1};
    int s = first;
    bool closed = false;
    while (path.steps.size() <= total) {
      path.steps.push_back({SquareId{s / n, s % n}, d});
      at_point = at_point + d;
      const std::size_t p = at(at_point);
      const Direction back = -d;
      Direction next_dir{};
      const int slot = crossing_slot[p];
      if (slot < 0) {
        bool found = false;
        for (int c = 0; c < 4; ++c) {
          if (out[p][static_cast<std::size_t>(c)] >= 0 && direction_from_code(c) != back) {
            next_dir = direction_from_code(c);
            found = true;
          }
        }
        if (!found) break;
      } else {
        // The two non-crossing pairings at a degree-4 point.
        next_dir = (choice >> slot) & 1u ? Direction{back.dx, -back.dy} : Direction{-back.dx, back.dy};
      }
      const int next_square = out[p][static_cast<std::size_t>(direction_code(next_dir))];
      if (next_square == first && next_dir == path.steps.front().dir) {
        closed = true;
        break;
      }
      s = next_square;
      d = next_dir;
    }
    if (closed && path.steps.size() == total) pending_.push_back(normalized(path));
  }
  std::reverse(pending_.begin(), pending_.end());
}

std::optional<EdgePath> BruteForceEnumerator::next() {
  while (true) {
    if (!pending_.empty() && !result_.aborted) {
      EdgePath p = std::move(pending_.back());
      pending_.pop_back();
      ++result_.solutions;
      return p;
    }
    if (done_) {
      result_.seconds = clock_.seconds();
      return std::nullopt;
    }
    if (started_ && !advance_assignment()) {
      done_ = true;
      continue;
    }
    started_ = true;
    if (result_.candidates_examined >= budget_.max_candidates) {
      result_.aborted = true;
      result_.abort_reason = candidate_abort(budget_.max_candidates);
      done_ = true;
      continue;
    }
    if ((result_.candidates_examined & kTimeCheckMask) == 0 && clock_.seconds() > budget_.max_seconds) {
      result_.aborted = true;
      result_.abort_reason = time_abort(budget_.max_seconds);
      done_ = true;
      continue;
    }
    ++result_.candidates_examined;
    // Every point of a closed curve has even degree.
    if (odd_points_.none()) {
      ++result_.tested;
      search_threadings();
    }
  }
}

// ---------------------------------------------------------------------------
// Tier 2

PathGrowingEnumerator::PathGrowingEnumerator(const BoardSpec& spec, EnumerationBudget budget)
    : lattice_(spec), budget_(budget) {
  result_.tier = 2;
  result_.n = spec.n();
  const auto arcs = static_cast<std::size_t>(lattice_.graph().arc_count());
  const auto verts = static_cast<std::size_t>(lattice_.graph().vertex_count());
  states_.assign(arcs, JunctionState::cut);
  choice_.assign(arcs, -1);
  undo_root_.assign(arcs, -1);
  parent_.resize(verts);
  std::iota(parent_.begin(), parent_.end(), 0);
  size_.assign(verts, 1);
}

bool PathGrowingEnumerator::try_link(int arc) {
  const Arc& a = lattice_.graph().arcs()[static_cast<std::size_t>(arc)];
  int ru = uf_find(parent_, a.u);
  int rv = uf_find(parent_, a.v);
  if (ru == rv) return false;
  if (size_[static_cast<std::size_t>(ru)] > size_[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
  parent_[static_cast<std::size_t>(ru)] = rv;
  size_[static_cast<std::size_t>(rv)] += size_[static_cast<std::size_t>(ru)];
  undo_root_[static_cast<std::size_t>(arc)] = ru;
  return true;
}

void PathGrowingEnumerator::undo(int arc) {
  const int child = undo_root_[static_cast<std::size_t>(arc)];
  const int root = parent_[static_cast<std::size_t>(child)];
  size_[static_cast<std::size_t>(root)] -= size_[static_cast<std::size_t>(child)];
  parent_[static_cast<std::size_t>(child)] = child;
  undo_root_[static_cast<std::size_t>(arc)] = -1;
}

bool PathGrowingEnumerator::next_leaf() {
  const int arcs = lattice_.graph().arc_count();
  if (!started_) {
    started_ = true;
  } else {
    bool resumed = false;
    while (depth_ > 0 && !resumed) {
      const int k = --depth_;
      const auto ku = static_cast<std::size_t>(k);
      if (choice_[ku] == 1) {
        undo(k);
        choice_[ku] = -1;
        states_[ku] = JunctionState::cut;
        continue;
      }
      if (try_link(k)) {
        choice_[ku] = 1;
        states_[ku] = JunctionState::link;
        ++depth_;
        resumed = true;
      } else {
        // The Link arcs would close a cycle: skip the whole subtree.
        choice_[ku] = -1;
        result_.candidates_examined =
            saturating_add(result_.candidates_examined, saturating_pow2(arcs - k - 1));
      }
    }
    if (!resumed) return false;
  }
  while (depth_ < arcs) {
    choice_[static_cast<std::size_t>(depth_)] = 0;
    states_[static_cast<std::size_t>(depth_)] = JunctionState::cut;
    ++depth_;
  }
  return true;
}

std::optional<EdgePath> PathGrowingEnumerator::next() {
  while (!done_) {
    if (result_.candidates_examined >= budget_.max_candidates) {
      result_.aborted = true;
      result_.abort_reason = candidate_abort(budget_.max_candidates);
      done_ = true;
      break;
    }
    if ((result_.tested & kTimeCheckMask) == 0 && clock_.seconds() > budget_.max_seconds) {
      result_.aborted = true;
      result_.abort_reason = time_abort(budget_.max_seconds);
      done_ = true;
      break;
    }
    if (!next_leaf()) {
      done_ = true;
      break;
    }
    ++result_.candidates_examined;
    ++result_.tested;
    if (std::optional<EdgePath> p = lattice_.single_loop(states_)) {
      ++result_.solutions;
      return p;
    }
  }
  result_.seconds = clock_.seconds();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tier 3

SpanningTreeEnumerator::SpanningTreeEnumerator(int vertex_count, std::vector<Arc> arcs, EnumerationBudget budget)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), budget_(budget) {
  if (vertex_count_ <= 0) throw std::invalid_argument("graph has no vertices");
  result_.tier = 3;
  const auto verts = static_cast<std::size_t>(vertex_count_);
  adjacency_.resize(verts);
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    adjacency_[static_cast<std::size_t>(arcs_[k].u)].push_back({arcs_[k].v, static_cast<int>(k)});
    adjacency_[static_cast<std::size_t>(arcs_[k].v)].push_back({arcs_[k].u, static_cast<int>(k)});
  }
  choice_.assign(arcs_.size(), -1);
  removed_.assign(arcs_.size(), 0);
  undo_root_.assign(arcs_.size(), -1);
  parent_.resize(verts);
  std::iota(parent_.begin(), parent_.end(), 0);
  size_.assign(verts, 1);
  mark_.assign(verts, 0);
  queue_.reserve(verts);
}

SpanningTreeEnumerator::SpanningTreeEnumerator(const GridGraph& g, EnumerationBudget budget)
    : SpanningTreeEnumerator(g.vertex_count(), g.arcs(), budget) {
  result_.n = g.spec().n();
}

bool SpanningTreeEnumerator::try_include(int arc) {
  const Arc& a = arcs_[static_cast<std::size_t>(arc)];
  int ru = uf_find(parent_, a.u);
  int rv = uf_find(parent_, a.v);
  if (ru == rv) return false;
  if (size_[static_cast<std::size_t>(ru)] > size_[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
  parent_[static_cast<std::size_t>(ru)] = rv;
  size_[static_cast<std::size_t>(rv)] += size_[static_cast<std::size_t>(ru)];
  undo_root_[static_cast<std::size_t>(arc)] = ru;
  ++included_;
  return true;
}

void SpanningTreeEnumerator::undo(int arc) {
  const auto k = static_cast<std::size_t>(arc);
  if (choice_[k] == 1) {
    const int child = undo_root_[k];
    const int root = parent_[static_cast<std::size_t>(child)];
    size_[static_cast<std::size_t>(root)] -= size_[static_cast<std::size_t>(child)];
    parent_[static_cast<std::size_t>(child)] = child;
    undo_root_[k] = -1;
    --included_;
  } else if (choice_[k] == 0) {
    removed_[k] = 0;
  }
  choice_[k] = -1;
}

// Are the arc's endpoints still joined once it is removed?
bool SpanningTreeEnumerator::connected_without(int arc) {
  const Arc& a = arcs_[static_cast<std::size_t>(arc)];
  if (++mark_epoch_ == std::numeric_limits<int>::max()) {
    std::fill(mark_.begin(), mark_.end(), 0);
    mark_epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(a.u);
  mark_[static_cast<std::size_t>(a.u)] = mark_epoch_;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int v = queue_[head];
    for (const auto& [w, k] : adjacency_[static_cast<std::size_t>(v)]) {
      if (k == arc || removed_[static_cast<std::size_t>(k)] || mark_[static_cast<std::size_t>(w)] == mark_epoch_) {
        continue;
      }
      if (w == a.v) return true;
      mark_[static_cast<std::size_t>(w)] = mark_epoch_;
      queue_.push_back(w);
    }
  }
  return false;
}

bool SpanningTreeEnumerator::try_exclude(int arc) {
  if (!connected_without(arc)) return false;
  removed_[static_cast<std::size_t>(arc)] = 1;
  return true;
}

bool SpanningTreeEnumerator::next_leaf() {
  const int arcs = static_cast<int>(arcs_.size());
  const int target = vertex_count_ - 1;
  if (!started_) {
    started_ = true;
    // A disconnected graph has no spanning tree at all.
    std::vector<int> comp(static_cast<std::size_t>(vertex_count_));
    std::iota(comp.begin(), comp.end(), 0);
    int merged = 0;
    for (const Arc& a : arcs_) {
      int ru = comp[static_cast<std::size_t>(a.u)];
      while (comp[static_cast<std::size_t>(ru)] != ru) ru = comp[static_cast<std::size_t>(ru)];
      int rv = comp[static_cast<std::size_t>(a.v)];
      while (comp[static_cast<std::size_t>(rv)] != rv) rv = comp[static_cast<std::size_t>(rv)];
      if (ru != rv) {
        comp[static_cast<std::size_t>(ru)] = rv;
        ++merged;
      }
    }
    if (merged != target) return false;
  } else {
    bool resumed = false;
    while (depth_ > 0 && !resumed) {
      const int k = --depth_;
      const bool was_included = choice_[static_cast<std::size_t>(k)] == 1;
      undo(k);
      if (was_included && try_exclude(k)) {
        choice_[static_cast<std::size_t>(k)] = 0;
        ++depth_;
        ++result_.candidates_examined;
        resumed = true;
      }
    }
    if (!resumed) return false;
  }
  while (included_ < target && depth_ < arcs) {
    const int k = depth_;
    if (try_include(k)) {
      choice_[static_cast<std::size_t>(k)] = 1;
    } else {
      // Endpoints already joined: leaving the arc out keeps connectivity.
      removed_[static_cast<std::size_t>(k)] = 1;
      choice_[static_cast<std::size_t>(k)] = 0;
    }
    ++depth_;
    ++result_.candidates_examined;
  }
  return included_ == target;
}

const SpanningTree* SpanningTreeEnumerator::next() {
  if (done_) return nullptr;
  if (result_.candidates_examined >= budget_.max_candidates) {
    result_.aborted = true;
    result_.abort_reason = candidate_abort(budget_.max_candidates);
  } else if ((result_.solutions & kTimeCheckMask) == 0 && clock_.seconds() > budget_.max_seconds) {
    result_.aborted = true;
    result_.abort_reason = time_abort(budget_.max_seconds);
  } else if (next_leaf()) {
    ++result_.solutions;
    result_.tested = result_.solutions;
    current_.arcs.clear();
    for (int k = 0; k < depth_; ++k) {
      if (choice_[static_cast<std::size_t>(k)] == 1) current_.arcs.push_back(k);
    }
    return &current_;
  }
  done_ = true;
  result_.seconds = clock_.seconds();
  return nullptr;
}

std::uint64_t SpanningTreeEnumerator::count_all() {
  while (!done_) {
    if (result_.candidates_examined >= budget_.max_candidates) {
      result_.aborted = true;
      result_.abort_reason = candidate_abort(budget_.max_candidates);
      break;
    }
    if ((result_.solutions & 0xfffff) == 0 && clock_.seconds() > budget_.max_seconds) {
      result_.aborted = true;
      result_.abort_reason = time_abort(budget_.max_seconds);
      break;
    }
    if (!next_leaf()) break;
    ++result_.solutions;
  }
  done_ = true;
  result_.tested = result_.solutions;
  result_.seconds = clock_.seconds();
  return result_.solutions;
}

// ---------------------------------------------------------------------------
// Cross-check and benchmark

namespace {

struct TierCorpus {
  TierResult result;
  std::vector<std::vector<std::uint8_t>> paths;  // normalized step encodings
  std::vector<CanonicalKey> keys;
};

template <typename Pull>
TierCorpus collect(Pull&& pull) {
  TierCorpus c;
  while (std::optional<EdgePath> p = pull()) {
    c.paths.push_back(encode_steps(normalized(*p)));
    c.keys.push_back(canonical_key(*p));
  }
  return c;
}

}  // namespace

CrossCheckReport cross_check(const BoardSpec& spec, EnumerationBudget budget) {
  CrossCheckReport report;
  report.n = spec.n();
  const SegmentLattice lattice(spec);
  report.kirchhoff = kirchhoff_count(lattice.graph());

  std::vector<TierCorpus> corpora;
  if (spec.n() <= 4) {
    BruteForceEnumerator e(spec, budget);
    TierCorpus c = collect([&] { return e.next(); });
    c.result = e.result();
    corpora.push_back(std::move(c));
  }
  if (spec.n() <= 8) {
    PathGrowingEnumerator e(spec, budget);
    TierCorpus c = collect([&] { return e.next(); });
    c.result = e.result();
    corpora.push_back(std::move(c));
  }
  {
    SpanningTreeEnumerator e(lattice.graph(), budget);
    TierCorpus c = collect([&]() -> std::optional<EdgePath> {
      const SpanningTree* t = e.next();
      if (!t) return std::nullopt;
      return lattice.tree_to_path(*t);
    });
    c.result = e.result();
    corpora.push_back(std::move(c));
  }

  report.counts_agree = true;
  report.paths_agree = true;
  report.duplicate_free = true;
  std::ostringstream diag;
  for (TierCorpus& c : corpora) {
    report.tiers.push_back(c.result);
    if (c.result.aborted) {
      report.counts_agree = false;
      diag << "tier " << c.result.tier << " aborted: " << c.result.abort_reason << "\n";
    }
    if (BigInt(c.result.solutions) != report.kirchhoff) {
      report.counts_agree = false;
      diag << "tier " << c.result.tier << " emitted " << c.result.solutions << " paths, matrix-tree count is "
           << report.kirchhoff << "\n";
    }
    std::sort(c.paths.begin(), c.paths.end());
    if (std::adjacent_find(c.paths.begin(), c.paths.end()) != c.paths.end()) {
      report.duplicate_free = false;
      diag << "tier " << c.result.tier << " emitted a path twice\n";
    }
    std::sort(c.keys.begin(), c.keys.end());
  }
  const TierCorpus& ref = corpora.front();
  std::set<CanonicalKey> orbits(ref.keys.begin(), ref.keys.end());
  report.orbits = orbits.size();
  for (std::size_t t = 1; t < corpora.size(); ++t) {
    const TierCorpus& other = corpora[t];
    if (other.paths != ref.paths || other.keys != ref.keys) {
      report.paths_agree = false;
      auto mismatch = std::mismatch(ref.keys.begin(), ref.keys.end(), other.keys.begin(), other.keys.end());
      const CanonicalKey* first =
          mismatch.first != ref.keys.end() ? &*mismatch.first
                                           : (mismatch.second != other.keys.end() ? &*mismatch.second : nullptr);
      diag << "tiers " << ref.result.tier << " and " << other.result.tier << " differ";
      if (first) diag << "; first differing canonical key " << first->hex();
      diag << "\n";
    }
  }
  report.diagnostic = diag.str();
  return report;
}

std::vector<TierResult> benchmark(const BoardSpec& spec, const std::vector<int>& tiers, EnumerationBudget budget) {
  std::vector<TierResult> rows;
  for (int tier : tiers) {
    switch (tier) {
      case 1: {
        BruteForceEnumerator e(spec, budget);
        while (e.next()) {
        }
        rows.push_back(e.result());
        break;
      }
      case 2: {
        PathGrowingEnumerator e(spec, budget);
        while (e.next()) {
        }
        rows.push_back(e.result());
        break;
      }
      case 3: {
        detail::Stopwatch clock;
        const SegmentLattice lattice(spec);
        SpanningTreeEnumerator e(lattice.graph(), budget);
        std::uint64_t paths = 0;
        while (const SpanningTree* t = e.next()) {
          if (lattice.single_loop(lattice.states_of(*t))) ++paths;
        }
        TierResult r = e.result();
        r.solutions = paths;
        r.seconds = clock.seconds();
        rows.push_back(r);
        break;
      }
      default:
        throw std::invalid_argument("tier must be 1, 2 or 3");
    }
  }
  return rows;
}

std::string benchmark_csv_header() { return "n,tier,candidates,solutions,seconds,aborted"; }

std::string benchmark_csv_row(const TierResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.6f", r.seconds);
  return std::to_string(r.n) + "," + std::to_string(r.tier) + "," + std::to_string(r.candidates_examined) + "," +
         std::to_string(r.solutions) + "," + seconds + "," + (r.aborted ? "true" : "false");
}

}  // namespace edgepat
