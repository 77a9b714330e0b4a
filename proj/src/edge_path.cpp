#include "edgepat/edge_path.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace edgepat {

namespace {

using Codes = std::vector<std::uint16_t>;

std::uint16_t step_code(const Step& s, int n) {
  return static_cast<std::uint16_t>(square_index(s.square, n) * 4 + direction_code(s.dir));
}

// Rotation of `codes` that is lexicographically smallest. Only positions
// holding the minimal code can start it; a valid path has exactly one.
Codes min_rotation(const Codes& codes) {
  if (codes.empty()) return codes;
  const std::uint16_t lo = *std::min_element(codes.begin(), codes.end());
  const std::size_t len = codes.size();
  std::size_t best = len;
  for (std::size_t s = 0; s < len; ++s) {
    if (codes[s] != lo) continue;
    if (best == len) {
      best = s;
      continue;
    }
    for (std::size_t k = 0; k < len; ++k) {
      const auto a = codes[(s + k) % len];
      const auto b = codes[(best + k) % len];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  Codes out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = codes[(best + k) % len];
  return out;
}

Codes codes_of(const EdgePath& p) {
  Codes c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = step_code(p.steps[i], p.n);
  return c;
}

struct BestVariant {
  Codes codes;
  Symmetry symmetry = Symmetry::identity;
  bool reversed = false;
};

BestVariant best_variant(const EdgePath& path) {
  BestVariant best;
  bool have = false;
  for (Symmetry g : all_symmetries) {
    const EdgePath image = transformed(path, g);
    for (bool rev : {false, true}) {
      Codes c = min_rotation(codes_of(rev ? reversed(image) : image));
      if (!have || c < best.codes) {
        best = {std::move(c), g, rev};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

LatticePoint step_start(const Step& s) {
  return {s.square.i + (s.dir.dx > 0 ? 0 : 1), s.square.j + (s.dir.dy > 0 ? 0 : 1)};
}

LatticePoint step_end(const Step& s) { return step_start(s) + s.dir; }

const Step& EdgePath::at_cyclic(std::ptrdiff_t i) const {
  const auto len = static_cast<std::ptrdiff_t>(steps.size());
  return steps[static_cast<std::size_t>(((i % len) + len) % len)];
}

std::vector<LatticePoint> EdgePath::vertices() const {
  std::vector<LatticePoint> v;
  v.reserve(steps.size());
  for (const Step& s : steps) v.push_back(step_start(s));
  return v;
}

std::pair<LatticePoint, LatticePoint> square_segment(SquareId sq, const BoardSpec& spec) {
  if (sq.i < 0 || sq.j < 0 || sq.i >= spec.n() || sq.j >= spec.n()) {
    throw std::out_of_range("square outside the board");
  }
  // The main diagonal joins mixed-parity corners exactly when i + j is odd.
  if ((sq.i + sq.j) % 2 != 0) return {{sq.i, sq.j}, {sq.i + 1, sq.j + 1}};
  return {{sq.i, sq.j + 1}, {sq.i + 1, sq.j}};
}

SegmentLattice::SegmentLattice(const BoardSpec& spec) : graph_(GridGraph::build(spec)) {
  const int n = spec.n();
  const int count = spec.square_count();
  steps_.resize(static_cast<std::size_t>(count));
  std::map<LatticePoint, std::vector<int>> starting;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const SquareId sq{i, j};
      auto [a, b] = square_segment(sq, spec);
      LatticePoint odd_corner{};
      for (LatticePoint c : {LatticePoint{i, j}, {i + 1, j}, {i, j + 1}, {i + 1, j + 1}}) {
        if (classify_point(c, spec) == Parity::odd_odd) odd_corner = c;
      }
      const Direction d{b.x - a.x, b.y - a.y};
      // Left normal of d is (-dy, dx); keep the odd-odd corner on that side.
      const int side = (2 * odd_corner.x - a.x - b.x) * -d.dy + (2 * odd_corner.y - a.y - b.y) * d.dx;
      const Step st = side > 0 ? Step{sq, d} : Step{sq, -d};
      const int s = square_index(sq, n);
      steps_[static_cast<std::size_t>(s)] = st;
      starting[step_start(st)].push_back(s);
    }
  }

  forced_next_.assign(static_cast<std::size_t>(count), -1);
  junction_arc_.assign(static_cast<std::size_t>(count), -1);
  next_link_.assign(static_cast<std::size_t>(count), -1);
  next_cut_.assign(static_cast<std::size_t>(count), -1);
  for (int s = 0; s < count; ++s) {
    const Step& st = steps_[static_cast<std::size_t>(s)];
    const LatticePoint e = step_end(st);
    const std::vector<int>& out = starting.at(e);
    if (out.size() == 1) {
      forced_next_[static_cast<std::size_t>(s)] = out.front();
      continue;
    }
    const int arc = graph_.arc_at_junction(e).value();
    const Direction vertical_pair{-st.dir.dx, st.dir.dy};
    const Direction horizontal_pair{st.dir.dx, -st.dir.dy};
    int via_vertical = -1;
    int via_horizontal = -1;
    for (int o : out) {
      if (steps_[static_cast<std::size_t>(o)].dir == vertical_pair) via_vertical = o;
      if (steps_[static_cast<std::size_t>(o)].dir == horizontal_pair) via_horizontal = o;
    }
    const bool vertical_arc = graph_.is_vertical(arc);
    junction_arc_[static_cast<std::size_t>(s)] = arc;
    next_link_[static_cast<std::size_t>(s)] = vertical_arc ? via_vertical : via_horizontal;
    next_cut_[static_cast<std::size_t>(s)] = vertical_arc ? via_horizontal : via_vertical;
  }
}

std::vector<std::vector<int>> SegmentLattice::thread_loops(std::span<const JunctionState> states) const {
  if (static_cast<int>(states.size()) != graph_.arc_count()) {
    throw std::invalid_argument("one junction state per arc is required");
  }
  const std::size_t count = steps_.size();
  std::vector<char> seen(count, 0);
  std::vector<std::vector<int>> loops;
  for (std::size_t first = 0; first < count; ++first) {
    if (seen[first]) continue;
    std::vector<int> loop;
    std::size_t s = first;
    while (!seen[s]) {
      seen[s] = 1;
      loop.push_back(static_cast<int>(s));
      const int arc = junction_arc_[s];
      if (arc < 0) {
        s = static_cast<std::size_t>(forced_next_[s]);
      } else {
        s = static_cast<std::size_t>(states[static_cast<std::size_t>(arc)] == JunctionState::link ? next_link_[s]
                                                                                                  : next_cut_[s]);
      }
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

int SegmentLattice::loop_count(std::span<const JunctionState> states) const {
  return static_cast<int>(thread_loops(states).size());
}

std::vector<JunctionState> SegmentLattice::states_of(const SpanningTree& tree) const {
  std::vector<JunctionState> states(static_cast<std::size_t>(graph_.arc_count()), JunctionState::cut);
  for (int k : tree.arcs) {
    if (k < 0 || k >= graph_.arc_count()) throw std::out_of_range("arc index out of range");
    states[static_cast<std::size_t>(k)] = JunctionState::link;
  }
  return states;
}

EdgePath SegmentLattice::from_squares(const std::vector<std::vector<int>>& loops) const {
  EdgePath p;
  p.n = spec().n();
  for (const auto& loop : loops) {
    for (int s : loop) p.steps.push_back(steps_[static_cast<std::size_t>(s)]);
  }
  return p;
}

std::optional<EdgePath> SegmentLattice::single_loop(std::span<const JunctionState> states) const {
  const std::size_t count = steps_.size();
  EdgePath p;
  p.n = spec().n();
  p.steps.reserve(count);
  std::size_t s = 0;
  do {
    p.steps.push_back(steps_[s]);
    const int arc = junction_arc_[s];
    if (arc < 0) {
      s = static_cast<std::size_t>(forced_next_[s]);
    } else {
      s = static_cast<std::size_t>(states[static_cast<std::size_t>(arc)] == JunctionState::link ? next_link_[s]
                                                                                                : next_cut_[s]);
    }
  } while (s != 0);
  if (p.steps.size() != count) return std::nullopt;
  return p;
}

EdgePath SegmentLattice::tree_to_path(const SpanningTree& tree) const {
  const std::vector<JunctionState> states = states_of(tree);
  std::optional<EdgePath> p = single_loop(states);
  if (!p) throw MultiLoopError(loop_count(states));
  return std::move(*p);
}

EdgePath SegmentLattice::arcs_to_threading(const SpanningTree& arcs) const {
  return from_squares(thread_loops(states_of(arcs)));
}

SpanningTree SegmentLattice::path_to_tree(const EdgePath& path) const {
  if (path.n != spec().n()) throw MalformedPathError("path board size does not match");
  const ValidationReport report = path_validate(path, spec());
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw MalformedPathError(std::string(to_string(v.kind)) + " at step " + std::to_string(v.step) + ": " +
                             v.detail);
  }
  std::vector<int> state(static_cast<std::size_t>(graph_.arc_count()), -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Step& a = path.steps[i];
    const Step& b = path.at_cyclic(static_cast<std::ptrdiff_t>(i) + 1);
    const LatticePoint j = step_end(a);
    const auto arc = graph_.arc_at_junction(j);
    if (!arc) continue;
    const bool vertical_pairing = b.dir == Direction{-a.dir.dx, a.dir.dy};
    const bool link = vertical_pairing == graph_.is_vertical(*arc);
    int& slot = state[static_cast<std::size_t>(*arc)];
    if (slot >= 0 && slot != static_cast<int>(link)) {
      throw MalformedPathError("inconsistent threading at junction (" + std::to_string(j.x) + "," +
                               std::to_string(j.y) + ")");
    }
    slot = static_cast<int>(link);
  }
  SpanningTree tree;
  for (int k = 0; k < graph_.arc_count(); ++k) {
    if (state[static_cast<std::size_t>(k)] == 1) tree.arcs.push_back(k);
  }
  return tree;
}

EdgePath tree_to_path(const SpanningTree& tree, const BoardSpec& spec) {
  return SegmentLattice(spec).tree_to_path(tree);
}

SpanningTree path_to_tree(const EdgePath& path, const BoardSpec& spec) {
  return SegmentLattice(spec).path_to_tree(path);
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::wrong_size:
      return "wrong_size";
    case ViolationKind::not_closed:
      return "not_closed";
    case ViolationKind::coverage:
      return "coverage";
    case ViolationKind::foreign_segment:
      return "foreign_segment";
    case ViolationKind::multiple_loops:
      return "multiple_loops";
    case ViolationKind::crossing:
      return "crossing";
    case ViolationKind::aligned_steps:
      return "aligned_steps";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

ValidationReport path_validate(const EdgePath& path, const BoardSpec& spec) {
  ValidationReport r;
  const int n = spec.n();
  const std::size_t len = path.size();
  auto add = [&r](ViolationKind kind, std::size_t step, std::string detail) {
    r.violations.push_back({kind, step, std::move(detail)});
  };

  if (path.n != n || static_cast<int>(len) != spec.square_count()) {
    add(ViolationKind::wrong_size, 0,
        "expected " + std::to_string(spec.square_count()) + " steps, got " + std::to_string(len));
  }
  if (len == 0) {
    r.closed = false;
    r.covers_all_squares = false;
    r.loop_count = 0;
    add(ViolationKind::not_closed, 0, "empty path");
    return r;
  }

  std::vector<int> visits(static_cast<std::size_t>(n * n), 0);
  for (std::size_t i = 0; i < len; ++i) {
    const Step& s = path.steps[i];
    if (s.square.i < 0 || s.square.j < 0 || s.square.i >= n || s.square.j >= n ||
        std::abs(s.dir.dx) != 1 || std::abs(s.dir.dy) != 1) {
      r.covers_all_squares = false;
      add(ViolationKind::coverage, i, "step outside the board");
      continue;
    }
    ++visits[static_cast<std::size_t>(square_index(s.square, n))];
    if (classify_point(step_start(s), spec) != Parity::mixed) {
      r.fixed_segments = false;
      add(ViolationKind::foreign_segment, i, "diagonal does not join mixed-parity corners");
    }
  }
  if (!r.covers_all_squares) return r;
  for (int s = 0; s < n * n; ++s) {
    if (visits[static_cast<std::size_t>(s)] != 1) {
      r.covers_all_squares = false;
      add(ViolationKind::coverage, 0,
          "square " + std::to_string(s) + " visited " + std::to_string(visits[static_cast<std::size_t>(s)]) +
              " times");
    }
  }

  // Split into maximal connected runs (cyclically).
  std::vector<std::size_t> breaks;
  for (std::size_t i = 0; i < len; ++i) {
    if (step_end(path.steps[i]) != step_start(path.steps[(i + 1) % len])) breaks.push_back(i);
  }
  struct Run {
    std::size_t first, last;
  };
  std::vector<Run> runs;
  if (breaks.empty()) {
    runs.push_back({0, len - 1});
  } else {
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      const std::size_t first = (breaks[k] + 1) % len;
      const std::size_t last = breaks[(k + 1) % breaks.size()];
      runs.push_back({first, last});
    }
  }
  r.loop_count = static_cast<int>(runs.size());

  // Predecessor of each step within its run; -1 for an open run start.
  std::vector<std::ptrdiff_t> pred(len, -1);
  for (const Run& run : runs) {
    const bool closed = step_end(path.steps[run.last]) == step_start(path.steps[run.first]);
    if (!closed) {
      r.closed = false;
      add(ViolationKind::not_closed, run.last, "run does not return to its start");
    }
    std::size_t i = run.first;
    while (true) {
      if (i == run.first) {
        pred[i] = closed ? static_cast<std::ptrdiff_t>(run.last) : -1;
      } else {
        pred[i] = static_cast<std::ptrdiff_t>((i + len - 1) % len);
      }
      if (i == run.last) break;
      i = (i + 1) % len;
    }
  }
  if (r.closed && runs.size() > 1) {
    add(ViolationKind::multiple_loops, 0, std::to_string(runs.size()) + " loops");
  }

  std::map<LatticePoint, std::vector<std::size_t>> passages;
  for (std::size_t i = 0; i < len; ++i) {
    if (pred[i] < 0) continue;
    const Direction in = path.steps[static_cast<std::size_t>(pred[i])].dir;
    const Direction out = path.steps[i].dir;
    if (dot(in, out) != 0) {
      ++r.aligned_pairs;
      add(ViolationKind::aligned_steps, i, "consecutive steps are not perpendicular");
    }
    passages[step_start(path.steps[i])].push_back(i);
  }
  for (const auto& [point, list] : passages) {
    if (list.size() < 2) continue;
    // Two passages through a degree-4 point cross exactly when each goes straight.
    for (std::size_t i : list) {
      const Direction in = path.steps[static_cast<std::size_t>(pred[i])].dir;
      if (in == path.steps[i].dir) {
        ++r.crossings;
        add(ViolationKind::crossing, i,
            "passages cross at (" + std::to_string(point.x) + "," + std::to_string(point.y) + ")");
        break;
      }
    }
  }
  return r;
}

int orientation(const EdgePath& path) {
  long long twice_area = 0;
  for (const Step& s : path.steps) {
    const LatticePoint a = step_start(s);
    const LatticePoint b = step_end(s);
    twice_area += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
  }
  return twice_area > 0 ? 1 : (twice_area < 0 ? -1 : 0);
}

EdgePath reversed(const EdgePath& path) {
  EdgePath r;
  r.n = path.n;
  r.steps.reserve(path.size());
  for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) r.steps.push_back({it->square, -it->dir});
  return r;
}

EdgePath transformed(const EdgePath& path, Symmetry s) {
  EdgePath r;
  r.n = path.n;
  r.steps.reserve(path.size());
  for (const Step& st : path.steps) {
    r.steps.push_back({apply_symmetry(s, st.square, path.n), apply_symmetry(s, st.dir)});
  }
  return r;
}

EdgePath normalized(const EdgePath& path) {
  EdgePath r = orientation(path) < 0 ? reversed(path) : path;
  if (r.steps.empty()) return r;
  const auto first = std::min_element(r.steps.begin(), r.steps.end(), [n = r.n](const Step& a, const Step& b) {
    return square_index(a.square, n) < square_index(b.square, n);
  });
  std::rotate(r.steps.begin(), first, r.steps.end());
  return r;
}

std::vector<std::uint8_t> encode_steps(const EdgePath& path) {
  std::vector<std::uint8_t> out;
  out.reserve(2 * path.size());
  for (const Step& s : path.steps) {
    const std::uint16_t c = step_code(s, path.n);
    out.push_back(static_cast<std::uint8_t>(c >> 8));
    out.push_back(static_cast<std::uint8_t>(c & 0xff));
  }
  return out;
}

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("canonical key is not lowercase hex");
  };
  if (hex.size() % 2 != 0) throw std::invalid_argument("canonical key has odd length");
  CanonicalKey k;
  k.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    k.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return k;
}

CanonicalKey canonical_key(const EdgePath& path) {
  const BestVariant best = best_variant(path);
  CanonicalKey k;
  k.bytes.reserve(2 * best.codes.size());
  for (std::uint16_t c : best.codes) {
    k.bytes.push_back(static_cast<std::uint8_t>(c >> 8));
    k.bytes.push_back(static_cast<std::uint8_t>(c & 0xff));
  }
  return k;
}

EdgePath canonical_representative(const EdgePath& path) {
  const BestVariant best = best_variant(path);
  return normalized(transformed(path, best.symmetry));
}

int stabilizer(const EdgePath& path) {
  const EdgePath base = normalized(path);
  int mask = 0;
  for (Symmetry g : all_symmetries) {
    if (normalized(transformed(path, g)) == base) mask |= symmetry_bit(g);
  }
  return mask;
}

std::string turn_word(const EdgePath& path) {
  std::string w;
  w.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int c = cross(path.steps[i].dir, path.at_cyclic(static_cast<std::ptrdiff_t>(i) + 1).dir);
    w.push_back(c > 0 ? 'L' : (c < 0 ? 'R' : 'S'));
  }
  return w;
}

}  // namespace edgepat
