#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "edgepat/bounds.hpp"
#include "edgepat/corners.hpp"
#include "edgepat/enumeration.hpp"
#include "edgepat/record.hpp"
#include "edgepat/svg.hpp"

namespace fs = std::filesystem;
using namespace edgepat;

namespace {

enum ExitCode : int { kOk = 0, kInvalid = 2, kBudgetAbort = 3, kCrossCheckFailed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BoardSpec board(int n) {
  try {
    return BoardSpec::make(n);
  } catch (const std::invalid_argument&) {
    throw UsageError("n must be even and >= 2, got " + std::to_string(n));
  }
}

// Accepts "2,4,6", "2..40" (even values only) or a mix such as "2..8,12".
std::vector<int> parse_int_list(const std::string& text, bool even_ranges) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
        continue;
      }
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) {
        if (!even_ranges || v % 2 == 0) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw UsageError("cannot parse list item '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

// Writes to a temporary file and moves it into place only on commit, so an
// aborted run leaves no partial output behind.
class OutputSink {
 public:
  explicit OutputSink(std::optional<fs::path> target) : target_(std::move(target)) {
    if (target_) {
      temp_ = *target_;
      temp_ += ".partial";
    } else {
      temp_ = fs::temp_directory_path() / ("edgepat-" + std::to_string(::getpid()) + ".jsonl");
    }
    out_.open(temp_, std::ios::binary | std::ios::trunc);
    if (!out_) throw UsageError("cannot write " + temp_.string());
  }
  ~OutputSink() {
    if (!committed_) discard();
  }

  std::ostream& stream() { return out_; }

  void commit() {
    out_.close();
    if (target_) {
      fs::rename(temp_, *target_);
    } else {
      std::ifstream in(temp_, std::ios::binary);
      std::cout << in.rdbuf();
      std::cout.flush();
      fs::remove(temp_);
    }
    committed_ = true;
  }

  void discard() {
    out_.close();
    std::error_code ec;
    fs::remove(temp_, ec);
    committed_ = true;
  }

 private:
  std::optional<fs::path> target_;
  fs::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

void write_manifest(const RunManifest& m, const fs::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + file.string());
  out << m.to_json() << '\n';
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  int tier = 3;
  bool dedup = false;
  std::string out;
  std::string manifest;
  std::uint64_t max_candidates = EnumerationBudget{}.max_candidates;
  double max_seconds = EnumerationBudget{}.max_seconds;
};

// Corpus statistics over orbit representatives.
struct OrbitStats {
  std::uint64_t corner_feasible = 0;
  std::uint64_t self_symmetric = 0;
  std::uint64_t line_trees = 0;

  void add(const PathRecord& r) {
    if (r.n == 2 || r.corner_offsets.empty()) return;
    ++corner_feasible;
    if (r.self_symmetry == SelfSymmetry::horizontal || r.self_symmetry == SelfSymmetry::vertical) ++self_symmetric;
    if (r.is_line_tree) ++line_trees;
  }
};

int run_enumerate(const EnumerateArgs& a, const std::string& command) {
  const BoardSpec spec = board(a.n);
  if (a.tier < 1 || a.tier > 3) throw UsageError("--tier must be 1, 2 or 3");
  const EnumerationBudget budget{a.max_candidates, a.max_seconds};
  const SegmentLattice lattice(spec);
  detail::Stopwatch clock;

  std::optional<fs::path> target;
  if (!a.out.empty()) target = a.out;
  OutputSink sink(target);

  std::map<std::string, PathRecord> orbits;
  std::uint64_t emitted = 0;
  auto accept = [&](const SpanningTree* tree, const EdgePath& path) {
    ++emitted;
    if (a.dedup) {
      const std::string key = canonical_key(path).hex();
      if (orbits.find(key) == orbits.end()) orbits.emplace(key, make_record(lattice, canonical_representative(path)));
    } else {
      PathRecord r = tree ? make_record(lattice, *tree, path) : make_record(lattice, path);
      sink.stream() << to_json_line(r) << '\n';
      orbits.try_emplace(r.canonical_key, std::move(r));
    }
  };

  TierResult result;
  if (a.tier == 1) {
    BruteForceEnumerator e(spec, budget);
    while (auto p = e.next()) accept(nullptr, *p);
    result = e.result();
  } else if (a.tier == 2) {
    PathGrowingEnumerator e(spec, budget);
    while (auto p = e.next()) accept(nullptr, *p);
    result = e.result();
  } else {
    SpanningTreeEnumerator e(lattice.graph(), budget);
    while (const SpanningTree* t = e.next()) accept(t, lattice.tree_to_path(*t));
    result = e.result();
  }

  RunManifest m;
  m.command = command;
  m.n = a.n;
  m.tiers = {a.tier};
  m.timings["enumerate"] = result.seconds;
  const fs::path manifest_path =
      !a.manifest.empty() ? fs::path(a.manifest) : (target ? fs::path(a.out + ".manifest.json") : fs::path());

  if (result.aborted) {
    sink.discard();
    m.aborted = true;
    m.abort_reason = result.abort_reason;
    m.timings["total"] = clock.seconds();
    if (!manifest_path.empty()) write_manifest(m, manifest_path);
    std::cerr << "enumerate: aborted: " << result.abort_reason << "; partial output removed\n";
    return kBudgetAbort;
  }

  OrbitStats stats;
  for (const auto& [key, r] : orbits) stats.add(r);
  if (a.dedup) {
    for (const auto& [key, r] : orbits) sink.stream() << to_json_line(r) << '\n';
  }
  sink.commit();

  m.counts.paths = emitted;
  m.counts.orbits = orbits.size();
  m.counts.corner_feasible = stats.corner_feasible;
  m.counts.self_symmetric = stats.self_symmetric;
  m.counts.line_trees = stats.line_trees;
  m.timings["total"] = clock.seconds();
  if (target) m.digests[target->filename().string()] = sha256_file(*target);
  if (!manifest_path.empty()) write_manifest(m, manifest_path);
  std::cerr << "enumerate: n=" << a.n << " tier=" << a.tier << " paths=" << emitted << " orbits=" << orbits.size()
            << " corner_feasible=" << stats.corner_feasible << " seconds=" << m.timings["total"] << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_record(const std::string& file, Fn&& fn) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + file);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    PathRecord r;
    try {
      r = parse_json_line(line);
    } catch (const RecordParseError& e) {
      throw UsageError(file + ":" + std::to_string(number) + ": " + e.what());
    }
    fn(std::move(r), number);
  }
}

struct FilterArgs {
  std::string in;
  std::string out;
  bool corners = false;
  bool self_symmetric = false;
  bool line_trees = false;
  bool contraction = false;
};

int run_filter(const FilterArgs& a) {
  std::optional<fs::path> target;
  if (!a.out.empty()) target = a.out;
  OutputSink sink(target);
  std::uint64_t read = 0, corners = 0, symmetric = 0, other_symmetry = 0, lines = 0, contractive = 0, kept = 0;
  std::map<int, std::optional<SegmentLattice>> lattices;

  for_each_record(a.in, [&](PathRecord r, std::size_t number) {
    ++read;
    const BoardSpec spec = BoardSpec::make(r.n);
    auto& lattice = lattices[r.n];
    if (!lattice) lattice.emplace(spec);
    const EdgePath p = r.path();
    if (!path_validate(p, spec).ok()) {
      throw UsageError(a.in + ":" + std::to_string(number) + ": steps do not form a valid edge path");
    }
    r.corner_offsets.clear();
    for (const CornerPlacement& c : enumerate_corner_placements(p)) r.corner_offsets.push_back(c.offset);
    const SpanningTree tree = record_tree(r, lattice->graph());

    if (a.corners) {
      if (r.n == 2 || r.corner_offsets.empty()) return;
      ++corners;
    }
    if (a.self_symmetric) {
      const EdgePath one[] = {p};
      const SelfSymmetricFilterResult s = filter_self_symmetric(one);
      if (s.survivors.empty()) return;
      ++symmetric;
      other_symmetry += s.with_other_symmetry.size();
    }
    if (a.line_trees) {
      if (!is_line_tree(lattice->graph(), tree) || r.corner_offsets.empty()) return;
      ++lines;
    }
    if (a.contraction) {
      evaluate_contraction(r);
      if (std::find(r.contraction_pass.begin(), r.contraction_pass.end(), true) == r.contraction_pass.end()) return;
      ++contractive;
    }
    ++kept;
    sink.stream() << to_json_line(r) << '\n';
  });
  sink.commit();

  std::cerr << "filter: read " << read;
  if (a.corners) std::cerr << " corners " << corners;
  if (a.self_symmetric) std::cerr << " self_symmetric " << symmetric << " (with other symmetry " << other_symmetry << ")";
  if (a.line_trees) std::cerr << " line_trees " << lines;
  if (a.contraction) std::cerr << " contraction " << contractive;
  std::cerr << " kept " << kept << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct RenderArgs {
  std::string in;
  std::string svg_dir;
  std::string marks;
  bool per_placement = false;
};

int run_render(const RenderArgs& a) {
  if (!a.marks.empty() && a.marks != "corners") throw UsageError("--marks accepts only 'corners'");
  std::error_code ec;
  fs::create_directories(a.svg_dir, ec);
  if (ec || !fs::is_directory(a.svg_dir)) throw UsageError("cannot create directory " + a.svg_dir);
  std::uint64_t files = 0;
  auto write = [&](const fs::path& file, const std::string& body) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out || !(out << body)) throw UsageError("cannot write " + file.string());
    ++files;
  };
  for_each_record(a.in, [&](PathRecord r, std::size_t number) {
    char stem[64];
    std::snprintf(stem, sizeof stem, "n%d_%06zu", r.n, number);
    SvgOptions opt;
    opt.corner_marks = a.marks == "corners";
    if (opt.corner_marks && a.per_placement && !r.corner_offsets.empty()) {
      for (std::size_t k = 0; k < r.corner_offsets.size(); ++k) {
        opt.placement = k;
        write(fs::path(a.svg_dir) / (std::string(stem) + "_p" + std::to_string(k) + ".svg"), render_svg(r, opt));
      }
    } else {
      write(fs::path(a.svg_dir) / (std::string(stem) + ".svg"), render_svg(r, opt));
    }
  });
  std::cerr << "render: wrote " << files << " files to " << a.svg_dir << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string n_list = "2,4,6,8";
  std::string tiers = "1,2,3";
  std::string out;
  std::uint64_t max_candidates = EnumerationBudget{}.max_candidates;
  double max_seconds = EnumerationBudget{}.max_seconds;
};

int run_bench(const BenchArgs& a) {
  const std::vector<int> ns = parse_int_list(a.n_list, true);
  const std::vector<int> tiers = parse_int_list(a.tiers, false);
  for (int t : tiers) {
    if (t < 1 || t > 3) throw UsageError("tiers must be 1, 2 or 3");
  }
  std::ostringstream csv;
  csv << benchmark_csv_header() << '\n';
  for (int n : ns) {
    const BoardSpec spec = board(n);
    for (int t : tiers) {
      if (t == 1 && (n + 1) * (n + 1) > BruteForceEnumerator::kMaxPoints) {
        TierResult skipped;
        skipped.n = n;
        skipped.tier = 1;
        skipped.aborted = true;
        csv << benchmark_csv_row(skipped) << '\n';
        continue;
      }
      for (const TierResult& r : benchmark(spec, {t}, {a.max_candidates, a.max_seconds})) {
        csv << benchmark_csv_row(r) << '\n';
      }
    }
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
    if (!out || !(out << csv.str())) throw UsageError("cannot write " + a.out);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld/%lld (%.4f)", static_cast<long long>(r.numerator()),
                static_cast<long long>(r.denominator()), boost::rational_cast<double>(r));
  return buf;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

int run_bounds(const std::string& n_list) {
  const std::vector<int> ns = parse_int_list(n_list, true);
  std::printf("%4s %7s %8s %7s %9s %6s %4s %4s %4s %5s %5s %5s  %s\n", "n", "edge", "demaine", "best", "crossover",
              "square", "m", "a", "m1", "m2", "a1", "a2", "thickness");
  for (int n : ns) {
    board(n);
    const BoundReport b = bound_report(n);
    const ScaleSeparation s = scale_separation(n);
    std::printf("%4d %7lld %8lld %7lld %9s %6s %4s %4s %4s %5s %5s %5s  %s%s\n", n,
                static_cast<long long>(b.edge_bound), static_cast<long long>(b.demaine_bound),
                static_cast<long long>(b.best_known), b.crossover ? "yes" : "no", s.feasible_square ? "yes" : "no",
                opt_text(s.m).c_str(), opt_text(s.a).c_str(), opt_text(s.m1).c_str(), opt_text(s.m2).c_str(),
                opt_text(s.a1).c_str(), opt_text(s.a2).c_str(), rational_text(s.mean_thickness).c_str(),
                s.degenerate ? " degenerate" : "");
  }
  return kOk;
}

int run_crosscheck(int n, const EnumerationBudget& budget) {
  const CrossCheckReport r = cross_check(board(n), budget);
  for (const TierResult& t : r.tiers) std::cout << benchmark_csv_row(t) << '\n';
  std::cout << "matrix-tree " << r.kirchhoff << " orbits " << r.orbits << " -> " << (r.ok() ? "agree" : "DISAGREE")
            << '\n';
  if (!r.ok()) {
    std::cerr << r.diagnostic;
    return kCrossCheckFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and filter generalized edge patterns for pixel-pattern folding"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  int count_n = 0;
  auto* count = app.add_subcommand("count", "Number of edge paths via the matrix-tree theorem");
  count->add_option("--n", count_n, "Board size (even)")->required();

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Stream edge paths as JSON Lines");
  enumerate->add_option("--n", en.n, "Board size (even)")->required();
  enumerate->add_option("--tier", en.tier, "1 brute force, 2 path growing, 3 spanning trees")->capture_default_str();
  enumerate->add_flag("--dedup", en.dedup, "One record per symmetry orbit");
  enumerate->add_option("--out", en.out, "Output file (default stdout)");
  enumerate->add_option("--manifest", en.manifest, "Manifest file (default <out>.manifest.json)");
  enumerate->add_option("--max-candidates", en.max_candidates)->capture_default_str();
  enumerate->add_option("--max-seconds", en.max_seconds)->capture_default_str();

  FilterArgs fa;
  auto* filter = app.add_subcommand("filter", "Apply corner, symmetry, line-tree and contraction filters");
  filter->add_option("--in", fa.in, "Input JSON Lines")->required();
  filter->add_option("--out", fa.out, "Output file (default stdout)");
  filter->add_flag("--corners", fa.corners, "Keep paths with a feasible corner placement");
  filter->add_flag("--self-symmetric", fa.self_symmetric, "Keep paths with a horizontal or vertical self-symmetry");
  filter->add_flag("--line-trees", fa.line_trees, "Keep paths whose spanning tree has two leaves");
  filter->add_flag("--contraction", fa.contraction, "Evaluate contraction and keep paths with a passing placement");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Write one SVG per record");
  render->add_option("--in", ra.in, "Input JSON Lines")->required();
  render->add_option("--svg-dir", ra.svg_dir, "Output directory")->required();
  render->add_option("--marks", ra.marks, "Mark corner placements ('corners')");
  render->add_flag("--per-placement", ra.per_placement, "One file per corner placement");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Benchmark enumeration tiers as CSV");
  bench->add_option("--n-list", ba.n_list)->capture_default_str();
  bench->add_option("--tiers", ba.tiers)->capture_default_str();
  bench->add_option("--out", ba.out, "CSV file (default stdout)");
  bench->add_option("--max-candidates", ba.max_candidates)->capture_default_str();
  bench->add_option("--max-seconds", ba.max_seconds)->capture_default_str();

  std::string bounds_list = "2..40";
  auto* bounds = app.add_subcommand("bounds", "Bound and scale-separation table");
  bounds->add_option("--n-list", bounds_list, "Even sizes, e.g. 2..40 or 6,8")->capture_default_str();

  int cc_n = 0;
  EnumerationBudget cc_budget;
  auto* crosscheck = app.add_subcommand("crosscheck", "Compare all feasible tiers against each other");
  crosscheck->add_option("--n", cc_n, "Board size (even)")->required();
  crosscheck->add_option("--max-candidates", cc_budget.max_candidates)->capture_default_str();
  crosscheck->add_option("--max-seconds", cc_budget.max_seconds)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*count) {
      std::cout << kirchhoff_count(GridGraph::build(board(count_n))) << '\n';
      return kOk;
    }
    if (*enumerate) return run_enumerate(en, join_args(argc, argv));
    if (*filter) return run_filter(fa);
    if (*render) return run_render(ra);
    if (*bench) return run_bench(ba);
    if (*bounds) return run_bounds(bounds_list);
    if (*crosscheck) return run_crosscheck(cc_n, cc_budget);
  } catch (const UsageError& e) {
    std::cerr << "edgepat: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "edgepat: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "edgepat: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}
