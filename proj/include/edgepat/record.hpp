#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgepat/corners.hpp"
#include "edgepat/edge_path.hpp"

namespace edgepat {

inline constexpr std::string_view kToolVersion = "1.0.0";

// One line of a JSON Lines corpus.
struct PathRecord {
  int n = 0;
  std::string canonical_key;
  std::vector<Arc> tree_arcs;
  std::vector<Step> steps;
  std::vector<int> corner_offsets;
  SelfSymmetry self_symmetry = SelfSymmetry::none;
  bool is_line_tree = false;
  // Aligned with corner_offsets once evaluated; empty before.
  std::vector<bool> contraction_pass;

  EdgePath path() const { return EdgePath{n, steps}; }
  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

class RecordParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fills every field except contraction_pass.
PathRecord make_record(const SegmentLattice& lattice, const SpanningTree& tree, const EdgePath& path);
PathRecord make_record(const SegmentLattice& lattice, const EdgePath& path);

// Runs contraction_check for each corner offset and stores the verdicts.
void evaluate_contraction(PathRecord& r);

SpanningTree record_tree(const PathRecord& r, const GridGraph& g);

std::string to_json_line(const PathRecord& r);
// Throws RecordParseError with a description of the first problem found.
PathRecord parse_json_line(std::string_view line);

struct CorpusCounts {
  std::optional<std::uint64_t> paths;  // N
  std::optional<std::uint64_t> orbits;
  std::optional<std::uint64_t> corner_feasible;  // Ntilde
  std::optional<std::uint64_t> self_symmetric;
  std::optional<std::uint64_t> line_trees;
  std::optional<std::uint64_t> contraction_pass;
  friend bool operator==(const CorpusCounts&, const CorpusCounts&) = default;
};

struct RunManifest {
  std::string tool_version{kToolVersion};
  std::string command;
  int n = 0;
  std::vector<int> tiers;
  CorpusCounts counts;
  std::map<std::string, double> timings;
  std::map<std::string, std::string> digests;  // file name -> sha256 hex
  bool aborted = false;
  std::string abort_reason;

  // corner_feasible <= orbits <= paths wherever both sides are known.
  bool consistent() const;
  std::string to_json() const;
  static RunManifest from_json(std::string_view text);
  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& file);

}  // namespace edgepat
