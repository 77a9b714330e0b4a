#pragma once

#include <cstdint>
#include <optional>

#include <boost/rational.hpp>

namespace edgepat {

using Rational = boost::rational<std::int64_t>;

struct BoundReport {
  int n = 0;
  std::int64_t edge_bound = 0;     // n^2
  std::int64_t demaine_bound = 0;  // n^2/2 + 8n + 8 - 5 (n mod 4)
  std::int64_t best_known = 0;
  bool crossover = false;          // demaine < edge
};

// Throws std::invalid_argument unless n is even and >= 2.
BoundReport bound_report(int n);

// Paper area over board area. Throws std::invalid_argument for non-positive input.
Rational mean_thickness(std::int64_t paper_w, std::int64_t paper_h, std::int64_t n);

// Two-scale construction of the coarse sheet: each side holds two
// half-corner mechanisms and m pairs of edge mechanisms, a = 2*3 + 4m.
struct ScaleSeparation {
  int n = 0;
  bool feasible_square = false;
  bool degenerate = false;  // n = 2 gives m = -1
  std::optional<int> m;     // n = 4k + 2
  std::optional<int> a;
  std::optional<int> m1;    // n = 4k
  std::optional<int> m2;
  std::optional<int> a1;
  std::optional<int> a2;
  Rational mean_thickness{0};
};

inline constexpr int side_from_pairs(int m) { return 2 * 3 + 4 * m; }

ScaleSeparation scale_separation(int n);

}  // namespace edgepat
