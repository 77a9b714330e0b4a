#include "edgepat/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgepat {

namespace {

void require_even(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 2");
}

}  // namespace

BoundReport bound_report(int n) {
  require_even(n);
  BoundReport r;
  r.n = n;
  const std::int64_t m = n;
  r.edge_bound = m * m;
  r.demaine_bound = m * m / 2 + 8 * m + 8 - 5 * (m % 4);
  r.best_known = std::min(r.edge_bound, r.demaine_bound);
  r.crossover = r.demaine_bound < r.edge_bound;
  return r;
}

Rational mean_thickness(std::int64_t paper_w, std::int64_t paper_h, std::int64_t n) {
  if (paper_w <= 0 || paper_h <= 0 || n <= 0) throw std::invalid_argument("dimensions must be positive");
  return Rational(paper_w * paper_h, n * n);
}

ScaleSeparation scale_separation(int n) {
  require_even(n);
  ScaleSeparation s;
  s.n = n;
  const int n2 = n * n;
  if (n % 4 == 2) {
    const int k = (n - 2) / 4;
    s.feasible_square = true;
    s.m = 2 * k * (k + 1) - 1;
    s.a = n2 / 2;
    s.degenerate = *s.m < 0;
    s.mean_thickness = mean_thickness(*s.a, *s.a, n);
  } else {
    const int k = n / 4;
    s.m1 = 2 * k * k - 2;
    s.m2 = 2 * k * k - 1;
    s.a1 = n2 / 2 - 2;
    s.a2 = n2 / 2 + 2;
    s.degenerate = *s.m1 < 0;
    s.mean_thickness = mean_thickness(*s.a1, *s.a2, n);
  }
  return s;
}

}  // namespace edgepat
