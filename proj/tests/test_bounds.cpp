#include <doctest.h>

#include <map>

#include "edgepat/bounds.hpp"

using namespace edgepat;

TEST_SUITE("bounds") {
  TEST_CASE("bound examples") {
    const BoundReport b8 = bound_report(8);
    CHECK(b8.edge_bound == 64);
    CHECK(b8.demaine_bound == 104);
    CHECK_FALSE(b8.crossover);
    CHECK(b8.best_known == 64);
    const BoundReport b16 = bound_report(16);
    CHECK(b16.edge_bound == 256);
    CHECK(b16.demaine_bound == 264);
    CHECK_FALSE(b16.crossover);
    const BoundReport b18 = bound_report(18);
    CHECK(b18.edge_bound == 324);
    CHECK(b18.demaine_bound == 162 + 144 + 8 - 10);
    CHECK(b18.crossover);
    CHECK(b18.best_known == b18.demaine_bound);
    CHECK_THROWS_AS(bound_report(7), std::invalid_argument);
    CHECK_THROWS_AS(bound_report(0), std::invalid_argument);
  }

  TEST_CASE("first crossover is above 16") {
    int first = 0;
    for (int n = 2; n <= 200; n += 2) {
      if (bound_report(n).crossover && first == 0) first = n;
      if (first != 0) CHECK(bound_report(n).crossover);
    }
    CHECK(first == 18);
  }

  TEST_CASE("bound gap shrinks within each residue class") {
    std::map<int, std::int64_t> last;
    for (int n = 8; n <= 200; n += 2) {
      const BoundReport b = bound_report(n);
      const std::int64_t gap = b.demaine_bound - b.edge_bound;
      if (last.count(n % 4)) CHECK(gap < last[n % 4]);
      last[n % 4] = gap;
    }
  }

  TEST_CASE("mean thickness") {
    CHECK(mean_thickness(8, 66, 8) == Rational(33, 4));
    CHECK(mean_thickness(32, 32, 8) == Rational(16));
    for (int n = 1; n <= 20; ++n) CHECK(mean_thickness(n * n, n * n, n) == Rational(n * n));
    CHECK_THROWS_AS(mean_thickness(0, 4, 2), std::invalid_argument);
  }

  TEST_CASE("scale separation examples") {
    const ScaleSeparation s6 = scale_separation(6);
    CHECK(s6.feasible_square);
    CHECK(s6.m == 3);
    CHECK(s6.a == 18);
    CHECK_FALSE(s6.degenerate);
    const ScaleSeparation s8 = scale_separation(8);
    CHECK_FALSE(s8.feasible_square);
    CHECK(s8.m1 == 6);
    CHECK(s8.m2 == 7);
    CHECK(s8.a1 == 30);
    CHECK(s8.a2 == 34);
    CHECK(s8.mean_thickness == Rational(255, 16));
    const ScaleSeparation s2 = scale_separation(2);
    CHECK(s2.m == -1);
    CHECK(s2.degenerate);
  }

  TEST_CASE("scale separation invariants") {
    for (int n = 2; n <= 60; n += 2) {
      const ScaleSeparation s = scale_separation(n);
      const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
      if (s.feasible_square) {
        CHECK(side_from_pairs(*s.m) == *s.a);
        CHECK(2 * *s.a == n2);
      } else {
        CHECK(side_from_pairs(*s.m1) == *s.a1);
        CHECK(side_from_pairs(*s.m2) == *s.a2);
        CHECK(*s.a1 + *s.a2 == n2);
        CHECK(s.mean_thickness == Rational(n2, 4) - Rational(4, n2));
        // Slightly below the thickness a square sheet of the same semiperimeter would give.
        CHECK(s.mean_thickness < mean_thickness(n2 / 2, n2 / 2, n));
      }
    }
  }
}
