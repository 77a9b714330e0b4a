#include "edgepat/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edgepat {

namespace {

struct Matrix {
  int a, b, c, d;
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

constexpr std::array<Matrix, 8> kMatrices = {{
    {1, 0, 0, 1},    // identity
    {0, -1, 1, 0},   // rot90 (counterclockwise)
    {-1, 0, 0, -1},  // rot180
    {0, 1, -1, 0},   // rot270
    {1, 0, 0, -1},   // mirror_horizontal
    {-1, 0, 0, 1},   // mirror_vertical
    {0, 1, 1, 0},    // mirror_diagonal
    {0, -1, -1, 0},  // mirror_antidiagonal
}};

const Matrix& matrix_of(Symmetry s) { return kMatrices[static_cast<std::size_t>(s)]; }

Symmetry from_matrix(const Matrix& m) {
  for (std::size_t k = 0; k < kMatrices.size(); ++k) {
    if (kMatrices[k] == m) return static_cast<Symmetry>(k);
  }
  throw std::logic_error("matrix is not in the dihedral group");
}

}  // namespace

BoardSpec BoardSpec::make(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("board size must be even and >= 2, got " + std::to_string(n));
  }
  return BoardSpec(n);
}

int direction_code(Direction d) {
  return (d.dx > 0 ? 0 : 2) + (d.dy > 0 ? 0 : 1);
}

Direction direction_from_code(int code) {
  return {(code & 2) ? -1 : 1, (code & 1) ? -1 : 1};
}

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::odd_odd:
      return "odd-odd";
    case Parity::even_even:
      return "even-even";
    case Parity::mixed:
      return "mixed";
  }
  return "?";
}

Parity classify_point(LatticePoint p, const BoardSpec& spec) {
  const int n = spec.n();
  if (p.x < 0 || p.y < 0 || p.x > n || p.y > n) {
    throw std::out_of_range("lattice point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                            ") outside [0," + std::to_string(n) + "]^2");
  }
  const bool xo = p.x % 2 != 0;
  const bool yo = p.y % 2 != 0;
  if (xo && yo) return Parity::odd_odd;
  if (!xo && !yo) return Parity::even_even;
  return Parity::mixed;
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::identity:
      return "identity";
    case Symmetry::rot90:
      return "rot90";
    case Symmetry::rot180:
      return "rot180";
    case Symmetry::rot270:
      return "rot270";
    case Symmetry::mirror_horizontal:
      return "horizontal";
    case Symmetry::mirror_vertical:
      return "vertical";
    case Symmetry::mirror_diagonal:
      return "diagonal";
    case Symmetry::mirror_antidiagonal:
      return "antidiagonal";
  }
  return "?";
}

bool is_reflection(Symmetry s) {
  const Matrix& m = matrix_of(s);
  return m.a * m.d - m.b * m.c < 0;
}

Symmetry compose(Symmetry outer, Symmetry inner) {
  const Matrix& p = matrix_of(outer);
  const Matrix& q = matrix_of(inner);
  return from_matrix({p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
                      p.c * q.b + p.d * q.d});
}

Symmetry inverse(Symmetry s) {
  // Orthogonal matrices: the inverse is the transpose.
  const Matrix& m = matrix_of(s);
  return from_matrix({m.a, m.c, m.b, m.d});
}

LatticePoint apply_symmetry(Symmetry s, LatticePoint p, int n) {
  const Matrix& m = matrix_of(s);
  // Work in doubled coordinates about the center so odd n would also be exact.
  const int x = 2 * p.x - n;
  const int y = 2 * p.y - n;
  return {(m.a * x + m.b * y + n) / 2, (m.c * x + m.d * y + n) / 2};
}

Direction apply_symmetry(Symmetry s, Direction d) {
  const Matrix& m = matrix_of(s);
  return {m.a * d.dx + m.b * d.dy, m.c * d.dx + m.d * d.dy};
}

SquareId apply_symmetry(Symmetry s, SquareId sq, int n) {
  const LatticePoint a = apply_symmetry(s, LatticePoint{sq.i, sq.j}, n);
  const LatticePoint b = apply_symmetry(s, LatticePoint{sq.i + 1, sq.j + 1}, n);
  return {std::min(a.x, b.x), std::min(a.y, b.y)};
}

}  // namespace edgepat
