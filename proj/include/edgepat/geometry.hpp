#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>

namespace edgepat {

// Board of n x n squares. Derived constants describe the coarse grid graph on
// diamond centers and the minimal semiperimeter of the paper sheet.
class BoardSpec {
 public:
  // Throws std::invalid_argument unless n is even and >= 2.
  static BoardSpec make(int n);

  int n() const { return n_; }
  int half() const { return n_ / 2; }
  int nu() const { return half() * half(); }
  int arc_count() const { return n_ * (half() - 1); }
  int semiperimeter() const { return n_ * n_; }
  int square_count() const { return n_ * n_; }
  int junction_count() const { return n_ * n_ / 2 - n_; }

  friend bool operator==(const BoardSpec&, const BoardSpec&) = default;

 private:
  explicit BoardSpec(int n) : n_(n) {}
  int n_;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Diagonal direction of a path step; both components are +-1.
struct Direction {
  int dx = 0;
  int dy = 0;
  friend auto operator<=>(const Direction&, const Direction&) = default;
  Direction operator-() const { return {-dx, -dy}; }
};

// 0:(1,1) 1:(1,-1) 2:(-1,1) 3:(-1,-1)
int direction_code(Direction d);
Direction direction_from_code(int code);

inline int dot(Direction a, Direction b) { return a.dx * b.dx + a.dy * b.dy; }
inline int cross(Direction a, Direction b) { return a.dx * b.dy - a.dy * b.dx; }

inline LatticePoint operator+(LatticePoint p, Direction d) { return {p.x + d.dx, p.y + d.dy}; }

// Board square with min corner (i, j).
struct SquareId {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const SquareId&, const SquareId&) = default;
};

inline int square_index(SquareId s, int n) { return s.i * n + s.j; }

enum class Parity : std::uint8_t { odd_odd, even_even, mixed };

std::string_view to_string(Parity p);

// Throws std::out_of_range for coordinates outside [0, n].
Parity classify_point(LatticePoint p, const BoardSpec& spec);

// Dihedral group of the square, acting about the board center (n/2, n/2).
// mirror_horizontal reflects about y = n/2, mirror_vertical about x = n/2.
enum class Symmetry : std::uint8_t {
  identity,
  rot90,
  rot180,
  rot270,
  mirror_horizontal,
  mirror_vertical,
  mirror_diagonal,
  mirror_antidiagonal,
};

inline constexpr std::array<Symmetry, 8> all_symmetries = {
    Symmetry::identity,          Symmetry::rot90,           Symmetry::rot180,
    Symmetry::rot270,            Symmetry::mirror_horizontal, Symmetry::mirror_vertical,
    Symmetry::mirror_diagonal,   Symmetry::mirror_antidiagonal,
};

inline constexpr int symmetry_bit(Symmetry s) { return 1 << static_cast<int>(s); }

std::string_view to_string(Symmetry s);
bool is_reflection(Symmetry s);

// compose(a, b) applies b first, then a.
Symmetry compose(Symmetry a, Symmetry b);
Symmetry inverse(Symmetry s);

LatticePoint apply_symmetry(Symmetry s, LatticePoint p, int n);
Direction apply_symmetry(Symmetry s, Direction d);
SquareId apply_symmetry(Symmetry s, SquareId sq, int n);

}  // namespace edgepat
