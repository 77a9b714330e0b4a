#include "edgepat/svg.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace edgepat {

namespace {

constexpr int kUnit = 32;
constexpr int kMargin = 16;
constexpr int kInset = 4;
constexpr std::array<const char*, 4> kMarkColors = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

struct Canvas {
  int n;
  int x(int bx) const { return kMargin + bx * kUnit; }
  int y(int by) const { return kMargin + (n - by) * kUnit; }
  // Half-unit coordinates for step midpoints.
  int x2(int bx2) const { return kMargin + bx2 * kUnit / 2; }
  int y2(int by2) const { return kMargin + (2 * n - by2) * kUnit / 2; }
};

}  // namespace

std::string render_svg(const PathRecord& r, const SvgOptions& options) {
  const int n = r.n;
  const Canvas c{n};
  const int size = 2 * kMargin + n * kUnit;
  const BoardSpec spec = BoardSpec::make(n);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"#ffffff\"/>\n";

  out << "<g stroke=\"#dddddd\" stroke-width=\"1\" fill=\"none\">\n";
  for (int k = 0; k <= n; ++k) {
    out << "<line x1=\"" << c.x(k) << "\" y1=\"" << c.y(0) << "\" x2=\"" << c.x(k) << "\" y2=\"" << c.y(n) << "\"/>\n";
    out << "<line x1=\"" << c.x(0) << "\" y1=\"" << c.y(k) << "\" x2=\"" << c.x(n) << "\" y2=\"" << c.y(k) << "\"/>\n";
  }
  out << "</g>\n<g stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"3,3\" fill=\"none\">\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [a, b] = square_segment(SquareId{i, j}, spec);
      out << "<line x1=\"" << c.x(a.x) << "\" y1=\"" << c.y(a.y) << "\" x2=\"" << c.x(b.x) << "\" y2=\"" << c.y(b.y)
          << "\"/>\n";
    }
  }
  out << "</g>\n";

  const EdgePath path = r.path();
  out << "<path fill=\"#f3d9a4\" fill-rule=\"evenodd\" stroke=\"#222222\" stroke-width=\"2\" "
         "stroke-linejoin=\"round\" d=\"";
  // Each step is drawn slightly inset from its endpoints so that the loop's
  // touching points stay visibly open or closed.
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Step& s = path[k];
    const LatticePoint a = step_start(s);
    const LatticePoint b = step_end(s);
    out << (k == 0 ? "M" : " L") << c.x(a.x) + kInset * s.dir.dx << ',' << c.y(a.y) - kInset * s.dir.dy;
    out << " L" << c.x(b.x) - kInset * s.dir.dx << ',' << c.y(b.y) + kInset * s.dir.dy;
  }
  out << " Z\"/>\n";

  if (options.corner_marks) {
    if (options.placement && *options.placement >= r.corner_offsets.size()) {
      throw std::out_of_range("placement index outside corner_offsets");
    }
    for (std::size_t k = 0; k < r.corner_offsets.size(); ++k) {
      if (options.placement && *options.placement != k) continue;
      const CornerPlacement cp = make_placement(n, r.corner_offsets[k]);
      out << "<g fill=\"" << kMarkColors[k % kMarkColors.size()] << "\" stroke=\"none\">\n";
      for (int s : cp.corner_steps) {
        const LatticePoint a = step_start(path[static_cast<std::size_t>(s)]);
        const LatticePoint b = step_end(path[static_cast<std::size_t>(s)]);
        out << "<circle cx=\"" << c.x2(a.x + b.x) << "\" cy=\"" << c.y2(a.y + b.y) << "\" r=\"5\"/>\n";
      }
      out << "</g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace edgepat
