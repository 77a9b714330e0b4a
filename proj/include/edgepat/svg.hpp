#pragma once

#include <optional>
#include <string>

#include "edgepat/record.hpp"

namespace edgepat {

struct SvgOptions {
  bool corner_marks = false;
  // Draw only this entry of corner_offsets; all placements otherwise.
  std::optional<std::size_t> placement;
};

// SVG 1.1 drawing with the y axis up and 32 units per board unit. Output
// bytes depend only on the record and the options.
std::string render_svg(const PathRecord& r, const SvgOptions& options = {});

}  // namespace edgepat
