#pragma once

#include <string>

#include "bpd/diagram.hpp"

namespace bpd {

struct SvgOptions {
  bool color_pipes = true;      // color each pipe by its entry label
  bool highlight_bumps = true;  // shade cells where a repeat meeting turned
  bool bumps_as_turns = false;  // draw the repeat meeting as two turns, not a cross
  int cell = 28;                // pixels per cell
};

std::string to_svg(const Diagram& d, const SvgOptions& opts = {});

}  // namespace bpd
