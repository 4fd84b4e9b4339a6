#include "bpd/svg.hpp"

#include <array>
#include <cstdio>
#include <optional>

#include "bpd/trace.hpp"

namespace bpd {

namespace {

const std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                             "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Pt {
  double x, y;
};

Pt edge_mid(double x0, double y0, int cell, unsigned edge) {
  const double h = cell / 2.0;
  switch (edge) {
    case kNorth: return {x0 + h, y0};
    case kSouth: return {x0 + h, y0 + cell};
    case kWest: return {x0, y0 + h};
    default: return {x0 + cell, y0 + h};
  }
}

std::string seg(const Pt& a, const Pt& b, const Pt& mid, const std::string& color) {
  // Quarter turns render as quadratic arcs through the cell center.
  char buf[256];
  snprintf(buf, sizeof buf,
           "<path d=\"M %.1f %.1f Q %.1f %.1f %.1f %.1f\" fill=\"none\" stroke=\"%s\" "
           "stroke-width=\"2.4\"/>\n",
           a.x, a.y, mid.x, mid.y, b.x, b.y, color.c_str());
  return buf;
}

}  // namespace

std::string to_svg(const Diagram& d, const SvgOptions& opts) {
  const int n = d.size();
  const int cell = opts.cell;
  const int wpx = n * cell + 2 * cell, hpx = n * cell + 2 * cell;

  std::optional<TraceResult> tr;
  std::optional<PipePaths> paths;
  if (d.is_valid()) {
    tr = trace(d);
    paths = follow_pipes(d);
  }
  const bool traced = tr.has_value();

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(wpx) +
                    "\" height=\"" + std::to_string(hpx) + "\">\n";
  out += "<rect x=\"" + std::to_string(cell) + "\" y=\"" + std::to_string(cell) + "\" width=\"" +
         std::to_string(n * cell) + "\" height=\"" + std::to_string(n * cell) +
         "\" fill=\"white\" stroke=\"black\"/>\n";

  if (traced && opts.highlight_bumps) {
    for (const auto& [r, c] : tr->bumps) {
      const int x = cell + (c - 1) * cell, y = cell + (r - 1) * cell;
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
             std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
             "\" fill=\"#ffe08a\"/>\n";
    }
  }
  for (int k = 1; k < n; ++k) {
    const int p = cell + k * cell;
    out += "<line x1=\"" + std::to_string(p) + "\" y1=\"" + std::to_string(cell) + "\" x2=\"" +
           std::to_string(p) + "\" y2=\"" + std::to_string(cell + n * cell) +
           "\" stroke=\"#dddddd\"/>\n";
    out += "<line x1=\"" + std::to_string(cell) + "\" y1=\"" + std::to_string(p) + "\" x2=\"" +
           std::to_string(cell + n * cell) + "\" y2=\"" + std::to_string(p) +
           "\" stroke=\"#dddddd\"/>\n";
  }

  if (traced) {
    for (int lab = 1; lab <= n; ++lab) {
      const std::string color = opts.color_pipes ? kPalette[(lab - 1) % kPalette.size()] : "black";
      for (const auto& s : paths->paths[lab - 1]) {
        const double x0 = cell + (s.col - 1) * cell, y0 = cell + (s.row - 1) * cell;
        const bool bump = tr->bumps.count({s.row, s.col}) > 0;
        unsigned in = s.in_edge, outE = s.out_edge;
        if (d.at(s.row, s.col) == Tile::X && bump && !opts.bumps_as_turns) {
          // Draw the stored X geometry; the label routing still turned.
          outE = (in == kWest) ? kEast : (d.mode() == Mode::Bpd ? kNorth : kSouth);
        }
        const Pt a = edge_mid(x0, y0, cell, in), b = edge_mid(x0, y0, cell, outE);
        const Pt mid{x0 + cell / 2.0, y0 + cell / 2.0};
        out += seg(a, b, mid, color);
      }
    }
    for (int r = 1; r <= n; ++r) {
      const int x = cell + n * cell + 6, y = cell + (r - 1) * cell + cell / 2 + 4;
      out += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" font-size=\"12\">" + std::to_string(tr->perm(r)) + "</text>\n";
    }
  } else {
    // Invalid diagrams still render their raw tile strands in black.
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        const double x0 = cell + (c - 1) * cell, y0 = cell + (r - 1) * cell;
        const unsigned e = tile_edges(d.at(r, c));
        const Pt mid{x0 + cell / 2.0, y0 + cell / 2.0};
        if ((e & kNorth) && (e & kSouth))
          out += seg(edge_mid(x0, y0, cell, kNorth), edge_mid(x0, y0, cell, kSouth), mid, "black");
        if ((e & kEast) && (e & kWest))
          out += seg(edge_mid(x0, y0, cell, kWest), edge_mid(x0, y0, cell, kEast), mid, "black");
        if (d.at(r, c) == Tile::SE || d.at(r, c) == Tile::NE || d.at(r, c) == Tile::SW ||
            d.at(r, c) == Tile::NW) {
          unsigned e1 = 0, e2 = 0, bits = e;
          for (unsigned b : {kNorth, kEast, kSouth, kWest})
            if (bits & b) (e1 ? e2 : e1) = b;
          out += seg(edge_mid(x0, y0, cell, e1), edge_mid(x0, y0, cell, e2), mid, "black");
        }
      }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bpd
