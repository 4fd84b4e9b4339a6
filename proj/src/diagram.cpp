#include "bpd/diagram.hpp"

#include <array>

#include "bpd/errors.hpp"

namespace bpd {

unsigned tile_edges(Tile t) {
  switch (t) {
    case Tile::Blank: return 0;
    case Tile::V: return kNorth | kSouth;
    case Tile::H: return kEast | kWest;
    case Tile::X: return kNorth | kEast | kSouth | kWest;
    case Tile::SE: return kSouth | kEast;
    case Tile::NW: return kNorth | kWest;
    case Tile::NE: return kNorth | kEast;
    case Tile::SW: return kSouth | kWest;
  }
  return 0;
}

char tile_char(Tile t) {
  static constexpr std::array<char, 8> c = {'.', '|', '-', '+', 'r', 'j', 'l', 'n'};
  return c[static_cast<int>(t)];
}

std::optional<Tile> tile_from_char(char c) {
  switch (c) {
    case '.': return Tile::Blank;
    case '|': return Tile::V;
    case '-': return Tile::H;
    case '+': return Tile::X;
    case 'r': return Tile::SE;
    case 'j': return Tile::NW;
    case 'l': return Tile::NE;
    case 'n': return Tile::SW;
    default: return std::nullopt;
  }
}

std::string Violation::str() const {
  return rule + " at (" + std::to_string(row) + "," + std::to_string(col) + "): " + detail;
}

Diagram::Diagram(int n, Mode mode) : n_(n), mode_(mode), tiles_(n * n, Tile::Blank) {
  if (n < 1) throw InvalidInput("diagram size must be >= 1");
}

Diagram::Diagram(int n, Mode mode, std::vector<Tile> tiles)
    : n_(n), mode_(mode), tiles_(std::move(tiles)) {
  if (n < 1) throw InvalidInput("diagram size must be >= 1");
  if (tiles_.size() != static_cast<size_t>(n) * n)
    throw InvalidInput("tile matrix is not n x n");
}

std::vector<Violation> Diagram::validate() const {
  std::vector<Violation> out;
  const bool bpd = mode_ == Mode::Bpd;
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      const Tile t = at(r, c);
      const bool legal = bpd ? (t != Tile::NE && t != Tile::SW)
                             : (t != Tile::SE && t != Tile::NW);
      if (!legal)
        out.push_back({"tile-legality", r, c,
                       std::string(1, tile_char(t)) + (bpd ? " not a BPD tile" : " not a co-BPD tile")});
      if (c < n_ && tile_has(t, kEast) != tile_has(at(r, c + 1), kWest))
        out.push_back({"edge-consistency", r, c, "E edge disagrees with W edge of right neighbor"});
      if (r < n_ && tile_has(t, kSouth) != tile_has(at(r + 1, c), kNorth))
        out.push_back({"edge-consistency", r, c, "S edge disagrees with N edge of cell below"});
    }
  }
  for (int c = 1; c <= n_; ++c) {
    const bool topN = tile_has(at(1, c), kNorth);
    const bool botS = tile_has(at(n_, c), kSouth);
    if (bpd) {
      if (topN) out.push_back({"boundary", 1, c, "top row must not touch N"});
      if (!botS) out.push_back({"boundary", n_, c, "bottom row must touch S"});
    } else {
      if (!topN) out.push_back({"boundary", 1, c, "top row must touch N"});
      if (botS) out.push_back({"boundary", n_, c, "bottom row must not touch S"});
    }
  }
  for (int r = 1; r <= n_; ++r) {
    if (!tile_has(at(r, n_), kEast))
      out.push_back({"boundary", r, n_, "last column must touch E"});
    if (tile_has(at(r, 1), kWest))
      out.push_back({"boundary", r, 1, "first column must not touch W"});
  }
  return out;
}

std::string Diagram::to_text() const {
  std::string s;
  for (int r = 1; r <= n_; ++r) {
    if (r > 1) s += '\n';
    for (int c = 1; c <= n_; ++c) s += tile_char(at(r, c));
  }
  return s;
}

Diagram Diagram::from_text(std::string_view s, std::optional<Mode> mode) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw ParseError("empty diagram", 1, 1);
  std::vector<Tile> tiles;
  tiles.reserve(static_cast<size_t>(n) * n);
  bool saw_bpd_elbow = false, saw_co_elbow = false;
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(lines[r].size()) != n)
      throw ParseError("row length " + std::to_string(lines[r].size()) + " in " +
                           std::to_string(n) + "-row diagram",
                       r + 1, static_cast<int>(lines[r].size()) + 1);
    for (int c = 0; c < n; ++c) {
      auto t = tile_from_char(lines[r][c]);
      if (!t) throw ParseError(std::string("unknown tile character '") + lines[r][c] + "'", r + 1, c + 1);
      if (*t == Tile::SE || *t == Tile::NW) saw_bpd_elbow = true;
      if (*t == Tile::NE || *t == Tile::SW) saw_co_elbow = true;
      tiles.push_back(*t);
    }
  }
  Mode m = mode.value_or(saw_co_elbow && !saw_bpd_elbow ? Mode::CoBpd : Mode::Bpd);
  return Diagram(n, m, std::move(tiles));
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 1; r <= n_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= n_; ++c) row.push_back(std::string(1, tile_char(at(r, c))));
    rows.push_back(std::move(row));
  }
  return {{"n", n_}, {"mode", mode_ == Mode::Bpd ? "bpd" : "cobpd"}, {"tiles", rows}};
}

Diagram Diagram::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const std::string ms = j.at("mode").get<std::string>();
  if (ms != "bpd" && ms != "cobpd") throw InvalidInput("mode must be 'bpd' or 'cobpd'");
  const auto& rows = j.at("tiles");
  if (static_cast<int>(rows.size()) != n) throw InvalidInput("tiles row count != n");
  std::vector<Tile> tiles;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("tiles column count != n");
    for (const auto& cell : row) {
      const std::string s = cell.get<std::string>();
      auto t = s.size() == 1 ? tile_from_char(s[0]) : std::nullopt;
      if (!t) throw InvalidInput("unknown tile '" + s + "'");
      tiles.push_back(*t);
    }
  }
  return Diagram(n, ms == "bpd" ? Mode::Bpd : Mode::CoBpd, std::move(tiles));
}

Diagram rothe_bpd(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  Diagram d(n, Mode::Bpd);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Tile t;
      if (j == w(i)) t = Tile::SE;
      else if (i > inv(j) && j > w(i)) t = Tile::X;
      else if (i > inv(j)) t = Tile::V;
      else if (j > w(i)) t = Tile::H;
      else t = Tile::Blank;
      d.set(i, j, t);
    }
  }
  return d;
}

Diagram co(const Diagram& d) {
  if (!d.is_valid()) throw InvalidInput("co: diagram is not valid");
  auto swap = [](Tile t) {
    switch (t) {
      case Tile::SE: return Tile::NE;
      case Tile::NE: return Tile::SE;
      case Tile::NW: return Tile::SW;
      case Tile::SW: return Tile::NW;
      case Tile::V: return Tile::Blank;
      case Tile::Blank: return Tile::V;
      case Tile::H: return Tile::X;
      case Tile::X: return Tile::H;
    }
    return t;
  };
  Diagram out(d.size(), d.mode() == Mode::Bpd ? Mode::CoBpd : Mode::Bpd);
  for (int r = 1; r <= d.size(); ++r)
    for (int c = 1; c <= d.size(); ++c) out.set(r, c, swap(d.at(r, c)));
  return out;
}

Diagram flip_vertical(const Diagram& d) {
  if (d.mode() != Mode::CoBpd) throw InvalidInput("flip_vertical expects a co-BPD");
  if (!d.is_valid()) throw InvalidInput("flip_vertical: diagram is not valid");
  auto reflect = [](Tile t) {
    switch (t) {
      case Tile::NE: return Tile::SE;
      case Tile::SW: return Tile::NW;
      case Tile::SE: return Tile::NE;
      case Tile::NW: return Tile::SW;
      default: return t;
    }
  };
  const int n = d.size();
  Diagram out(n, Mode::Bpd);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) out.set(n + 1 - r, c, reflect(d.at(r, c)));
  return out;
}

std::set<std::pair<int, int>> blank_cells(const Diagram& d) {
  std::set<std::pair<int, int>> out;
  for (int r = 1; r <= d.size(); ++r)
    for (int c = 1; c <= d.size(); ++c)
      if (d.at(r, c) == Tile::Blank) out.insert({r, c});
  return out;
}

std::set<std::pair<int, int>> elbow_cells(const Diagram& d) {
  std::set<std::pair<int, int>> out;
  for (int r = 1; r <= d.size(); ++r)
    for (int c = 1; c <= d.size(); ++c) {
      const Tile t = d.at(r, c);
      if (t == Tile::SE || t == Tile::NW || t == Tile::NE || t == Tile::SW)
        out.insert({r, c});
    }
  return out;
}

}  // namespace bpd
