#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bpd/perm.hpp"

namespace bpd {

/// The eight tile kinds, named by the edge pairs they connect.
/// Blank = {}, V = N-S, H = E-W, X = N-S + E-W,
/// SE = S-E ("are"), NW = N-W ("jay"), NE = N-E ("el"), SW = S-W ("en").
enum class Tile : std::uint8_t { Blank, V, H, X, SE, NW, NE, SW };

enum class Mode : std::uint8_t { Bpd, CoBpd };

// Edge bits.
inline constexpr unsigned kNorth = 1, kEast = 2, kSouth = 4, kWest = 8;

unsigned tile_edges(Tile t);
inline bool tile_has(Tile t, unsigned edge) { return (tile_edges(t) & edge) != 0; }

/// Text alphabet: '.'=Blank '|'=V '-'=H '+'=X 'r'=SE 'j'=NW 'l'=NE 'n'=SW.
char tile_char(Tile t);
std::optional<Tile> tile_from_char(char c);

struct Violation {
  std::string rule;  // "tile-legality", "edge-consistency", "boundary"
  int row, col;
  std::string detail;
  std::string str() const;
};

/// An n x n tile grid, (row, col) 1-indexed with row 1 at top.
class Diagram {
 public:
  Diagram(int n, Mode mode);  // all Blank
  Diagram(int n, Mode mode, std::vector<Tile> tiles);

  int size() const { return n_; }
  Mode mode() const { return mode_; }
  Tile at(int r, int c) const { return tiles_[(r - 1) * n_ + (c - 1)]; }
  void set(int r, int c, Tile t) { tiles_[(r - 1) * n_ + (c - 1)] = t; }

  std::vector<Violation> validate() const;
  bool is_valid() const { return validate().empty(); }

  std::string to_text() const;
  /// Mode is inferred from the elbow alphabet unless given explicitly.
  static Diagram from_text(std::string_view s, std::optional<Mode> mode = {});

  nlohmann::json to_json() const;
  static Diagram from_json(const nlohmann::json& j);

  auto operator<=>(const Diagram&) const = default;

 private:
  int n_;
  Mode mode_;
  std::vector<Tile> tiles_;
};

/// The canonical reduced BPD of w: SE at (i, w_i), X where both the row's and
/// column's pipes have already turned, V below a turn, H right of one, Blank
/// on the Rothe diagram.
Diagram rothe_bpd(const Permutation& w);

/// Tile exchange SE<->NE, NW<->SW, V<->Blank, H<->X; mode toggles.
Diagram co(const Diagram& d);

/// Reverse the rows of a co-BPD and reflect tiles N<->S; yields a BPD.
Diagram flip_vertical(const Diagram& d);

std::set<std::pair<int, int>> blank_cells(const Diagram& d);
std::set<std::pair<int, int>> elbow_cells(const Diagram& d);

}  // namespace bpd
