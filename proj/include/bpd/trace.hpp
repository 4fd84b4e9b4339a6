#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bpd/diagram.hpp"
#include "bpd/perm.hpp"

namespace bpd {

struct TraceResult {
  Permutation perm;
  /// Unordered pipe-label pair (a < b) -> number of X cells where the pair meets.
  std::map<std::pair<int, int>, int> crossings;
  /// Cells where a repeat meeting was resolved as a turn.
  std::set<std::pair<int, int>> bumps;
  /// Row index per Blank tile / per NW (BPD) or SW (co-BPD) tile, sorted.
  std::vector<int> blank_rows, jay_rows;
  bool reduced = true;

  nlohmann::json to_json() const;
};

/// Label pipes 1..n left-to-right at entry (bottom for BPD, top for co-BPD)
/// and propagate cell by cell. A pair's first meeting at an X is a crossing;
/// every later meeting is a bump (the labels turn). perm_i is the label
/// exiting row i on the east.
TraceResult trace(const Diagram& d);

bool is_reduced(const Diagram& d);

struct PipeStep {
  int row, col;
  unsigned in_edge, out_edge;  // edge bits of this cell
};

struct PipePaths {
  Permutation perm;
  /// paths[label - 1]: the pipe's cells in travel (arc) order.
  std::vector<std::vector<PipeStep>> paths;
  struct Meeting {
    int row, col;
    int a, b;  // a < b
    bool bump;
  };
  std::vector<Meeting> meetings;

  /// Index of the step visiting (row, col) on the given pipe, or -1.
  int arc_index(int label, int row, int col) const;
  /// Label passing through (row, col) entering by one of the given edges, or 0.
  int label_at(int row, int col, unsigned in_edges) const;
};

/// Independent dataflow simulation: pipe heads advance one cell at a time and
/// X cells resolve once both labels have arrived. Same bump rule as trace().
PipePaths follow_pipes(const Diagram& d);

}  // namespace bpd
